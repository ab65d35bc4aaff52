#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kakeya/errors.hpp"

namespace kakeya {

/// Simple graph on n <= 16 vertices with bitmask adjacency, plus the derived
/// list of maximal cliques and the size histogram k_i = number of maximal
/// cliques with i vertices. Isolated vertices count as maximal cliques of
/// size 1 (they contribute nothing to the C value).
struct CliqueGraph {
    int n = 0;
    std::array<std::uint16_t, 16> adj{};

    std::vector<std::uint16_t> max_cliques; // vertex masks, ascending
    std::array<int, 17> k_hist{};

    bool adjacent(int i, int j) const { return (adj[std::size_t(i)] >> j) & 1; }
    int edge_count() const;
};

CliqueGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// Complete list of maximal cliques by pivoting recursion over bitmask
/// candidate sets; exact for n <= 16. Also fills the histogram.
void compute_cliques(CliqueGraph& g);

/// True iff no edge lies in two maximal cliques.
bool edge_disjoint(const CliqueGraph& g);

/// C(G) = sum over i of k_i (i-1).
int c_value(const CliqueGraph& g);

bool triangle_free(const CliqueGraph& g);
bool is_bipartite(const CliqueGraph& g);

/// Bit position of edge (i,j), i<j, in the upper-triangle adjacency mask.
int edge_bit_index(int n, int i, int j);

/// Upper-triangle adjacency mask: bit b(i,j) for i<j in lexicographic order.
std::uint32_t adjacency_mask(const CliqueGraph& g);
CliqueGraph graph_from_mask(int n, std::uint32_t mask);

/// Minimum adjacency mask over all vertex permutations (n <= 8).
std::uint32_t canonical_form(const CliqueGraph& g);
bool isomorphic(const CliqueGraph& a, const CliqueGraph& b);
std::string canonical_hex(int n, std::uint32_t canon);

enum class GraphFilter { All, EdgeDisjointCliques };

/// One representative per isomorphism class (ascending canonical mask),
/// optionally restricted to graphs with edge-disjoint maximal cliques.
/// n <= 7.
std::vector<CliqueGraph> enumerate_graphs(int n, GraphFilter filter);

/// The sharpness graph for odd n >= 5: vertex sets W1, W2 of size (n-3)/2
/// and W3 = {x, y, z}; W1 complete to W2 and to x; y adjacent to the first
/// w2_prime vertices of W2 and to x; z adjacent to the rest of W2 and to x;
/// y adjacent to z. w2_prime = -1 selects the whole of W2 (the variant the
/// secant construction realizes). It has (n^2-1)/4 - (n-5)/2 edges, one
/// maximal clique of size 3 and C value (n^2-1)/4 - (n-3)/2.
CliqueGraph sporadic_graph(int n, int w2_prime = -1);

/// Certificate-style reports for the brute-force graph checks. All graphs
/// on n labeled vertices are enumerated, so these are exhaustive for n <= 7.
struct MantelReport {
    int n = 0;
    int bound = 0;              // floor(n^2/4)
    int max_edges_found = 0;    // over triangle-free graphs
    std::uint64_t extremal_count = 0;
    bool all_extremal_balanced_bipartite = false;
    std::uint64_t graphs_checked = 0;
    bool holds() const { return max_edges_found == bound && all_extremal_balanced_bipartite; }
};

MantelReport mantel_oracle(int n);

struct HansonToftReport {
    int n = 0;
    struct PerDeficit {
        int l = 0;
        int edges = 0;
        std::uint64_t graph_count = 0; // triangle-free with that many edges
        bool all_bipartite = false;
    };
    std::vector<PerDeficit> checked;   // l < floor(n/2) - 1
    int tight_l = 0;                   // l = floor(n/2) - 1
    bool tight_witness_exists = false; // non-bipartite triangle-free witness
    std::uint32_t tight_witness_canon = 0;
    bool holds() const {
        for (const auto& d : checked)
            if (!d.all_bipartite) return false;
        return true;
    }
};

HansonToftReport hanson_toft_oracle(int n);

/// Bipartition bookkeeping: parts (V1, V2) with |V1| >= |V2|,
/// delta = |V1| - ceil(n/2), and the count of cross pairs absent from the
/// graph, which must equal eps - delta^2 (n even) or eps - delta^2 - delta
/// (n odd) for delta within the stated bound.
struct BipartiteStructure {
    std::uint16_t part1 = 0, part2 = 0;
    int delta = 0;
    int removed_edges = 0;
    int eps = 0;
};

struct MainLemmaReport {
    int n = 0;
    int threshold = 0; // floor(n^2/4) - floor(n/2) + 1
    std::uint64_t qualifying = 0;
    std::uint64_t violations = 0;
    std::vector<std::uint32_t> violation_masks;
    int max_c_nonbipartite = -1; // over edge-disjoint-clique graphs
    std::uint64_t graphs_checked = 0;
    bool holds() const { return violations == 0; }
};

/// For every graph with edge-disjoint maximal cliques and C(G) above the
/// threshold: verifies the graph is bipartite and admits a
/// BipartiteStructure with the stated delta bound and removed-edge count.
MainLemmaReport main_lemma_oracle(int n);

/// Searches all 2-colorings for a bipartition satisfying the structure
/// claim; nullopt when none exists (in particular for non-bipartite input).
bool find_bipartite_structure(const CliqueGraph& g, int c, BipartiteStructure& out);

/// Named small graphs used by the census certificates: the 4 graphs on
/// 3 vertices, the 10 edge-disjoint-clique graphs on 4 vertices, and the
/// 4 graphs on 5 vertices with C >= 5.
struct NamedGraph {
    std::string name;
    int n;
    std::uint32_t canon;
};
const std::vector<NamedGraph>& named_graph_catalog();
std::string graph_name(int n, std::uint32_t canon);

} // namespace kakeya
