#include "kakeya/cliques.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace kakeya {

int edge_bit_index(int n, int i, int j) {
    // Upper triangle (i<j), lexicographic.
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

namespace {

int bit_index(int n, int i, int j) { return edge_bit_index(n, i, j); }

void check_vertex_budget(int n, int cap, const char* what) {
    if (n < 1 || n > cap)
        throw BudgetExceeded(std::string(what) + " supports 1 <= n <= " + std::to_string(cap));
}

struct CliqueCollector {
    const std::array<std::uint16_t, 16>* adj;
    std::vector<std::uint16_t>* out;

    void run(std::uint16_t r, std::uint16_t p, std::uint16_t x) {
        if (!p && !x) {
            out->push_back(r);
            return;
        }
        // Pivot on the vertex of P|X with most neighbours in P.
        std::uint16_t px = std::uint16_t(p | x);
        int pivot = -1, best = -1;
        for (std::uint16_t t = px; t;) {
            int u = std::countr_zero(t);
            t &= std::uint16_t(t - 1);
            int cnt = std::popcount(std::uint16_t(p & (*adj)[std::size_t(u)]));
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        std::uint16_t candidates = std::uint16_t(p & ~(*adj)[std::size_t(pivot)]);
        for (std::uint16_t t = candidates; t;) {
            int v = std::countr_zero(t);
            t &= std::uint16_t(t - 1);
            std::uint16_t vb = std::uint16_t(1u << v);
            run(std::uint16_t(r | vb), std::uint16_t(p & (*adj)[std::size_t(v)]),
                std::uint16_t(x & (*adj)[std::size_t(v)]));
            p = std::uint16_t(p & ~vb);
            x = std::uint16_t(x | vb);
        }
    }
};

} // namespace

int CliqueGraph::edge_count() const {
    int e = 0;
    for (int i = 0; i < n; ++i) e += std::popcount(adj[std::size_t(i)]);
    return e / 2;
}

CliqueGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    check_vertex_budget(n, 16, "graph_from_edges");
    CliqueGraph g;
    g.n = n;
    for (auto [i, j] : edges) {
        if (i == j || i < 0 || j < 0 || i >= n || j >= n)
            throw InvalidArgument("bad edge in graph_from_edges");
        g.adj[std::size_t(i)] |= std::uint16_t(1u << j);
        g.adj[std::size_t(j)] |= std::uint16_t(1u << i);
    }
    compute_cliques(g);
    return g;
}

void compute_cliques(CliqueGraph& g) {
    g.max_cliques.clear();
    g.k_hist.fill(0);
    std::uint16_t full = std::uint16_t((1u << g.n) - 1);
    CliqueCollector col{&g.adj, &g.max_cliques};
    col.run(0, full, 0);
    std::sort(g.max_cliques.begin(), g.max_cliques.end());
    for (std::uint16_t c : g.max_cliques) ++g.k_hist[std::size_t(std::popcount(c))];
}

bool edge_disjoint(const CliqueGraph& g) {
    for (std::size_t i = 0; i < g.max_cliques.size(); ++i)
        for (std::size_t j = i + 1; j < g.max_cliques.size(); ++j)
            if (std::popcount(std::uint16_t(g.max_cliques[i] & g.max_cliques[j])) >= 2)
                return false;
    return true;
}

int c_value(const CliqueGraph& g) {
    int c = 0;
    for (int i = 1; i <= g.n; ++i) c += g.k_hist[std::size_t(i)] * (i - 1);
    return c;
}

bool triangle_free(const CliqueGraph& g) {
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.adjacent(i, j) && (g.adj[std::size_t(i)] & g.adj[std::size_t(j)])) return false;
    return true;
}

bool is_bipartite(const CliqueGraph& g) {
    std::array<int, 16> color;
    color.fill(-1);
    for (int s = 0; s < g.n; ++s) {
        if (color[std::size_t(s)] != -1) continue;
        color[std::size_t(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (std::uint16_t t = g.adj[std::size_t(u)]; t;) {
                int v = std::countr_zero(t);
                t &= std::uint16_t(t - 1);
                if (color[std::size_t(v)] == -1) {
                    color[std::size_t(v)] = 1 - color[std::size_t(u)];
                    stack.push_back(v);
                } else if (color[std::size_t(v)] == color[std::size_t(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::uint32_t adjacency_mask(const CliqueGraph& g) {
    std::uint32_t m = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.adjacent(i, j)) m |= 1u << bit_index(g.n, i, j);
    return m;
}

CliqueGraph graph_from_mask(int n, std::uint32_t mask) {
    check_vertex_budget(n, 8, "graph_from_mask");
    CliqueGraph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((mask >> bit_index(n, i, j)) & 1) {
                g.adj[std::size_t(i)] |= std::uint16_t(1u << j);
                g.adj[std::size_t(j)] |= std::uint16_t(1u << i);
            }
    compute_cliques(g);
    return g;
}

std::uint32_t canonical_form(const CliqueGraph& g) {
    check_vertex_budget(g.n, 8, "canonical_form");
    std::array<int, 8> perm;
    std::iota(perm.begin(), perm.begin() + g.n, 0);
    std::uint32_t best = ~0u;
    do {
        std::uint32_t m = 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                if (g.adjacent(perm[std::size_t(i)], perm[std::size_t(j)]))
                    m |= 1u << bit_index(g.n, i, j);
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.begin() + g.n));
    return best;
}

bool isomorphic(const CliqueGraph& a, const CliqueGraph& b) {
    if (a.n != b.n) return false;
    return canonical_form(a) == canonical_form(b);
}

std::string canonical_hex(int n, std::uint32_t canon) {
    static const char* digits = "0123456789abcdef";
    int bits = n * (n - 1) / 2;
    int nibbles = std::max(1, (bits + 3) / 4);
    std::string s(std::size_t(nibbles), '0');
    for (int i = 0; i < nibbles; ++i)
        s[std::size_t(nibbles - 1 - i)] = digits[(canon >> (4 * i)) & 0xf];
    return s;
}

std::vector<CliqueGraph> enumerate_graphs(int n, GraphFilter filter) {
    check_vertex_budget(n, 7, "enumerate_graphs");
    int bits = n * (n - 1) / 2;
    // Bit permutation tables: image_bit[perm][b] is where edge bit b lands.
    std::array<int, 8> perm;
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::vector<std::vector<int>> bit_maps;
    do {
        std::vector<int> bm(std::size_t(bits), 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int pi = perm[std::size_t(i)], pj = perm[std::size_t(j)];
                if (pi > pj) std::swap(pi, pj);
                bm[std::size_t(bit_index(n, pi, pj))] = bit_index(n, i, j);
            }
        bit_maps.push_back(std::move(bm));
    } while (std::next_permutation(perm.begin(), perm.begin() + n));

    std::vector<CliqueGraph> out;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        bool canonical = true;
        for (const auto& bm : bit_maps) {
            std::uint32_t img = 0;
            for (int b = 0; b < bits; ++b)
                if ((mask >> b) & 1) img |= 1u << bm[std::size_t(b)];
            if (img < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        CliqueGraph g = graph_from_mask(n, mask);
        if (filter == GraphFilter::EdgeDisjointCliques && !edge_disjoint(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

CliqueGraph sporadic_graph(int n, int w2_prime) {
    if (n < 5 || n % 2 == 0) throw InvalidArgument("sporadic_graph requires odd n >= 5");
    if (n > 16) throw BudgetExceeded("sporadic_graph supports n <= 16");
    int h = (n - 3) / 2;
    if (w2_prime < 0) w2_prime = h;
    if (w2_prime > h) throw InvalidArgument("w2_prime exceeds |W2|");
    // W1 = [0,h), W2 = [h,2h), x = 2h, y = 2h+1, z = 2h+2.
    int x = 2 * h, y = 2 * h + 1, z = 2 * h + 2;
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < h; ++a) {
        for (int b = h; b < 2 * h; ++b) edges.emplace_back(a, b);
        edges.emplace_back(a, x);
    }
    for (int b = h; b < h + w2_prime; ++b) edges.emplace_back(y, b);
    for (int b = h + w2_prime; b < 2 * h; ++b) edges.emplace_back(z, b);
    edges.emplace_back(y, x);
    edges.emplace_back(z, x);
    edges.emplace_back(y, z);
    return graph_from_edges(n, edges);
}

MantelReport mantel_oracle(int n) {
    check_vertex_budget(n, 7, "mantel_oracle");
    MantelReport rep;
    rep.n = n;
    rep.bound = n * n / 4;
    int bits = n * (n - 1) / 2;
    std::uint64_t total = std::uint64_t(1) << bits;
    rep.graphs_checked = total;
    std::vector<std::uint32_t> extremal;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        CliqueGraph g;
        g.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((mask >> bit_index(n, i, j)) & 1) {
                    g.adj[std::size_t(i)] |= std::uint16_t(1u << j);
                    g.adj[std::size_t(j)] |= std::uint16_t(1u << i);
                }
        if (!triangle_free(g)) continue;
        int e = g.edge_count();
        if (e > rep.max_edges_found) {
            rep.max_edges_found = e;
            extremal.clear();
        }
        if (e == rep.max_edges_found) extremal.push_back(std::uint32_t(mask));
    }
    rep.extremal_count = extremal.size();
    // The unique extremal graph must be the balanced complete bipartite one.
    std::vector<std::pair<int, int>> kab;
    int a = (n + 1) / 2;
    for (int i = 0; i < a; ++i)
        for (int j = a; j < n; ++j) kab.emplace_back(i, j);
    std::uint32_t balanced = canonical_form(graph_from_edges(n, kab));
    rep.all_extremal_balanced_bipartite = true;
    for (std::uint32_t m : extremal)
        if (canonical_form(graph_from_mask(n, m)) != balanced) {
            rep.all_extremal_balanced_bipartite = false;
            break;
        }
    return rep;
}

HansonToftReport hanson_toft_oracle(int n) {
    check_vertex_budget(n, 7, "hanson_toft_oracle");
    HansonToftReport rep;
    rep.n = n;
    int bound = n * n / 4;
    int lmax = n / 2 - 1; // hypothesis requires l < lmax
    rep.tight_l = lmax;
    for (int l = 0; l < lmax; ++l)
        rep.checked.push_back({l, bound - l, 0, true});
    int bits = n * (n - 1) / 2;
    std::uint64_t total = std::uint64_t(1) << bits;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        CliqueGraph g;
        g.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((mask >> bit_index(n, i, j)) & 1) {
                    g.adj[std::size_t(i)] |= std::uint16_t(1u << j);
                    g.adj[std::size_t(j)] |= std::uint16_t(1u << i);
                }
        if (!triangle_free(g)) continue;
        int l = bound - g.edge_count();
        if (l < 0) continue;
        if (l < lmax) {
            auto& d = rep.checked[std::size_t(l)];
            ++d.graph_count;
            if (!is_bipartite(g)) d.all_bipartite = false;
        } else if (l == lmax && lmax >= 0 && !rep.tight_witness_exists) {
            if (!is_bipartite(g)) {
                rep.tight_witness_exists = true;
                rep.tight_witness_canon = canonical_form(g);
            }
        }
    }
    return rep;
}

bool find_bipartite_structure(const CliqueGraph& g, int c, BipartiteStructure& out) {
    // 2-color each component; odd cycles make the graph non-bipartite.
    std::array<int, 16> color;
    color.fill(-1);
    std::vector<std::uint16_t> comp_side0, comp_side1;
    for (int s = 0; s < g.n; ++s) {
        if (color[std::size_t(s)] != -1) continue;
        std::uint16_t side0 = 0, side1 = 0;
        color[std::size_t(s)] = 0;
        side0 |= std::uint16_t(1u << s);
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (std::uint16_t t = g.adj[std::size_t(u)]; t;) {
                int v = std::countr_zero(t);
                t &= std::uint16_t(t - 1);
                if (color[std::size_t(v)] == -1) {
                    color[std::size_t(v)] = 1 - color[std::size_t(u)];
                    (color[std::size_t(v)] == 0 ? side0 : side1) |= std::uint16_t(1u << v);
                    stack.push_back(v);
                } else if (color[std::size_t(v)] == color[std::size_t(u)]) {
                    return false;
                }
            }
        }
        comp_side0.push_back(side0);
        comp_side1.push_back(side1);
    }
    int ncomp = int(comp_side0.size());
    int edges = g.edge_count();
    bool even = g.n % 2 == 0;
    int eps = (g.n * g.n) / 4 - c;
    for (std::uint32_t flip = 0; flip < (1u << ncomp); ++flip) {
        std::uint16_t v1 = 0, v2 = 0;
        for (int k = 0; k < ncomp; ++k) {
            bool fl = (flip >> k) & 1;
            v1 |= fl ? comp_side1[std::size_t(k)] : comp_side0[std::size_t(k)];
            v2 |= fl ? comp_side0[std::size_t(k)] : comp_side1[std::size_t(k)];
        }
        if (std::popcount(v1) < std::popcount(v2)) std::swap(v1, v2);
        int s1 = std::popcount(v1), s2 = std::popcount(v2);
        int delta = s1 - (g.n + 1) / 2;
        if (delta < 0) continue;
        int removed = s1 * s2 - edges;
        int expected = even ? eps - delta * delta : eps - delta * delta - delta;
        bool delta_ok = even ? delta * delta <= eps : delta * delta + delta <= eps;
        if (delta_ok && removed == expected && removed >= 0) {
            out = {v1, v2, delta, removed, eps};
            return true;
        }
    }
    return false;
}

MainLemmaReport main_lemma_oracle(int n) {
    check_vertex_budget(n, 7, "main_lemma_oracle");
    MainLemmaReport rep;
    rep.n = n;
    rep.threshold = n * n / 4 - n / 2 + 1;
    int bits = n * (n - 1) / 2;
    std::uint64_t total = std::uint64_t(1) << bits;
    rep.graphs_checked = total;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        CliqueGraph g;
        g.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((mask >> bit_index(n, i, j)) & 1) {
                    g.adj[std::size_t(i)] |= std::uint16_t(1u << j);
                    g.adj[std::size_t(j)] |= std::uint16_t(1u << i);
                }
        compute_cliques(g);
        if (!edge_disjoint(g)) continue;
        int c = c_value(g);
        if (!is_bipartite(g)) rep.max_c_nonbipartite = std::max(rep.max_c_nonbipartite, c);
        if (c <= rep.threshold) continue;
        ++rep.qualifying;
        BipartiteStructure bs;
        if (!find_bipartite_structure(g, c, bs)) {
            ++rep.violations;
            if (rep.violation_masks.size() < 16) rep.violation_masks.push_back(std::uint32_t(mask));
        }
    }
    return rep;
}

const std::vector<NamedGraph>& named_graph_catalog() {
    static const std::vector<NamedGraph> catalog = [] {
        auto canon = [](int n, std::vector<std::pair<int, int>> e) {
            return canonical_form(graph_from_edges(n, e));
        };
        std::vector<NamedGraph> v;
        // 3 vertices: empty, one edge, path, triangle.
        v.push_back({"f1", 3, canon(3, {})});
        v.push_back({"f2", 3, canon(3, {{0, 1}})});
        v.push_back({"f3", 3, canon(3, {{0, 2}, {1, 2}})});
        v.push_back({"f4", 3, canon(3, {{0, 1}, {0, 2}, {1, 2}})});
        // 4 vertices, the ten graphs with edge-disjoint maximal cliques.
        v.push_back({"m1", 4, canon(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})});
        v.push_back({"m2", 4, canon(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
        v.push_back({"m3", 4, canon(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}})});
        v.push_back({"m4", 4, canon(4, {{0, 1}, {1, 2}, {2, 3}})});
        v.push_back({"m5", 4, canon(4, {{0, 1}, {0, 2}, {0, 3}})});
        v.push_back({"m6", 4, canon(4, {{0, 1}, {0, 2}, {1, 2}})});
        v.push_back({"m7", 4, canon(4, {{0, 1}, {1, 2}})});
        v.push_back({"m8", 4, canon(4, {{0, 1}, {2, 3}})});
        v.push_back({"m9", 4, canon(4, {{0, 1}})});
        v.push_back({"m10", 4, canon(4, {})});
        // 5 vertices, the graphs with C >= 5.
        v.push_back({"d1", 5, canon(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})});
        v.push_back({"d2", 5, canon(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}})});
        v.push_back({"d3", 5, canon(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {2, 4}})});
        v.push_back({"d4", 5, canon(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})});
        return v;
    }();
    return catalog;
}

std::string graph_name(int n, std::uint32_t canon) {
    for (const NamedGraph& g : named_graph_catalog())
        if (g.n == n && g.canon == canon) return g.name;
    return "";
}

} // namespace kakeya
