#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "kakeya/kakeya.hpp"

namespace kakeya {

/// Configuration of an exhaustive enumeration run. With a threshold, only
/// line sets covering fewer than `threshold` points are counted and the
/// depth-first search prunes branches whose coverage lower bound already
/// reaches it. Full enumeration is supported for q <= 4; q = 5 requires a
/// threshold. Symmetry reduction fixes the first conic point's line to a
/// single orbit representative under translations and scales all census
/// counts by q^2.
struct SearchConfig {
    unsigned q = 2;
    std::optional<int> threshold;
    bool symmetry_reduction = false;
    int workers = 1;
};

/// Census bucket: covered size, canonical form of the intersection graph,
/// recognition variant (0 split, 1 secant, 2 other) and the normalized
/// split sizes (lo <= hi; -1 for variant 2).
struct CensusKey {
    int size = 0;
    std::uint32_t canon = 0;
    int variant = 2;
    int k_lo = -1, k_hi = -1;

    auto operator<=>(const CensusKey&) const = default;
};

struct ClassificationReport {
    SearchConfig config;
    int scale = 1; // census multiplier (q^2 under symmetry reduction)
    std::uint64_t sets_enumerated = 0;
    std::uint64_t leaves_visited = 0;
    std::uint64_t nodes_visited = 0;
    std::uint64_t pruned_branches = 0;
    std::map<CensusKey, std::uint64_t> census;
    std::uint64_t complete_gamma_sets = 0;       // sets whose graph is complete
    std::uint64_t complete_gamma_concurrent = 0; // of those, through one point
    std::vector<nlohmann::json> unexplained; // non-split sets below the bound
    int theorem_threshold = 0;

    std::map<int, std::uint64_t> size_histogram() const;
    int min_size() const;
};

/// Size bound of the classification statement: every line set covering
/// fewer points is a regulus split. 3(q^2-1)/4 + q for odd q,
/// 3q^2/4 + q - 1 for even q.
int classification_threshold(unsigned q);

/// Depth-first assignment of one candidate line per conic point in index
/// order, with coverage tracked in bitsets. Reports are bit-exact
/// reproducible for a fixed config, independent of the worker count.
ClassificationReport enumerate_all(const SearchConfig& config);

nlohmann::json report_to_json(const ClassificationReport& r);

struct VerifyResult {
    bool verified = false;
    nlohmann::json certificate;
};

/// Every enumerated set below the classification threshold must be a
/// regulus split; the certificate lists per-split counts and any
/// counterexamples verbatim. q = 2 yields a vacuous certificate (no set is
/// smaller than the bound).
VerifyResult verify_theorem(const ClassificationReport& r);

/// Exact census checks for q = 2, 3, 4: realized graph types per size,
/// their recognition variants, and the concurrency of complete-graph sets.
/// Requires an unthresholded report.
VerifyResult verify_remark_census(const ClassificationReport& r);

/// No q = 4 line set has a 5-cycle intersection graph, although the
/// 5-cycle does occur among abstract graphs with edge-disjoint maximal
/// cliques and C = 5. Vacuous for q < 4 (fewer than 5 lines).
VerifyResult verify_pentagon_excluded(const ClassificationReport& r);

} // namespace kakeya
