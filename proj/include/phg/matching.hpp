#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "phg/hypergraph.hpp"

namespace phg {

// A subset of hyperedges covering every vertex exactly once; one N-fold
// coincidence term.
struct PerfectMatching {
    std::vector<int> edge_indices;  // sorted ascending
    auto operator<=>(const PerfectMatching&) const = default;
};

struct MatchingReport {
    std::vector<PerfectMatching> matchings;  // lexicographic by edge-index set
    std::size_t count = 0;                   // == matchings.size() unless truncated
    bool truncated = false;                  // an enumeration limit was hit
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Exact backtracking decision: branch on the uncovered vertex with the
// fewest usable edges. Empty vertex set counts as vacuously coverable.
bool has_perfect_matching(const Hypergraph& h);

// All perfect matchings in lexicographic order. If `limit` is given and
// reached, the search stops and `truncated` is set.
MatchingReport enumerate_perfect_matchings(const Hypergraph& h,
                                           std::optional<std::size_t> limit = std::nullopt);

// Maximum-cardinality family of pairwise edge-disjoint perfect matchings,
// found by exact branch-and-bound on the PM conflict graph. Ties are broken
// lexicographically. Throws if the PM count exceeds `enumeration_cap`.
std::vector<PerfectMatching> max_disjoint_pm_family(
    const Hypergraph& h, std::size_t enumeration_cap = kDefaultEnumerationCap);

// Independent test oracle: scans every edge subset for an exact cover.
// Requires at most 25 edges.
MatchingReport brute_force_pm_oracle(const Hypergraph& h);

}  // namespace phg
