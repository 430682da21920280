#include "phg/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace phg {

namespace {

// Shared state for the exact-cover backtracking search.
struct MatchingSearch {
    const Hypergraph& h;
    std::optional<std::size_t> limit;

    std::vector<std::vector<int>> usable_by_vertex;  // usable edge indices per vertex
    std::vector<char> vertex_covered;
    std::vector<char> edge_blocked;  // intersects a covered vertex
    std::vector<int> chosen;
    int uncovered = 0;

    std::vector<PerfectMatching> found;
    bool aborted = false;

    explicit MatchingSearch(const Hypergraph& graph, std::optional<std::size_t> lim)
        : h(graph), limit(lim) {
        const int nv = h.vertex_count();
        usable_by_vertex.assign(nv, {});
        vertex_covered.assign(nv, 0);
        edge_blocked.assign(h.edge_count(), 0);
        uncovered = nv;
        for (int e = 0; e < h.edge_count(); ++e) {
            if (h.edges()[e].has_repeated_vertex()) continue;  // can never exactly cover
            for (const auto& inc : h.edges()[e].on) usable_by_vertex[inc.vertex].push_back(e);
        }
    }

    void record() {
        PerfectMatching pm{chosen};
        std::sort(pm.edge_indices.begin(), pm.edge_indices.end());
        found.push_back(std::move(pm));
        if (limit && found.size() >= *limit) aborted = true;
    }

    bool edge_free(int e) const {
        if (edge_blocked[e]) return false;
        for (const auto& inc : h.edges()[e].on) {
            if (vertex_covered[inc.vertex]) return false;
        }
        return true;
    }

    void search() {
        if (aborted) return;
        if (uncovered == 0) {
            record();
            return;
        }
        // Minimum-remaining-edges vertex first; ties by lowest index.
        int best_vertex = -1;
        int best_count = -1;
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (vertex_covered[v]) continue;
            int count = 0;
            for (int e : usable_by_vertex[v]) {
                if (edge_free(e)) ++count;
            }
            if (best_vertex < 0 || count < best_count) {
                best_vertex = v;
                best_count = count;
                if (count == 0) break;
            }
        }
        if (best_count == 0) return;

        for (int e : usable_by_vertex[best_vertex]) {
            if (!edge_free(e)) continue;
            for (const auto& inc : h.edges()[e].on) {
                vertex_covered[inc.vertex] = 1;
                --uncovered;
            }
            chosen.push_back(e);
            search();
            chosen.pop_back();
            for (const auto& inc : h.edges()[e].on) {
                vertex_covered[inc.vertex] = 0;
                ++uncovered;
            }
            if (aborted) return;
        }
    }
};

}  // namespace

MatchingReport enumerate_perfect_matchings(const Hypergraph& h,
                                           std::optional<std::size_t> limit) {
    if (limit && *limit == 0) throw std::invalid_argument("enumeration limit must be positive");
    MatchingReport report;
    if (h.vertex_count() == 0) {
        report.matchings.push_back(PerfectMatching{});  // the empty cover
        report.count = 1;
        return report;
    }
    MatchingSearch search(h, limit);
    search.search();
    report.matchings = std::move(search.found);
    std::sort(report.matchings.begin(), report.matchings.end());
    report.count = report.matchings.size();
    report.truncated = search.aborted;
    return report;
}

bool has_perfect_matching(const Hypergraph& h) {
    return enumerate_perfect_matchings(h, 1).count > 0;
}

MatchingReport brute_force_pm_oracle(const Hypergraph& h) {
    const int ne = h.edge_count();
    const int nv = h.vertex_count();
    if (ne > 25) throw std::invalid_argument("brute-force oracle supports at most 25 edges");

    MatchingReport report;
    std::vector<int> cover_count(nv, 0);
    for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
        std::fill(cover_count.begin(), cover_count.end(), 0);
        bool ok = true;
        for (int e = 0; e < ne && ok; ++e) {
            if (!(mask & (1u << e))) continue;
            for (const auto& inc : h.edges()[e].on) {
                if (++cover_count[inc.vertex] > 1) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        for (int v = 0; v < nv; ++v) {
            if (cover_count[v] != 1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        PerfectMatching pm;
        for (int e = 0; e < ne; ++e) {
            if (mask & (1u << e)) pm.edge_indices.push_back(e);
        }
        report.matchings.push_back(std::move(pm));
    }
    std::sort(report.matchings.begin(), report.matchings.end());
    report.count = report.matchings.size();
    return report;
}

namespace {

// Branch-and-bound maximum independent set on the PM conflict graph.
// Include-first order over lexicographically sorted PMs, with strict
// improvement only, yields the lexicographically least maximum family.
struct DisjointFamilySearch {
    const std::vector<std::vector<char>>& conflicts;
    std::vector<int> current;
    std::vector<int> best;

    void run(const std::vector<int>& candidates) {
        if (current.size() + candidates.size() <= best.size()) return;
        if (candidates.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        const int pick = candidates.front();
        std::vector<int> included;
        for (std::size_t i = 1; i < candidates.size(); ++i) {
            if (!conflicts[pick][candidates[i]]) included.push_back(candidates[i]);
        }
        current.push_back(pick);
        run(included);
        current.pop_back();
        run({candidates.begin() + 1, candidates.end()});
    }
};

}  // namespace

std::vector<PerfectMatching> max_disjoint_pm_family(const Hypergraph& h,
                                                    std::size_t enumeration_cap) {
    MatchingReport report = enumerate_perfect_matchings(h, enumeration_cap);
    if (report.truncated)
        throw std::runtime_error("perfect-matching enumeration exceeded cap of " +
                                 std::to_string(enumeration_cap));
    const int n = static_cast<int>(report.matchings.size());
    std::vector<std::vector<char>> conflicts(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& a = report.matchings[i].edge_indices;
            const auto& b = report.matchings[j].edge_indices;
            // both sorted: linear intersection test
            bool share = false;
            for (std::size_t x = 0, y = 0; x < a.size() && y < b.size();) {
                if (a[x] == b[y]) {
                    share = true;
                    break;
                }
                if (a[x] < b[y]) ++x; else ++y;
            }
            conflicts[i][j] = conflicts[j][i] = share;
        }
    }
    DisjointFamilySearch search{conflicts, {}, {}};
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    search.run(all);

    std::vector<PerfectMatching> family;
    family.reserve(search.best.size());
    for (int i : search.best) family.push_back(report.matchings[i]);
    return family;
}

}  // namespace phg
