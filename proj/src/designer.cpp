#include "phg/designer.hpp"

#include <algorithm>
#include <stdexcept>

#include "phg/matching.hpp"

namespace phg {

namespace {

std::vector<std::vector<int>> k_subsets_of(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto extend = [&](auto&& self, int start) -> void {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (int v = start; v < n; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

// An edge is worth considering only if some target term assigns exactly its
// modes to its vertices; anything else can only ever feed maverick terms.
bool compatible_with_target(const std::vector<Incidence>& on, const QuantumState& target) {
    for (const auto& [pattern, amp] : target.terms) {
        bool ok = true;
        for (const auto& inc : on) {
            if (pattern[inc.vertex].mode != inc.mode) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

struct DesignSearch {
    const QuantumState& target;
    const std::vector<Hyperedge>& pool;
    const std::vector<std::string>& vertex_ids;
    int max_edges;

    std::vector<Hyperedge> chosen;
    std::optional<Hypergraph> found;

    // True when the current subgraph cannot be extended to a match.
    bool prune_or_match() {
        const Hypergraph candidate(vertex_ids, chosen);
        const auto report = enumerate_perfect_matchings(candidate);
        for (const auto& pm : report.matchings) {
            PhotonPattern pattern;
            for (int e : pm.edge_indices) {
                for (const auto& inc : candidate.edges()[e].on) pattern.push_back(inc);
            }
            std::sort(pattern.begin(), pattern.end());
            if (!target.terms.count(pattern)) return true;  // maverick: unit weights never cancel
        }
        if (report.count > 0) {
            const QuantumState psi = post_selected_state(candidate);
            if (psi.normalized && fidelity(psi, target) >= 1.0 - 1e-9) {
                found = canonicalize(candidate);
            }
        }
        return false;
    }

    void run(std::size_t next) {
        if (found) return;
        if (next == pool.size() || static_cast<int>(chosen.size()) == max_edges) return;
        chosen.push_back(pool[next]);
        const bool dead = prune_or_match();
        if (!found && !dead) run(next + 1);
        chosen.pop_back();
        if (found) return;
        run(next + 1);
    }
};

}  // namespace

std::optional<Hypergraph> designer_search(const QuantumState& target,
                                          const DesignConstraints& constraints) {
    if (!target.normalized) throw std::invalid_argument("designer target must be normalized");
    if (target.terms.empty()) throw std::invalid_argument("designer target must be nonempty");
    const int nv = static_cast<int>(target.terms.begin()->first.size());
    if (nv < 1 || nv > 6) throw std::invalid_argument("designer supports 1 to 6 vertices");
    for (const auto& [pattern, amp] : target.terms) {
        if (!is_coincidence_complete(pattern, nv))
            throw std::invalid_argument("designer target patterns must be coincidence-complete");
    }
    if (constraints.max_edges < 1) throw std::invalid_argument("max_edges must be >= 1");

    std::vector<std::string> vertex_ids;
    for (int v = 0; v < nv; ++v) vertex_ids.push_back(std::string(1, static_cast<char>('a' + v)));

    std::vector<int> degrees = constraints.degrees;
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    std::vector<int> modes = constraints.modes;
    std::sort(modes.begin(), modes.end());
    modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
    for (int d : degrees) {
        if (d < 1 || d > nv) throw std::invalid_argument("edge degree out of range");
    }
    for (int m : modes) {
        if (m < 0) throw std::invalid_argument("negative mode in alphabet");
    }

    std::vector<Hyperedge> pool;
    for (int d : degrees) {
        for (const auto& support : k_subsets_of(nv, d)) {
            std::vector<int> assignment(d, 0);
            auto fill = [&](auto&& self, int pos) -> void {
                if (pos == d) {
                    Hyperedge e;
                    for (int i = 0; i < d; ++i) e.on.push_back({support[i], modes[assignment[i]]});
                    if (compatible_with_target(e.on, target)) pool.push_back(std::move(e));
                    return;
                }
                for (int i = 0; i < static_cast<int>(modes.size()); ++i) {
                    assignment[pos] = i;
                    self(self, pos + 1);
                }
            };
            fill(fill, 0);
        }
    }
    std::sort(pool.begin(), pool.end(),
              [](const Hyperedge& a, const Hyperedge& b) { return a.on < b.on; });
    if (static_cast<int>(pool.size()) > kDesignerPoolLimit)
        throw std::invalid_argument("designer candidate pool exceeds " +
                                    std::to_string(kDesignerPoolLimit) + " edges");

    DesignSearch search{target, pool, vertex_ids, constraints.max_edges, {}, std::nullopt};
    search.run(0);
    return search.found;
}

}  // namespace phg
