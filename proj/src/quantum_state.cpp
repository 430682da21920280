#include "phg/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "phg/matching.hpp"

namespace phg {

double QuantumState::norm_squared() const {
    double total = 0.0;
    for (const auto& [pattern, amp] : terms) total += std::norm(amp);
    return total;
}

QuantumState normalize(QuantumState state) {
    const double n2 = state.norm_squared();
    if (n2 <= 0.0) {
        state.normalized = false;
        return state;
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto& [pattern, amp] : state.terms) amp *= scale;
    state.normalized = true;
    return state;
}

bool is_coincidence_complete(const PhotonPattern& pattern, int vertex_count) {
    if (static_cast<int>(pattern.size()) != vertex_count) return false;
    for (int v = 0; v < vertex_count; ++v) {
        if (pattern[v].vertex != v) return false;  // pattern is sorted by vertex
    }
    return true;
}

namespace {

void prune_tiny_terms(QuantumState& state) {
    for (auto it = state.terms.begin(); it != state.terms.end();) {
        if (std::abs(it->second) < kAmplitudeTolerance) it = state.terms.erase(it);
        else ++it;
    }
}

PhotonPattern pattern_of_edges(const Hypergraph& h, const std::vector<int>& edge_indices) {
    PhotonPattern pattern;
    for (int e : edge_indices) {
        for (const auto& inc : h.edges()[e].on) pattern.push_back(inc);
    }
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

Weight product_weight(const Hypergraph& h, const std::vector<int>& edge_indices) {
    Weight w{1.0, 0.0};
    for (int e : edge_indices) w *= h.edges()[e].weight;
    return w;
}

}  // namespace

QuantumState post_selected_state(const Hypergraph& h) {
    QuantumState state;
    const MatchingReport report = enumerate_perfect_matchings(h);
    for (const auto& pm : report.matchings) {
        state.terms[pattern_of_edges(h, pm.edge_indices)] += product_weight(h, pm.edge_indices);
    }
    prune_tiny_terms(state);
    return normalize(std::move(state));
}

QuantumState emission_terms(const Hypergraph& h, int order) {
    if (order < 1) throw std::invalid_argument("emission order must be >= 1");
    QuantumState state;

    // Bunched edges are excluded: their own support is not vertex-disjoint.
    std::vector<int> usable;
    for (int e = 0; e < h.edge_count(); ++e) {
        if (!h.edges()[e].has_repeated_vertex()) usable.push_back(e);
    }

    std::vector<char> occupied(h.vertex_count(), 0);
    std::vector<int> subset;
    auto extend = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(subset.size()) == order) {
            state.terms[pattern_of_edges(h, subset)] += product_weight(h, subset);
            return;
        }
        for (std::size_t i = start; i < usable.size(); ++i) {
            const int e = usable[i];
            bool disjoint = true;
            for (const auto& inc : h.edges()[e].on) {
                if (occupied[inc.vertex]) {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) continue;
            for (const auto& inc : h.edges()[e].on) occupied[inc.vertex] = 1;
            subset.push_back(e);
            self(self, i + 1);
            subset.pop_back();
            for (const auto& inc : h.edges()[e].on) occupied[inc.vertex] = 0;
        }
    };
    extend(extend, 0);
    prune_tiny_terms(state);
    return state;
}

QuantumState emission_state(const Hypergraph& h, int order) {
    return normalize(emission_terms(h, order));
}

double fidelity(const QuantumState& psi, const QuantumState& target) {
    if (!psi.normalized || !target.normalized)
        throw std::invalid_argument("fidelity requires normalized states");
    Weight overlap{0.0, 0.0};
    for (const auto& [pattern, amp] : psi.terms) {
        auto it = target.terms.find(pattern);
        if (it != target.terms.end()) overlap += std::conj(it->second) * amp;
    }
    return std::norm(overlap);
}

double detection_probability(const QuantumState& psi, const std::vector<int>& detectors) {
    if (!psi.normalized) throw std::invalid_argument("detection requires a normalized state");
    double probability = 0.0;
    for (const auto& [pattern, amp] : psi.terms) {
        bool selected = true;
        for (int d : detectors) {
            if (d < 0) throw std::invalid_argument("unknown detector vertex");
            int count = 0;
            for (const auto& inc : pattern) {
                if (inc.vertex == d) ++count;
            }
            if (count != 1) {
                selected = false;
                break;
            }
        }
        if (selected) probability += std::norm(amp);
    }
    return probability;
}

double detection_probability(const QuantumState& psi, const Hypergraph& h,
                             const std::vector<std::string>& detector_ids) {
    std::vector<int> detectors;
    detectors.reserve(detector_ids.size());
    for (const auto& id : detector_ids) detectors.push_back(h.require_vertex(id));
    return detection_probability(psi, detectors);
}

namespace {

int numeric_rank(const Eigen::MatrixXcd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0) return 0;
    const double cutoff = kRankThreshold * sigma(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff && sigma(i) > 0.0) ++rank;
    }
    return rank;
}

}  // namespace

SrvTriple srv(const QuantumState& psi, const std::array<std::vector<int>, 3>& parties) {
    if (!psi.normalized) throw std::invalid_argument("srv requires a normalized state");

    std::vector<int> block_of;  // vertex -> party
    int vertex_count = 0;
    for (const auto& block : parties) vertex_count += static_cast<int>(block.size());
    block_of.assign(vertex_count, -1);
    for (int p = 0; p < 3; ++p) {
        if (parties[p].empty()) throw std::invalid_argument("srv party blocks must be nonempty");
        for (int v : parties[p]) {
            if (v < 0 || v >= vertex_count || block_of[v] != -1)
                throw std::invalid_argument("srv parties must partition the vertex set");
            block_of[v] = p;
        }
    }
    for (const auto& [pattern, amp] : psi.terms) {
        if (!is_coincidence_complete(pattern, vertex_count))
            throw std::invalid_argument("srv requires coincidence-complete patterns");
    }

    std::array<int, 3> ranks{};
    for (int p = 0; p < 3; ++p) {
        // Coefficient matrix: rows indexed by the party's mode assignment,
        // columns by the complement's.
        std::map<std::vector<int>, int> row_index, col_index;
        std::vector<std::tuple<int, int, Weight>> entries;
        for (const auto& [pattern, amp] : psi.terms) {
            std::vector<int> row_key, col_key;
            for (const auto& inc : pattern) {
                if (block_of[inc.vertex] == p) row_key.push_back(inc.mode);
                else col_key.push_back(inc.mode);
            }
            const int r = static_cast<int>(row_index.emplace(row_key, row_index.size()).first->second);
            const int c = static_cast<int>(col_index.emplace(col_key, col_index.size()).first->second);
            entries.emplace_back(r, c, amp);
        }
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(row_index.size()),
                                                    static_cast<Eigen::Index>(col_index.size()));
        for (const auto& [r, c, amp] : entries) m(r, c) += amp;
        ranks[p] = numeric_rank(m);
    }
    std::sort(ranks.begin(), ranks.end(), std::greater<int>());
    return SrvTriple{ranks[0], ranks[1], ranks[2]};
}

bool srv_constructible(int A, int B, int C) {
    if (!(A >= B && B >= C && C >= 1))
        throw std::invalid_argument("srv triple must satisfy A >= B >= C >= 1");
    return 1 + std::min(1 + (A - B), C) + std::min(1 + (A - C), B - 1) >= A;
}

QuantumState ghz_state(int particles, int dimension) {
    if (particles < 2) throw std::invalid_argument("ghz_state needs at least 2 particles");
    if (dimension < 2) throw std::invalid_argument("ghz_state needs dimension >= 2");
    QuantumState state;
    const double amp = 1.0 / std::sqrt(static_cast<double>(dimension));
    for (int i = 0; i < dimension; ++i) {
        PhotonPattern pattern;
        for (int v = 0; v < particles; ++v) pattern.push_back({v, i});
        state.terms[pattern] = Weight{amp, 0.0};
    }
    state.normalized = true;
    return state;
}

QuantumState w_state(int particles) {
    if (particles < 3) throw std::invalid_argument("w_state needs at least 3 particles");
    QuantumState state;
    const double amp = 1.0 / std::sqrt(static_cast<double>(particles));
    for (int excited = 0; excited < particles; ++excited) {
        PhotonPattern pattern;
        for (int v = 0; v < particles; ++v) pattern.push_back({v, v == excited ? 1 : 0});
        state.terms[pattern] = Weight{amp, 0.0};
    }
    state.normalized = true;
    return state;
}

}  // namespace phg
