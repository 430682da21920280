#pragma once

#include <array>
#include <map>
#include <vector>

#include "phg/hypergraph.hpp"

namespace phg {

// Sorted multiset of (vertex, mode) occupations. Coincidence-complete means
// every vertex of the experiment appears exactly once.
using PhotonPattern = std::vector<Incidence>;

inline constexpr double kAmplitudeTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kRankThreshold = 1e-9;  // relative to largest singular value

// Sparse superposition over photon patterns.
struct QuantumState {
    std::map<PhotonPattern, Weight> terms;
    bool normalized = false;

    double norm_squared() const;
    bool empty() const { return terms.empty(); }
};

QuantumState normalize(QuantumState state);
bool is_coincidence_complete(const PhotonPattern& pattern, int vertex_count);

// Coherent superposition of all perfect matchings: amplitude is the product
// of the matching's edge weights, the pattern each vertex's mode under its
// covering edge. Normalized unless no matching survives.
QuantumState post_selected_state(const Hypergraph& h);

// Superposition over all size-`order` edge subsets with pairwise-disjoint
// vertex supports. `emission_terms` keeps raw amplitudes (for norm checks),
// `emission_state` normalizes.
QuantumState emission_terms(const Hypergraph& h, int order);
QuantumState emission_state(const Hypergraph& h, int order);

// |<target|psi>|^2. Both states must be normalized.
double fidelity(const QuantumState& psi, const QuantumState& target);

// Probability of finding exactly one photon at every listed vertex (any
// mode), with no constraint elsewhere. The id-based overload rejects
// undeclared detector paths.
double detection_probability(const QuantumState& psi, const std::vector<int>& detectors);
double detection_probability(const QuantumState& psi, const Hypergraph& h,
                             const std::vector<std::string>& detector_ids);

// Sorted ranks of the three single-party reduced density matrices.
struct SrvTriple {
    int a = 0, b = 0, c = 0;  // a >= b >= c
    bool operator==(const SrvTriple&) const = default;
};

SrvTriple srv(const QuantumState& psi, const std::array<std::vector<int>, 3>& parties);

// 1 + min(1+(A-B), C) + min(1+(A-C), B-1) >= A, evaluated literally.
bool srv_constructible(int A, int B, int C);

QuantumState ghz_state(int particles, int dimension);
QuantumState w_state(int particles);

}  // namespace phg
