#pragma once

#include <optional>
#include <vector>

#include "phg/hypergraph.hpp"
#include "phg/quantum_state.hpp"

namespace phg {

struct DesignConstraints {
    int max_edges = 0;
    std::vector<int> degrees;  // allowed hyperedge degrees
    std::vector<int> modes;    // allowed mode alphabet
};

inline constexpr int kDesignerPoolLimit = 30;

// Exhaustive search over subsets of the candidate edge pool (unit-weight
// edges compatible with at least one target term), in lexicographic order,
// for a hypergraph whose post-selected state matches the target up to
// global phase. Subtrees are pruned as soon as a perfect matching with a
// pattern outside the target support appears, which is sound because unit
// weights cannot cancel. Returns the first hit, or nullopt after exhausting
// the constraint box; nullopt is a proof of non-existence within the box.
//
// The target must be normalized, coincidence-complete, and span at most 6
// vertices; the candidate pool must not exceed kDesignerPoolLimit.
std::optional<Hypergraph> designer_search(const QuantumState& target,
                                          const DesignConstraints& constraints);

}  // namespace phg
