#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "phg/hypergraph.hpp"
#include "phg/quantum_state.hpp"

namespace phg {

// Linear-optical elements as pure hypergraph rewrites.

// Adds `delta` to the mode of every incidence on `path`.
Hypergraph apply_mode_shifter(const Hypergraph& h, std::string_view path, int delta);

// Multiplies each edge's weight by e^{i*phi*k}, k = number of its
// incidences on `path`.
Hypergraph apply_phase_shifter(const Hypergraph& h, std::string_view path, double phi);

// 50:50 symmetric convention: transmission keeps the path with factor
// 1/sqrt(2), reflection swaps it with factor i/sqrt(2). An edge with k
// incidences on the two paths expands into 2^k branch edges; the result is
// canonicalized so coherent merging shows interference.
Hypergraph apply_beam_splitter(const Hypergraph& h, std::string_view path_a,
                               std::string_view path_b);

// Aligns two output paths: every incidence on `merge` is relabeled to
// `keep` and the `merge` vertex disappears.
Hypergraph apply_path_identity(const Hypergraph& h, std::string_view keep,
                               std::string_view merge);

struct SweepRow {
    double phi = 0.0;
    std::string detector_set;  // detector ids joined with '+'
    double probability = 0.0;
};

// For each phase: build the setup, form the emission state of the given
// order, and evaluate every detector set. Rows ordered by phase, then by
// detector set order.
std::vector<SweepRow> interference_sweep(
    const std::function<Hypergraph(double)>& builder, int order,
    const std::vector<double>& phases,
    const std::vector<std::vector<std::string>>& detector_sets);

// CSV with header "phi,detset,probability"; phi with 9 decimal digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace phg
