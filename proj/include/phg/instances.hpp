#pragma once

#include <string>

#include "phg/hypergraph.hpp"
#include "phg/quantum_state.hpp"

namespace phg {

// Generators for the library's standard constructions. Source amplitudes
// follow the convention |weight|^2 = creation probability, so 1-photon
// edges carry sqrt(p1) and 2-photon edges sqrt(p2). Every generator
// verifies its own perfect-matching structure by enumeration before
// returning. All outputs are canonical.

// Four pair sources in a cycle; two perfect matchings giving
// (|0000> + |1111>)/sqrt(2).
Hypergraph gen_fig2_ghz4();

// One 1-photon source per mode plus pair chains; exactly two perfect
// matchings for any p1, p2, giving an m-particle 2-dimensional GHZ state
// (odd m >= 3).
Hypergraph gen_odd_ghz(int m, double p1, double p2);

// Three singles plus three pairs: matchings |000>, |111>, |222> of
// amplitude sqrt(p1*p2) and the maverick |012> of amplitude p1^{3/2}.
Hypergraph gen_fig5_ghz3d3(double p1, double p2);

// Mode-1 single on every path plus a mode-0 pair cycle (odd m >= 3): m
// one-excitation matchings, the all-singles maverick, and the unavoidable
// single+pair mixtures, all suppressed when p1^2 << p2.
Hypergraph gen_w_state(int m, double p1, double p2);

// Four full-amplitude matchings reproducing
// (|000> + |111> + |222> + |330>)/2 plus one suppressed maverick |120>.
Hypergraph gen_fig7_srv443(double p1, double p2);

// Complete 3-uniform hypergraph on 6 vertices; complementary triples share
// a common mode 0..9, so the 10 disjoint matchings give a 10-dimensional
// 6-particle GHZ state.
Hypergraph gen_fig8_ghz6d10();

// All 3-subsets of 9 vertices meeting the pair {v0, v1}: 49 hyperedges,
// no perfect matching, and adding any absent triple creates one.
Hypergraph gen_fig9_no_pm();

// All n-subsets of 2n vertices, unit weights.
Hypergraph gen_complete_uniform(int n);

// Two pair sources with their idler paths already aligned; the relative
// pump phase sits on the second source.
Hypergraph gen_zwm(double phi);

// Two 3-photon sources sharing the aligned third path.
Hypergraph gen_two_source_3photon(double phi);

// Parsed form of instance strings such as "w_state:m=5,p1=1e-4,p2=1e-2".
struct InstanceParams {
    int m = 3;
    int n = 2;
    double p1 = 0.01;
    double p2 = 0.01;
    double phi = 0.0;
};

Hypergraph gen_instance(const std::string& name, const InstanceParams& params);
Hypergraph gen_instance(const std::string& id_string);
InstanceParams parse_instance_params(const std::string& id_string, std::string& name_out);

// Size of the maximum disjoint perfect-matching family on
// complete_uniform(n); the largest GHZ dimension reachable with two
// n-photon sources. Supported for 2 <= n <= 5.
int max_ghz_dimension(int n);

// True iff the post-selected state of `h` matches `target` up to global
// phase (fidelity >= 1 - 1e-9).
bool verify_design(const Hypergraph& h, const QuantumState& target);

}  // namespace phg
