#pragma once

#include <compare>
#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phg {

using Weight = std::complex<double>;

// Edges whose coherent weight sum falls below this magnitude are dropped
// during canonicalization; exact-cancellation terms from beam splitters
// must vanish.
inline constexpr double kMergeTolerance = 1e-12;

// One photon of a source: output path (dense vertex index) and mode number.
struct Incidence {
    int vertex = 0;
    int mode = 0;
    auto operator<=>(const Incidence&) const = default;
};

// An n-photon source: n incidences plus a complex amplitude. Repeated
// vertices are allowed (bunching after a beam splitter); such an edge can
// never be part of a perfect matching.
struct Hyperedge {
    std::vector<Incidence> on;
    Weight weight{1.0, 0.0};

    int degree() const { return static_cast<int>(on.size()); }
    bool has_repeated_vertex() const;
    bool operator==(const Hyperedge&) const = default;
};

// Weighted, mode-labeled hypergraph: the full description of an experiment.
// Vertex order is fixed at declaration; all pattern strings use this order.
// Immutable after construction; rewrites produce new values.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::vector<std::string> vertex_ids, std::vector<Hyperedge> edges);

    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // -1 if the id is not declared.
    int vertex_index(std::string_view id) const;
    // throws std::invalid_argument for unknown ids
    int require_vertex(std::string_view id) const;

    bool operator==(const Hypergraph&) const = default;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Hyperedge> edges_;
};

// Incidences named by vertex id, as they appear in input files and builders.
struct EdgeSpec {
    std::vector<std::pair<std::string, int>> on;
    Weight weight{1.0, 0.0};
};

Hypergraph build_hypergraph(const std::vector<std::string>& vertex_ids,
                            const std::vector<EdgeSpec>& edge_specs);

// Sorts each edge's incidences by (vertex, mode), merges edges with equal
// incidence multisets by summing weights, drops edges below kMergeTolerance,
// and sorts the edge list lexicographically. Idempotent.
Hypergraph canonicalize(const Hypergraph& h);

// Same vertex set, same canonical edge structure, weights within tol.
bool approx_equal(const Hypergraph& a, const Hypergraph& b, double tol = kMergeTolerance);

Weight polar_weight(double amplitude, double phase);

}  // namespace phg
