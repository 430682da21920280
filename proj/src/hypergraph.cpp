#include "phg/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace phg {

bool Hyperedge::has_repeated_vertex() const {
    for (std::size_t i = 0; i < on.size(); ++i) {
        for (std::size_t j = i + 1; j < on.size(); ++j) {
            if (on[i].vertex == on[j].vertex) return true;
        }
    }
    return false;
}

Hypergraph::Hypergraph(std::vector<std::string> vertex_ids, std::vector<Hyperedge> edges)
    : vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
    std::set<std::string_view> seen;
    for (const auto& id : vertex_ids_) {
        if (id.empty()) throw std::invalid_argument("empty vertex id");
        if (!seen.insert(id).second)
            throw std::invalid_argument("duplicate vertex id: " + id);
    }
    const int nv = vertex_count();
    for (const auto& e : edges_) {
        if (e.on.empty()) throw std::invalid_argument("hyperedge with empty incidence list");
        for (const auto& inc : e.on) {
            if (inc.vertex < 0 || inc.vertex >= nv)
                throw std::invalid_argument("incidence references undeclared vertex index " +
                                            std::to_string(inc.vertex));
            if (inc.mode < 0)
                throw std::invalid_argument("negative mode number");
        }
        if (!std::isfinite(e.weight.real()) || !std::isfinite(e.weight.imag()))
            throw std::invalid_argument("non-finite edge weight");
    }
}

int Hypergraph::vertex_index(std::string_view id) const {
    for (int i = 0; i < vertex_count(); ++i) {
        if (vertex_ids_[i] == id) return i;
    }
    return -1;
}

int Hypergraph::require_vertex(std::string_view id) const {
    const int idx = vertex_index(id);
    if (idx < 0) throw std::invalid_argument("unknown vertex id: " + std::string(id));
    return idx;
}

Hypergraph build_hypergraph(const std::vector<std::string>& vertex_ids,
                            const std::vector<EdgeSpec>& edge_specs) {
    Hypergraph empty(vertex_ids, {});
    std::vector<Hyperedge> edges;
    edges.reserve(edge_specs.size());
    for (const auto& spec : edge_specs) {
        Hyperedge e;
        e.weight = spec.weight;
        e.on.reserve(spec.on.size());
        for (const auto& [id, mode] : spec.on) {
            e.on.push_back({empty.require_vertex(id), mode});
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(vertex_ids, std::move(edges));
}

Hypergraph canonicalize(const Hypergraph& h) {
    std::map<std::vector<Incidence>, Weight> merged;
    for (const auto& e : h.edges()) {
        auto key = e.on;
        std::sort(key.begin(), key.end());
        merged[std::move(key)] += e.weight;
    }
    std::vector<Hyperedge> edges;
    edges.reserve(merged.size());
    for (auto& [on, w] : merged) {
        if (std::abs(w) < kMergeTolerance) continue;  // coherent cancellation
        edges.push_back({on, w});
    }
    return Hypergraph(h.vertex_ids(), std::move(edges));
}

bool approx_equal(const Hypergraph& a, const Hypergraph& b, double tol) {
    if (a.vertex_ids() != b.vertex_ids()) return false;
    const Hypergraph ca = canonicalize(a);
    const Hypergraph cb = canonicalize(b);
    if (ca.edge_count() != cb.edge_count()) return false;
    for (int i = 0; i < ca.edge_count(); ++i) {
        if (ca.edges()[i].on != cb.edges()[i].on) return false;
        if (std::abs(ca.edges()[i].weight - cb.edges()[i].weight) > tol) return false;
    }
    return true;
}

Weight polar_weight(double amplitude, double phase) {
    if (amplitude < 0.0) throw std::invalid_argument("negative amplitude");
    return std::polar(amplitude, phase);
}

}  // namespace phg
