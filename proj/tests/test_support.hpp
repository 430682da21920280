#pragma once

#include <random>
#include <vector>

#include "phg/hypergraph.hpp"

namespace phg::testing {

// Deterministic random hypergraphs for property tests: up to `max_vertices`
// vertices, `max_edges` edges of degree 1..3, modes 0..2, and a weight drawn
// from a small set of complex values. Occasionally emits bunched edges.
inline Hypergraph random_hypergraph(std::mt19937& rng, int max_vertices = 6,
                                    int max_edges = 20, bool allow_bunching = true) {
    std::uniform_int_distribution<int> nv_dist(1, max_vertices);
    const int nv = nv_dist(rng);
    std::uniform_int_distribution<int> ne_dist(0, max_edges);
    const int ne = ne_dist(rng);

    std::vector<std::string> ids;
    for (int v = 0; v < nv; ++v) ids.push_back("v" + std::to_string(v));

    const std::vector<Weight> weights{
        {1.0, 0.0}, {-1.0, 0.0}, {0.5, 0.0}, {0.0, 1.0}, {0.70710678, 0.70710678}, {0.25, -0.5}};

    std::uniform_int_distribution<int> degree_dist(1, 3);
    std::uniform_int_distribution<int> vertex_dist(0, nv - 1);
    std::uniform_int_distribution<int> mode_dist(0, 2);
    std::uniform_int_distribution<std::size_t> weight_dist(0, weights.size() - 1);

    std::vector<Hyperedge> edges;
    for (int e = 0; e < ne; ++e) {
        Hyperedge edge;
        const int degree = std::min(degree_dist(rng), nv);
        std::vector<int> chosen;
        for (int i = 0; i < degree; ++i) {
            int v = vertex_dist(rng);
            if (!allow_bunching) {
                int guard = 0;
                while (std::count(chosen.begin(), chosen.end(), v) && guard++ < 50)
                    v = vertex_dist(rng);
                if (std::count(chosen.begin(), chosen.end(), v)) continue;
            }
            chosen.push_back(v);
            edge.on.push_back({v, mode_dist(rng)});
        }
        if (edge.on.empty()) continue;
        edge.weight = weights[weight_dist(rng)];
        edges.push_back(std::move(edge));
    }
    return Hypergraph(std::move(ids), std::move(edges));
}

}  // namespace phg::testing
