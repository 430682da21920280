#include "phg/optics.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "phg/text_format.hpp"

namespace phg {

Hypergraph apply_mode_shifter(const Hypergraph& h, std::string_view path, int delta) {
    if (delta < 0) throw std::invalid_argument("mode shift must be >= 0");
    const int target = h.require_vertex(path);
    std::vector<Hyperedge> edges = h.edges();
    for (auto& e : edges) {
        for (auto& inc : e.on) {
            if (inc.vertex == target) inc.mode += delta;
        }
    }
    return Hypergraph(h.vertex_ids(), std::move(edges));
}

Hypergraph apply_phase_shifter(const Hypergraph& h, std::string_view path, double phi) {
    const int target = h.require_vertex(path);
    std::vector<Hyperedge> edges = h.edges();
    for (auto& e : edges) {
        int hits = 0;
        for (const auto& inc : e.on) {
            if (inc.vertex == target) ++hits;
        }
        if (hits > 0) e.weight *= std::polar(1.0, phi * hits);
    }
    return Hypergraph(h.vertex_ids(), std::move(edges));
}

Hypergraph apply_beam_splitter(const Hypergraph& h, std::string_view path_a,
                               std::string_view path_b) {
    const int a = h.require_vertex(path_a);
    const int b = h.require_vertex(path_b);
    if (a == b) throw std::invalid_argument("beam splitter needs two distinct paths");

    const double t = 1.0 / std::sqrt(2.0);  // transmission
    const Weight r{0.0, 1.0 / std::sqrt(2.0)};  // reflection picks up i

    std::vector<Hyperedge> expanded;
    for (const auto& e : h.edges()) {
        std::vector<Hyperedge> branches{Hyperedge{{}, e.weight}};
        for (const auto& inc : e.on) {
            if (inc.vertex != a && inc.vertex != b) {
                for (auto& br : branches) br.on.push_back(inc);
                continue;
            }
            const int other = (inc.vertex == a) ? b : a;
            std::vector<Hyperedge> next;
            next.reserve(branches.size() * 2);
            for (const auto& br : branches) {
                Hyperedge stay = br;
                stay.on.push_back(inc);
                stay.weight *= t;
                next.push_back(std::move(stay));
                Hyperedge cross = br;
                cross.on.push_back({other, inc.mode});
                cross.weight *= r;
                next.push_back(std::move(cross));
            }
            branches = std::move(next);
        }
        for (auto& br : branches) expanded.push_back(std::move(br));
    }
    return canonicalize(Hypergraph(h.vertex_ids(), std::move(expanded)));
}

Hypergraph apply_path_identity(const Hypergraph& h, std::string_view keep,
                               std::string_view merge) {
    const int keep_idx = h.require_vertex(keep);
    const int merge_idx = h.require_vertex(merge);
    if (keep_idx == merge_idx) throw std::invalid_argument("path identity needs distinct paths");

    std::vector<std::string> vertex_ids;
    std::vector<int> remap(h.vertex_count(), -1);
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (v == merge_idx) continue;
        remap[v] = static_cast<int>(vertex_ids.size());
        vertex_ids.push_back(h.vertex_ids()[v]);
    }
    remap[merge_idx] = remap[keep_idx];

    std::vector<Hyperedge> edges = h.edges();
    for (auto& e : edges) {
        for (auto& inc : e.on) inc.vertex = remap[inc.vertex];
    }
    return canonicalize(Hypergraph(std::move(vertex_ids), std::move(edges)));
}

std::vector<SweepRow> interference_sweep(
    const std::function<Hypergraph(double)>& builder, int order,
    const std::vector<double>& phases,
    const std::vector<std::vector<std::string>>& detector_sets) {
    if (phases.empty()) throw std::invalid_argument("sweep needs a nonempty phase grid");
    std::vector<SweepRow> rows;
    rows.reserve(phases.size() * detector_sets.size());
    for (double phi : phases) {
        const Hypergraph setup = builder(phi);
        const QuantumState state = emission_state(setup, order);
        for (const auto& detectors : detector_sets) {
            SweepRow row;
            row.phi = phi;
            row.detector_set = join(detectors, "+");
            row.probability = detection_probability(state, setup, detectors);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "phi,detset,probability\n";
    for (const auto& row : rows) {
        char phi_text[64];
        std::snprintf(phi_text, sizeof(phi_text), "%.9f", row.phi);
        out << phi_text << ',' << row.detector_set << ',' << format_number(row.probability)
            << '\n';
    }
    return out.str();
}

}  // namespace phg
