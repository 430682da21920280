#include "phg/instances.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "phg/matching.hpp"

namespace phg {

namespace {

std::vector<std::string> numbered_ids(int count) {
    std::vector<std::string> ids;
    ids.reserve(count);
    for (int i = 0; i < count; ++i) ids.push_back("v" + std::to_string(i));
    return ids;
}

void check_probability(double p, const char* name) {
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in (0, 1]");
}

void check_odd_m(int m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("m must be odd and >= 3");
}

PhotonPattern pattern_of_modes(const std::vector<int>& modes) {
    PhotonPattern pattern;
    pattern.reserve(modes.size());
    for (int v = 0; v < static_cast<int>(modes.size()); ++v)
        pattern.push_back({v, modes[v]});
    return pattern;
}

PhotonPattern pm_pattern(const Hypergraph& h, const PerfectMatching& pm) {
    PhotonPattern pattern;
    for (int e : pm.edge_indices) {
        for (const auto& inc : h.edges()[e].on) pattern.push_back(inc);
    }
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

// Generators assert the matching structure they promise; a failure here is
// a library bug, not a caller error.
void expect(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("instance self-check failed: ") + what);
}

std::set<PhotonPattern> pm_pattern_set(const Hypergraph& h) {
    std::set<PhotonPattern> patterns;
    for (const auto& pm : enumerate_perfect_matchings(h).matchings)
        patterns.insert(pm_pattern(h, pm));
    return patterns;
}

}  // namespace

Hypergraph gen_fig2_ghz4() {
    const std::vector<std::string> ids{"a", "b", "c", "d"};
    std::vector<EdgeSpec> edges{
        {{{"a", 0}, {"b", 0}}, {1.0, 0.0}},
        {{{"a", 1}, {"d", 1}}, {1.0, 0.0}},
        {{{"b", 1}, {"c", 1}}, {1.0, 0.0}},
        {{{"c", 0}, {"d", 0}}, {1.0, 0.0}},
    };
    Hypergraph h = canonicalize(build_hypergraph(ids, edges));
    const auto report = enumerate_perfect_matchings(h);
    expect(report.count == 2, "fig2 has two matchings");
    expect(pm_pattern_set(h) ==
               std::set<PhotonPattern>{pattern_of_modes({0, 0, 0, 0}),
                                       pattern_of_modes({1, 1, 1, 1})},
           "fig2 terms");
    return h;
}

Hypergraph gen_odd_ghz(int m, double p1, double p2) {
    check_odd_m(m);
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    const double s1 = std::sqrt(p1);
    const double s2 = std::sqrt(p2);
    const auto ids = numbered_ids(m);

    std::vector<EdgeSpec> edges;
    // Mode-0 cover: single on v0, pairs (v1,v2), (v3,v4), ...
    edges.push_back({{{ids[0], 0}}, {s1, 0.0}});
    for (int v = 1; v + 1 < m; v += 2)
        edges.push_back({{{ids[v], 0}, {ids[v + 1], 0}}, {s2, 0.0}});
    // Mode-1 cover shifted by one: single on v_{m-1}, pairs (v0,v1), ...
    edges.push_back({{{ids[m - 1], 1}}, {s1, 0.0}});
    for (int v = 0; v + 1 < m - 1; v += 2)
        edges.push_back({{{ids[v], 1}, {ids[v + 1], 1}}, {s2, 0.0}});

    Hypergraph h = canonicalize(build_hypergraph(ids, edges));
    const auto report = enumerate_perfect_matchings(h);
    expect(report.count == 2, "odd_ghz has two matchings");
    expect(pm_pattern_set(h) ==
               std::set<PhotonPattern>{pattern_of_modes(std::vector<int>(m, 0)),
                                       pattern_of_modes(std::vector<int>(m, 1))},
           "odd_ghz terms");
    return h;
}

Hypergraph gen_fig5_ghz3d3(double p1, double p2) {
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    const double s1 = std::sqrt(p1);
    const double s2 = std::sqrt(p2);
    const std::vector<std::string> ids{"a", "b", "c"};
    std::vector<EdgeSpec> edges{
        {{{"a", 0}}, {s1, 0.0}},
        {{{"b", 1}}, {s1, 0.0}},
        {{{"c", 2}}, {s1, 0.0}},
        {{{"b", 0}, {"c", 0}}, {s2, 0.0}},
        {{{"a", 1}, {"c", 1}}, {s2, 0.0}},
        {{{"a", 2}, {"b", 2}}, {s2, 0.0}},
    };
    Hypergraph h = canonicalize(build_hypergraph(ids, edges));
    expect(pm_pattern_set(h) ==
               std::set<PhotonPattern>{pattern_of_modes({0, 0, 0}), pattern_of_modes({1, 1, 1}),
                                       pattern_of_modes({2, 2, 2}), pattern_of_modes({0, 1, 2})},
           "fig5 terms: three GHZ matchings and the |012> maverick");
    return h;
}

Hypergraph gen_w_state(int m, double p1, double p2) {
    check_odd_m(m);
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    const double s1 = std::sqrt(p1);
    const double s2 = std::sqrt(p2);
    const auto ids = numbered_ids(m);

    std::vector<EdgeSpec> edges;
    for (int v = 0; v < m; ++v) edges.push_back({{{ids[v], 1}}, {s1, 0.0}});
    // Pair cycle: removing any one vertex leaves a path with a unique cover,
    // so exactly one one-excitation matching exists per vertex.
    for (int v = 0; v < m; ++v)
        edges.push_back({{{ids[v], 0}, {ids[(v + 1) % m], 0}}, {s2, 0.0}});

    Hypergraph h = canonicalize(build_hypergraph(ids, edges));
    const auto report = enumerate_perfect_matchings(h);
    int one_excitation = 0;
    bool all_singles = false;
    for (const auto& pm : report.matchings) {
        int singles = 0;
        for (int e : pm.edge_indices) singles += h.edges()[e].degree() == 1 ? 1 : 0;
        if (singles == 1) ++one_excitation;
        if (singles == m) all_singles = true;
    }
    expect(one_excitation == m, "w_state has one matching per excitation");
    expect(all_singles, "w_state all-singles maverick present");
    return h;
}

Hypergraph gen_fig7_srv443(double p1, double p2) {
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    const double s1 = std::sqrt(p1);
    const double s2 = std::sqrt(p2);
    const std::vector<std::string> ids{"a", "b", "c"};
    std::vector<EdgeSpec> edges{
        {{{"a", 1}}, {s1, 0.0}},
        {{{"b", 2}}, {s1, 0.0}},
        {{{"c", 0}}, {s1, 0.0}},
        {{{"b", 1}, {"c", 1}}, {s2, 0.0}},
        {{{"a", 2}, {"c", 2}}, {s2, 0.0}},
        {{{"a", 0}, {"b", 0}}, {s2, 0.0}},
        {{{"a", 3}, {"b", 3}}, {s2, 0.0}},
    };
    Hypergraph h = canonicalize(build_hypergraph(ids, edges));
    expect(pm_pattern_set(h) ==
               std::set<PhotonPattern>{pattern_of_modes({0, 0, 0}), pattern_of_modes({1, 1, 1}),
                                       pattern_of_modes({2, 2, 2}), pattern_of_modes({3, 3, 0}),
                                       pattern_of_modes({1, 2, 0})},
           "fig7 terms: the four SRV(4,4,3) matchings and the |120> maverick");
    return h;
}

namespace {

std::vector<std::vector<int>> k_subsets(int n, int k) {
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
    return out;  // lexicographic
}

}  // namespace

Hypergraph gen_fig8_ghz6d10() {
    const auto ids = numbered_ids(6);
    std::vector<EdgeSpec> edges;
    const auto triples = k_subsets(6, 3);
    int mode = 0;
    for (const auto& triple : triples) {
        if (triple[0] != 0) continue;  // first of each complementary pair contains v0
        std::vector<int> complement;
        for (int v = 0; v < 6; ++v) {
            if (std::find(triple.begin(), triple.end(), v) == triple.end())
                complement.push_back(v);
        }
        EdgeSpec first, second;
        for (int v : triple) first.on.emplace_back(ids[v], mode);
        for (int v : complement) second.on.emplace_back(ids[v], mode);
        edges.push_back(std::move(first));
        edges.push_back(std::move(second));
        ++mode;
    }
    Hypergraph h = canonicalize(build_hypergraph(ids, edges));
    const auto report = enumerate_perfect_matchings(h);
    expect(h.edge_count() == 20 && report.count == 10, "fig8 has 20 edges and 10 matchings");
    return h;
}

Hypergraph gen_fig9_no_pm() {
    const auto ids = numbered_ids(9);
    std::vector<EdgeSpec> edges;
    for (const auto& triple : k_subsets(9, 3)) {
        if (triple[0] > 1) continue;  // keep triples meeting {v0, v1}
        EdgeSpec spec;
        for (int v : triple) spec.on.emplace_back(ids[v], 0);
        edges.push_back(std::move(spec));
    }
    Hypergraph h = canonicalize(build_hypergraph(ids, edges));
    expect(h.edge_count() == 49, "fig9 has 49 hyperedges");
    expect(!has_perfect_matching(h), "fig9 is matching-free");
    return h;
}

Hypergraph gen_complete_uniform(int n) {
    if (n < 2) throw std::invalid_argument("complete_uniform needs n >= 2");
    const auto ids = numbered_ids(2 * n);
    std::vector<EdgeSpec> edges;
    for (const auto& subset : k_subsets(2 * n, n)) {
        EdgeSpec spec;
        for (int v : subset) spec.on.emplace_back(ids[v], 0);
        edges.push_back(std::move(spec));
    }
    return canonicalize(build_hypergraph(ids, edges));
}

Hypergraph gen_zwm(double phi) {
    const std::vector<std::string> ids{"d1", "d2", "d1'"};
    std::vector<EdgeSpec> edges{
        {{{"d1", 0}, {"d2", 0}}, {1.0, 0.0}},
        {{{"d1'", 0}, {"d2", 0}}, polar_weight(1.0, phi)},
    };
    return canonicalize(build_hypergraph(ids, edges));
}

Hypergraph gen_two_source_3photon(double phi) {
    const std::vector<std::string> ids{"d1", "d2", "d3", "d1'", "d2'"};
    std::vector<EdgeSpec> edges{
        {{{"d1", 0}, {"d2", 0}, {"d3", 0}}, {1.0, 0.0}},
        {{{"d1'", 0}, {"d2'", 0}, {"d3", 0}}, polar_weight(1.0, phi)},
    };
    return canonicalize(build_hypergraph(ids, edges));
}

InstanceParams parse_instance_params(const std::string& id_string, std::string& name_out) {
    InstanceParams params;
    const auto colon = id_string.find(':');
    name_out = id_string.substr(0, colon);
    if (colon == std::string::npos) return params;

    std::istringstream rest(id_string.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("instance parameter must be key=value: " + item);
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key != "m" && key != "n" && key != "p1" && key != "p2" && key != "phi")
            throw std::invalid_argument("unknown instance parameter: " + key);
        try {
            if (key == "m") params.m = std::stoi(value);
            else if (key == "n") params.n = std::stoi(value);
            else if (key == "p1") params.p1 = std::stod(value);
            else if (key == "p2") params.p2 = std::stod(value);
            else params.phi = std::stod(value);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad instance parameter value: " + item);
        }
    }
    return params;
}

Hypergraph gen_instance(const std::string& name, const InstanceParams& params) {
    if (name == "fig2_ghz4") return gen_fig2_ghz4();
    if (name == "odd_ghz") return gen_odd_ghz(params.m, params.p1, params.p2);
    if (name == "fig5_ghz3d3") return gen_fig5_ghz3d3(params.p1, params.p2);
    if (name == "w_state") return gen_w_state(params.m, params.p1, params.p2);
    if (name == "fig7_srv443") return gen_fig7_srv443(params.p1, params.p2);
    if (name == "fig8_ghz6d10") return gen_fig8_ghz6d10();
    if (name == "fig9_no_pm") return gen_fig9_no_pm();
    if (name == "complete_uniform") return gen_complete_uniform(params.n);
    if (name == "zwm") return gen_zwm(params.phi);
    if (name == "two_source_3photon") return gen_two_source_3photon(params.phi);
    throw std::invalid_argument("unknown instance: " + name);
}

Hypergraph gen_instance(const std::string& id_string) {
    std::string name;
    const InstanceParams params = parse_instance_params(id_string, name);
    return gen_instance(name, params);
}

int max_ghz_dimension(int n) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("max_ghz_dimension supports 2 <= n <= 5");
    return static_cast<int>(max_disjoint_pm_family(gen_complete_uniform(n)).size());
}

bool verify_design(const Hypergraph& h, const QuantumState& target) {
    if (!target.normalized) throw std::invalid_argument("verify_design needs a normalized target");
    const QuantumState psi = post_selected_state(h);
    if (!psi.normalized) return false;
    return fidelity(psi, target) >= 1.0 - 1e-9;
}

}  // namespace phg
