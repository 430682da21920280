#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "phg/hypergraph.hpp"
#include "phg/instances.hpp"
#include "phg/optics.hpp"
#include "phg/quantum_state.hpp"
#include "test_support.hpp"

using namespace phg;

namespace {

constexpr double kPi = 3.14159265358979323846;

Hypergraph zwm_after_bs(double phi) {
    return apply_beam_splitter(gen_zwm(phi), "d1", "d1'");
}

Hypergraph fig11_after_bs(double phi) {
    Hypergraph h = gen_two_source_3photon(phi);
    h = apply_beam_splitter(h, "d1", "d1'");
    return apply_beam_splitter(h, "d2", "d2'");
}

}  // namespace

TEST_CASE("mode shifter moves every incidence on the path") {
    const Hypergraph h = build_hypergraph(
        {"a", "b"}, {{{{"a", 0}, {"b", 0}}, {1.0, 0.0}}, {{{"a", 2}}, {1.0, 0.0}}});
    const Hypergraph shifted = apply_mode_shifter(h, "a", 3);
    CHECK(shifted.edges()[0].on == std::vector<Incidence>{{0, 3}, {1, 0}});
    CHECK(shifted.edges()[1].on == std::vector<Incidence>{{0, 5}});
    CHECK(apply_mode_shifter(h, "a", 0) == h);
    CHECK_THROWS_AS(apply_mode_shifter(h, "zz", 1), std::invalid_argument);
}

TEST_CASE("mode shifts add up") {
    std::mt19937 rng(31);
    const Hypergraph h = testing::random_hypergraph(rng);
    const std::string path = h.vertex_ids().front();
    CHECK(apply_mode_shifter(apply_mode_shifter(h, path, 1), path, 1) ==
          apply_mode_shifter(h, path, 2));
}

TEST_CASE("fig2 arises from shifting then aligning a two-layer setup") {
    Hypergraph h = build_hypergraph(
        {"a", "b", "c", "d", "a2", "b2", "c2", "d2"},
        {{{{"a", 0}, {"b", 0}}, {1.0, 0.0}},
         {{{"c", 0}, {"d", 0}}, {1.0, 0.0}},
         {{{"b2", 0}, {"c2", 0}}, {1.0, 0.0}},
         {{{"d2", 0}, {"a2", 0}}, {1.0, 0.0}}});
    for (const char* p : {"a2", "b2", "c2", "d2"}) h = apply_mode_shifter(h, p, 1);
    h = apply_path_identity(h, "a", "a2");
    h = apply_path_identity(h, "b", "b2");
    h = apply_path_identity(h, "c", "c2");
    h = apply_path_identity(h, "d", "d2");
    CHECK(h == gen_fig2_ghz4());
}

TEST_CASE("phase shifter multiplies per incidence count") {
    const Hypergraph h = build_hypergraph(
        {"a", "b"}, {{{{"a", 0}, {"a", 1}}, {1.0, 0.0}}, {{{"b", 0}}, {1.0, 0.0}}});
    const Hypergraph shifted = apply_phase_shifter(h, "a", 0.25);
    CHECK(std::abs(shifted.edges()[0].weight - std::polar(1.0, 0.5)) < 1e-15);  // two hits
    CHECK(shifted.edges()[1].weight == Weight{1.0, 0.0});
}

TEST_CASE("phase shifter identities") {
    std::mt19937 rng(32);
    const Hypergraph h = canonicalize(testing::random_hypergraph(rng));
    const std::string path = h.vertex_ids().front();
    CHECK(approx_equal(apply_phase_shifter(h, path, 0.0), h));
    CHECK(approx_equal(apply_phase_shifter(h, path, 2.0 * kPi), h, 1e-12));
    CHECK(approx_equal(apply_phase_shifter(apply_phase_shifter(h, path, 1.1), path, -1.1), h,
                       1e-12));
}

TEST_CASE("the ZWM pump phase equals a phase shifter on the exclusive path") {
    const double phi = 0.9;
    const Hypergraph via_shifter = apply_phase_shifter(gen_zwm(0.0), "d1'", phi);
    CHECK(approx_equal(via_shifter, gen_zwm(phi), 1e-12));
}

TEST_CASE("ZWM interference after the beam splitter") {
    for (int k = 0; k < 8; ++k) {
        const double phi = 2.0 * kPi * k / 8.0;
        const Hypergraph h = zwm_after_bs(phi);
        const QuantumState psi = emission_state(h, 1);
        const double p_d1 = detection_probability(psi, h, {"d1"});
        const double p_d1p = detection_probability(psi, h, {"d1'"});
        CHECK(p_d1 == doctest::Approx((1.0 - std::sin(phi)) / 2.0).epsilon(1e-10));
        CHECK(p_d1p == doctest::Approx((1.0 + std::sin(phi)) / 2.0).epsilon(1e-10));
        CHECK(p_d1 + p_d1p == doctest::Approx(1.0).epsilon(1e-12));
    }
    const Hypergraph at_half_pi = zwm_after_bs(kPi / 2.0);
    const QuantumState psi = emission_state(at_half_pi, 1);
    CHECK(detection_probability(psi, at_half_pi, {"d1"}) < 1e-12);
    CHECK(detection_probability(psi, at_half_pi, {"d1'"}) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-photon interference gives the phase-pinned Bell states") {
    {
        const Hypergraph h = fig11_after_bs(kPi);
        const QuantumState psi = emission_state(h, 1);
        QuantumState bell;
        const double s = 1.0 / std::sqrt(2.0);
        // vertices d1=0 d2=1 d3=2 d1'=3 d2'=4
        bell.terms[PhotonPattern{{0, 0}, {1, 0}, {2, 0}}] = {s, 0.0};
        bell.terms[PhotonPattern{{2, 0}, {3, 0}, {4, 0}}] = {-s, 0.0};
        bell.normalized = true;
        CHECK(fidelity(psi, bell) == doctest::Approx(1.0).epsilon(1e-10));
    }
    {
        const Hypergraph h = fig11_after_bs(2.0 * kPi);
        const QuantumState psi = emission_state(h, 1);
        QuantumState bell;
        const double s = 1.0 / std::sqrt(2.0);
        bell.terms[PhotonPattern{{0, 0}, {2, 0}, {4, 0}}] = {s, 0.0};  // d1 d2' d3
        bell.terms[PhotonPattern{{1, 0}, {2, 0}, {3, 0}}] = {s, 0.0};  // d1' d2 d3
        bell.normalized = true;
        CHECK(fidelity(psi, bell) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("a double beam-splitter pass swaps the path with phase i") {
    const Hypergraph h = build_hypergraph({"a", "b"}, {{{{"a", 0}}, {1.0, 0.0}}});
    const Hypergraph twice = apply_beam_splitter(apply_beam_splitter(h, "a", "b"), "a", "b");
    REQUIRE(twice.edge_count() == 1);
    CHECK(twice.edges()[0].on == std::vector<Incidence>{{1, 0}});
    CHECK(std::abs(twice.edges()[0].weight - Weight{0.0, 1.0}) < 1e-12);

    Hypergraph four = twice;
    four = apply_beam_splitter(apply_beam_splitter(four, "a", "b"), "a", "b");
    REQUIRE(four.edge_count() == 1);
    CHECK(four.edges()[0].on == std::vector<Incidence>{{0, 0}});
    CHECK(std::abs(four.edges()[0].weight - Weight{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("beam splitter requires distinct declared paths") {
    const Hypergraph h = gen_zwm(0.0);
    CHECK_THROWS_AS(apply_beam_splitter(h, "d1", "d1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_beam_splitter(h, "d1", "zz"), std::invalid_argument);
}

TEST_CASE("beam splitter preserves single-photon emission norms") {
    std::mt19937 rng(33);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
        const Hypergraph h = gen_zwm(phase(rng));
        const double before = emission_terms(h, 1).norm_squared();
        const double after = emission_terms(apply_beam_splitter(h, "d1", "d1'"), 1).norm_squared();
        CHECK(after == doctest::Approx(before).epsilon(1e-10));
    }
}

TEST_CASE("beam splitter commutes with a mode shifter on a third path") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const Hypergraph h = testing::random_hypergraph(rng, 5, 8);
        if (h.vertex_count() < 3) continue;
        const auto& ids = h.vertex_ids();
        const Hypergraph bs_then_shift =
            apply_mode_shifter(apply_beam_splitter(h, ids[0], ids[1]), ids[2], 1);
        const Hypergraph shift_then_bs =
            apply_beam_splitter(apply_mode_shifter(h, ids[2], 1), ids[0], ids[1]);
        CHECK(approx_equal(bs_then_shift, shift_then_bs, 1e-12));
    }
}

TEST_CASE("path identity merges and never grows the edge list") {
    const Hypergraph raw = build_hypergraph(
        {"d1", "d2", "d1'", "d2'"},
        {{{{"d1", 0}, {"d2", 0}}, {1.0, 0.0}}, {{{"d1'", 0}, {"d2'", 0}}, {1.0, 0.0}}});
    const Hypergraph merged = apply_path_identity(raw, "d2", "d2'");
    CHECK(merged.vertex_ids() == std::vector<std::string>{"d1", "d2", "d1'"});
    CHECK(merged == gen_zwm(0.0));

    std::mt19937 rng(35);
    for (int trial = 0; trial < 20; ++trial) {
        const Hypergraph h = testing::random_hypergraph(rng, 5, 10);
        if (h.vertex_count() < 2) continue;
        const Hypergraph after = apply_path_identity(h, h.vertex_ids()[0], h.vertex_ids()[1]);
        CHECK(after.edge_count() <= h.edge_count());
        CHECK(after.vertex_count() == h.vertex_count() - 1);
    }
}

TEST_CASE("merging an untouched vertex only shrinks the vertex set") {
    const Hypergraph h =
        build_hypergraph({"a", "b", "c"}, {{{{"a", 0}, {"b", 0}}, {1.0, 0.0}}});
    const Hypergraph merged = apply_path_identity(h, "a", "c");
    CHECK(merged.vertex_ids() == std::vector<std::string>{"a", "b"});
    CHECK(merged.edge_count() == 1);
}

TEST_CASE("interference sweep rows and CSV layout") {
    const auto rows = interference_sweep(
        [](double phi) { return zwm_after_bs(phi); }, 1,
        {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0}, {{"d1"}});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].probability == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rows[1].probability == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(rows[2].probability == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rows[3].probability == doctest::Approx(1.0).epsilon(1e-10));

    const std::string csv = sweep_csv({rows[0], rows[1]});
    CHECK(csv.rfind("phi,detset,probability\n", 0) == 0);
    CHECK(csv.find("0.000000000,d1,0.5\n") != std::string::npos);
    CHECK(csv.find("1.570796327,d1,") != std::string::npos);
}

TEST_CASE("fig11 sweep patterns are complementary") {
    for (int k = 0; k < 8; ++k) {
        const double phi = 2.0 * kPi * k / 8.0;
        const Hypergraph h = fig11_after_bs(phi);
        const QuantumState psi = emission_state(h, 1);
        const double p11 = detection_probability(psi, h, {"d1", "d2"});
        const double p22 = detection_probability(psi, h, {"d1'", "d2'"});
        const double p12 = detection_probability(psi, h, {"d1", "d2'"});
        const double p21 = detection_probability(psi, h, {"d1'", "d2"});
        CHECK(p11 == doctest::Approx((1.0 - std::cos(phi)) / 4.0).epsilon(1e-10));
        CHECK(p22 == doctest::Approx((1.0 - std::cos(phi)) / 4.0).epsilon(1e-10));
        CHECK(p12 == doctest::Approx((1.0 + std::cos(phi)) / 4.0).epsilon(1e-10));
        CHECK(p21 == doctest::Approx((1.0 + std::cos(phi)) / 4.0).epsilon(1e-10));
        CHECK(p11 + p12 == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(p11 + p22 + p12 + p21 == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("single-point sweep matches direct detection") {
    const double phi = 0.4;
    const auto rows = interference_sweep(
        [](double p) { return zwm_after_bs(p); }, 1, {phi}, {{"d1"}});
    const Hypergraph h = zwm_after_bs(phi);
    CHECK(rows.at(0).probability ==
          doctest::Approx(detection_probability(emission_state(h, 1), h, {"d1"}))
              .epsilon(1e-15));
}
