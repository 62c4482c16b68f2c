// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <doctest.h>

#include "mmsir/network_sim.hpp"
#include "mmsir/rng.hpp"
#include "mmsir/table_data.hpp"

using namespace mmsir;

TEST_SUITE_BEGIN("network_sim");

namespace {

SystemParams default_params(std::uint64_t seed = 0) {
    SystemParams p;
    p.n_tx = 256;
    p.n_rx = 64;
    p.rng_seed = seed;
    return p;
}

NetworkSnapshot two_bs_snapshot() {
    NetworkSnapshot snap;
    snap.region_radius = 500.0;
    snap.bs.resize(2);
    snap.bs[0] = {100.0, 0.0, 100.0, LinkState::LoS};
    snap.bs[1] = {0.0, 200.0, 200.0, LinkState::LoS};
    snap.serving_index = 0;
    return snap;
}

} // namespace

TEST_CASE("poisson count concentrates on the disc mean") {
    const auto p = default_params(3);
    auto rng = make_stream(p.rng_seed, 0);
    const double expected = p.bs_density * M_PI * 2000.0 * 2000.0; // 1256.6
    const int n = 1000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double c = static_cast<double>(generate_snapshot(rng, p, 2000.0).bs.size());
        sum += c;
        sum_sq += c * c;
    }
    const double mean = sum / n;
    const double stderr_mean = std::sqrt((sum_sq / n - mean * mean) / n);
    CHECK(std::fabs(mean - expected) <= 3.0 * stderr_mean);
    CHECK(mean == doctest::Approx(expected).epsilon(0.03));
}

TEST_CASE("serving BS maximizes the path-loss gain") {
    const auto p = default_params(4);
    auto rng = make_stream(p.rng_seed, 1);
    for (int i = 0; i < 50; ++i) {
        const auto snap = generate_snapshot(rng, p, 1000.0);
        const double serving_gain =
            path_loss(std::max(snap.serving().distance, 1e-6), snap.serving_state(), p);
        for (const auto& bs : snap.bs)
            CHECK(serving_gain >= path_loss(std::max(bs.distance, 1e-6), bs.state, p));
    }
}

TEST_CASE("close-in BSs are predominantly LoS") {
    const auto p = default_params(5);
    auto rng = make_stream(p.rng_seed, 2);
    int close = 0, close_los = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto snap = generate_snapshot(rng, p, 2000.0);
        for (const auto& bs : snap.bs) {
            if (bs.distance <= 10.0) {
                ++close;
                if (bs.state == LinkState::LoS) ++close_los;
            }
        }
    }
    REQUIRE(close > 100);
    CHECK(static_cast<double>(close_los) / close > 0.85);
}

TEST_CASE("analytic association-state split matches the simulated fraction") {
    const auto p = default_params(61);
    const double analytic_los = association_state_probability(LinkState::LoS, p);
    auto rng = make_stream(p.rng_seed, 0);
    int los = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i)
        if (generate_snapshot(rng, p, 2000.0).serving_state() == LinkState::LoS) ++los;
    CHECK(std::fabs(static_cast<double>(los) / n - analytic_los) <= 0.02);
}

TEST_CASE("association sometimes skips the nearest BS") {
    const auto p = default_params(6);
    auto rng = make_stream(p.rng_seed, 3);
    int skipped = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const auto snap = generate_snapshot(rng, p, 500.0);
        int nearest = 0;
        for (int k = 1; k < static_cast<int>(snap.bs.size()); ++k)
            if (snap.bs[k].distance < snap.bs[nearest].distance) nearest = k;
        if (nearest != snap.serving_index) ++skipped;
    }
    CHECK(skipped > 0);
}

TEST_CASE("snapshot SIR with unit gains is the path-loss ratio") {
    const auto p = default_params();
    auto rng = make_stream(0, 0);
    const auto snap = two_bs_snapshot();
    const auto sir = snapshot_sir(snap, UnitGains{}, rng, p);
    // Both links LoS with alpha 2: (100^-2)/(200^-2) = 4, beta cancels.
    CHECK(sir.sir_linear == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sir.serving_state == LinkState::LoS);
}

TEST_CASE("single-BS snapshot yields infinite SIR and full coverage") {
    const auto p = default_params();
    auto rng = make_stream(0, 1);
    NetworkSnapshot snap;
    snap.region_radius = 100.0;
    snap.bs = {{30.0, 0.0, 30.0, LinkState::NLoS}};
    snap.serving_index = 0;
    const auto sir = snapshot_sir(snap, UnitGains{}, rng, p);
    CHECK(sir.infinite());
    for (double t : {1e-4, 1.0, 1e6}) CHECK(sir.sir_linear >= t);
}

TEST_CASE("empirical coverage basics") {
    auto p = default_params(11);
    const FittedGains gains{bundled_mu_surface().mu_at(256, 64), bundled_loglogistic(256, 64)};

    SUBCASE("almost-sure coverage at a tiny threshold") {
        const std::vector<double> grid{-40.0};
        const auto curve = empirical_coverage(1000, grid, gains, p, 2000.0);
        CHECK(curve.coverages[0] > 0.99);
    }
    SUBCASE("nonincreasing, bounded, with standard errors") {
        const std::vector<double> grid{-10.0, -5.0, 0.0, 5.0, 10.0};
        const auto curve = empirical_coverage(2000, grid, gains, p, 2000.0);
        REQUIRE(curve.coverages.size() == grid.size());
        REQUIRE(curve.stderrs.size() == grid.size());
        for (std::size_t k = 1; k < curve.coverages.size(); ++k)
            CHECK(curve.coverages[k] <= curve.coverages[k - 1]);
        for (double se : curve.stderrs) CHECK(se < 0.02);
        CHECK(curve.method == CurveMethod::MonteCarlo);
    }
    SUBCASE("deterministic under a fixed seed regardless of threads") {
        const std::vector<double> grid{0.0};
        const auto c1 = empirical_coverage(500, grid, gains, p, 1000.0, 1);
        const auto c2 = empirical_coverage(500, grid, gains, p, 1000.0, 4);
        CHECK(c1.coverages[0] == c2.coverages[0]);
    }
}

TEST_CASE("more antennas cover more (fitted mode, shared seeds)") {
    const std::vector<double> grid{-10.0, 0.0, 10.0, 20.0};
    auto p_small = default_params(21);
    p_small.n_tx = 64;
    p_small.n_rx = 16;
    const FittedGains small{bundled_mu_surface().mu_at(64, 16), bundled_loglogistic(64, 16)};
    const auto curve_small = empirical_coverage(10000, grid, small, p_small, 2000.0);

    auto p_big = default_params(21);
    const FittedGains big{bundled_mu_surface().mu_at(256, 64), bundled_loglogistic(256, 64)};
    const auto curve_big = empirical_coverage(10000, grid, big, p_big, 2000.0);

    for (std::size_t k = 0; k < grid.size(); ++k)
        CHECK(curve_big.coverages[k] >= curve_small.coverages[k]);
}

TEST_CASE("fitted-mode simulation validates the analytic coverage at 0 dB") {
    auto p = default_params(31);
    const auto gx = bundled_loglogistic(256, 64);
    const double mu_o = bundled_mu_surface().mu_at(256, 64);
    const std::vector<double> grid{0.0};
    const auto curve = empirical_coverage(10000, grid, FittedGains{mu_o, gx}, p, 2000.0);
    const double analytic = coverage_probability(1.0, gx, mu_o, p);
    CHECK(std::fabs(curve.coverages[0] - analytic) <= 0.03);
}

TEST_CASE("full-channel mode runs and produces sane coverage") {
    auto p = default_params(41);
    p.n_tx = 16;
    p.n_rx = 4;
    const std::vector<double> grid{-10.0, 0.0, 10.0};
    const auto curve = empirical_coverage(300, grid, FullChannelGains{}, p, 1000.0);
    CHECK(curve.coverages[0] >= curve.coverages[2]);
    CHECK(curve.gx_family == "full_channel");
}

TEST_CASE("input validation") {
    const auto p = default_params();
    auto rng = make_stream(0, 2);
    CHECK_THROWS_AS(generate_snapshot(rng, p, 0.0), std::invalid_argument);
    const FittedGains gains{1e-4, bundled_loglogistic(256, 64)};
    const std::vector<double> grid{0.0};
    CHECK_THROWS_AS(empirical_coverage(0, grid, gains, p, 100.0), std::invalid_argument);
    const std::vector<double> empty;
    CHECK_THROWS(empirical_coverage(10, empty, gains, p, 100.0));
}

TEST_SUITE_END();
