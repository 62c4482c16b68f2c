// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include <doctest.h>

#include "mmsir/coverage.hpp"
#include "mmsir/quadrature.hpp"
#include "mmsir/rng.hpp"
#include "mmsir/table_data.hpp"

using namespace mmsir;

TEST_SUITE_BEGIN("coverage");

namespace {

SystemParams default_params() {
    SystemParams p;
    p.n_tx = 256;
    p.n_rx = 64;
    return p;
}

} // namespace

TEST_CASE("path loss at unit distance equals the state gain") {
    const auto p = default_params();
    CHECK(path_loss(1.0, LinkState::LoS, p) == doctest::Approx(std::pow(10.0, -7.2)));
    CHECK(path_loss(1.0, LinkState::NLoS, p) == doctest::Approx(std::pow(10.0, -6.14)));
    CHECK(path_loss(100.0, LinkState::LoS, p) ==
          doctest::Approx(std::pow(10.0, -11.2)).epsilon(1e-12));
    CHECK_THROWS_AS(path_loss(0.0, LinkState::LoS, p), std::invalid_argument);
    CHECK_THROWS_AS(path_loss(-1.0, LinkState::NLoS, p), std::invalid_argument);
}

TEST_CASE("LoS probability") {
    const auto p = default_params();
    CHECK(p_los(0.0, p) == 1.0);
    CHECK(p_los(1.0 / 0.0149, p) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(p_los(50.0, p) > p_los(100.0, p));
    CHECK(p_state(30.0, LinkState::LoS, p) + p_state(30.0, LinkState::NLoS, p) ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(p_los(-2.0, p), std::invalid_argument);
}

TEST_CASE("equal path loss boundary") {
    const auto p = default_params();
    CHECK(equal_pathloss_boundary(123.4, LinkState::LoS, LinkState::LoS, p) == 123.4);
    CHECK(equal_pathloss_boundary(5.0, LinkState::NLoS, LinkState::NLoS, p) == 5.0);
    // LoS server at 100 m, NLoS equivalent: 10^(5.06/2.92).
    const double expected = std::pow(10.0, 5.06 / 2.92);
    CHECK(equal_pathloss_boundary(100.0, LinkState::LoS, LinkState::NLoS, p) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(54.06).epsilon(1e-3));
    double prev = 0.0;
    for (double r : {10.0, 50.0, 150.0, 400.0}) {
        const double b = equal_pathloss_boundary(r, LinkState::LoS, LinkState::NLoS, p);
        CHECK(b > prev);
        prev = b;
    }
    CHECK_THROWS_AS(equal_pathloss_boundary(0.0, LinkState::LoS, LinkState::NLoS, p),
                    std::invalid_argument);
}

TEST_CASE("association pdf is a unit-mass density over both states") {
    for (double density : {1e-5, 1e-4, 1e-3}) {
        SystemParams p = default_params();
        p.bs_density = density;
        const double mass_los = association_state_probability(LinkState::LoS, p);
        const double mass_nlos = association_state_probability(LinkState::NLoS, p);
        CHECK(mass_los + mass_nlos == doctest::Approx(1.0).epsilon(1e-4));
        CHECK(mass_los > 0.0);
        CHECK(mass_nlos > 0.0);
    }
}

TEST_CASE("association pdf is nonnegative on a dense grid") {
    const auto p = default_params();
    for (int i = 1; i <= 400; ++i) {
        const double r = i * 2.5;
        CHECK(association_pdf(r, LinkState::LoS, p) >= 0.0);
        CHECK(association_pdf(r, LinkState::NLoS, p) >= 0.0);
    }
    CHECK_THROWS_AS(association_pdf(0.0, LinkState::LoS, p), std::invalid_argument);
}

TEST_CASE("gain transform matches the closed form for a capped exponential") {
    // For G ~ Exp(mu) capped at c:
    // W(u) = F(c) - mu (1 - e^{-(u+mu)c}) / (u + mu).
    const double mu = 0.07, cap = 40.0;
    const auto dist = FittedDist::exponential(mu, cap);
    const GainTransform transform(dist);
    CHECK(transform.mass() == doctest::Approx(1.0 - std::exp(-mu * cap)).epsilon(1e-12));
    for (double u : {1e-12, 1e-8, 1e-4, 3e-2, 1.0, 44.0, 1e3, 1e6}) {
        const double expected = (1.0 - std::exp(-mu * cap)) -
                                mu * (1.0 - std::exp(-(u + mu) * cap)) / (u + mu);
        CHECK(transform.w_of(u) == doctest::Approx(expected).epsilon(2e-7));
    }
    CHECK(transform.w_of(0.0) == 0.0);
}

TEST_CASE("gain transform tracks direct quadrature for the published log-logistic") {
    const auto gx = bundled_loglogistic(256, 64);
    const GainTransform transform(gx);
    for (double u : {1e-10, 1e-6, 1e-3, 0.05, 0.9, 20.0}) {
        const double direct =
            integrate_log_panels(
                [&](double g) { return -std::expm1(-u * g) * pdf_eval(gx, g); },
                *gx.truncation_cap * 1e-12, *gx.truncation_cap, 1e-11)
                .value;
        CHECK(transform.w_of(u) == doctest::Approx(direct).epsilon(1e-6));
    }
}

TEST_CASE("gain transform requires a truncation cap") {
    auto gx = bundled_loglogistic(256, 64);
    gx.truncation_cap.reset();
    CHECK_THROWS_AS(GainTransform{gx}, validation_error);
    const auto p = default_params();
    CHECK_THROWS_AS(laplace_interference(1.0, 50.0, LinkState::LoS, LinkState::LoS, gx, 1e-4, p),
                    validation_error);
}

TEST_CASE("laplace functional basics") {
    const auto p = default_params();
    const auto gx = bundled_loglogistic(256, 64);
    const double mu_o = bundled_mu_surface().mu_at(256, 64);
    const CoverageEvaluator evaluator(p, gx, mu_o);

    SUBCASE("equals one at zero threshold") {
        for (LinkState i : {LinkState::LoS, LinkState::NLoS})
            for (LinkState j : {LinkState::LoS, LinkState::NLoS})
                CHECK(evaluator.laplace_interference(0.0, 75.0, i, j) == 1.0);
    }
    SUBCASE("nonincreasing in T and within (0, 1]") {
        for (LinkState j : {LinkState::LoS, LinkState::NLoS}) {
            double prev = 1.1;
            for (int k = 0; k < 20; ++k) {
                const double t = std::pow(10.0, -2.0 + 4.0 * k / 19.0);
                const double value = evaluator.laplace_interference(t, 60.0, LinkState::LoS, j);
                CHECK(value > 0.0);
                CHECK(value <= 1.0);
                CHECK(value <= prev + 1e-12);
                prev = value;
            }
        }
    }
}

TEST_CASE("laplace functional agrees with the literal nested integral") {
    const auto p = default_params();
    const auto gx = bundled_loglogistic(256, 64);
    const double mu_o = bundled_mu_surface().mu_at(256, 64);
    const CoverageEvaluator evaluator(p, gx, mu_o);
    const double cap = *gx.truncation_cap;

    for (auto [t, r, i, j] :
         {std::tuple{1.0, 50.0, LinkState::LoS, LinkState::LoS},
          std::tuple{1.0, 50.0, LinkState::LoS, LinkState::NLoS},
          std::tuple{10.0, 120.0, LinkState::NLoS, LinkState::LoS}}) {
        const double s = mu_o * t / path_loss(r, i, p);
        const double boundary = equal_pathloss_boundary(r, i, j, p);
        // Outer g-integral over (0, cap], inner v-integral truncated far out.
        auto inner = [&](double g) {
            const double v_hi = 4.0e5;
            return integrate_adaptive(
                       [&](double v) {
                           const double ell = path_loss(v, j, p);
                           return -std::expm1(-s * g * ell) * v * p_state(v, j, p);
                       },
                       boundary, v_hi, 1e-9, 0.0, 4000)
                .value;
        };
        const double outer =
            integrate_log_panels([&](double g) { return inner(g) * pdf_eval(gx, g); },
                                 cap * 1e-12, cap, 1e-7)
                .value;
        const double literal = std::exp(-2.0 * M_PI * p.bs_density * outer);
        CHECK(evaluator.laplace_interference(t, r, i, j) ==
              doctest::Approx(literal).epsilon(2e-4));
    }
}

TEST_CASE("laplace functional agrees with a brute-force Poisson field") {
    const auto p = default_params();
    const auto gx = bundled_loglogistic(256, 64);
    const double mu_o = bundled_mu_surface().mu_at(256, 64);
    const CoverageEvaluator evaluator(p, gx, mu_o);

    const double t = 1.0, r = 50.0;
    const LinkState i = LinkState::LoS, j = LinkState::LoS;
    const double s = mu_o * t / path_loss(r, i, p);
    const double boundary = equal_pathloss_boundary(r, i, j, p);
    const double r_disc = 3000.0;
    const double area =
        M_PI * (r_disc * r_disc - boundary * boundary);

    auto rng = make_stream(2718, 0);
    std::poisson_distribution<int> count_dist(p.bs_density * area);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double cap = *gx.truncation_cap;

    double acc = 0.0;
    const int n_fields = 10000;
    for (int field = 0; field < n_fields; ++field) {
        const int count = count_dist(rng);
        double interference = 0.0;
        for (int k = 0; k < count; ++k) {
            // Uniform on the annulus, thinned to state j, gains zeroed
            // beyond the cap (mirrors the unrenormalized truncation).
            const double v = std::sqrt(boundary * boundary +
                                       unit(rng) * (r_disc * r_disc - boundary * boundary));
            if (unit(rng) >= p_state(v, j, p)) continue;
            double g = quantile(gx, unit(rng));
            if (g > cap) g = 0.0;
            interference += g * path_loss(v, j, p);
        }
        acc += std::exp(-s * interference);
    }
    const double simulated = acc / n_fields;
    const double analytic = evaluator.laplace_interference(t, r, i, j);
    CHECK(std::fabs(analytic - simulated) / analytic < 0.02);
}

TEST_CASE("coverage probability limits and monotonicity") {
    const auto p = default_params();
    const auto gx = bundled_loglogistic(256, 64);
    const double mu_o = bundled_mu_surface().mu_at(256, 64);
    const CoverageEvaluator evaluator(p, gx, mu_o);

    CHECK(evaluator.coverage_probability(1e-6) >= 0.999);

    double prev = 1.0 + 1e-9;
    for (double t_db = -10.0; t_db <= 30.0; t_db += 5.0) {
        const double c = evaluator.coverage_probability(std::pow(10.0, t_db / 10.0));
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
        CHECK(c <= prev + 1e-6);
        prev = c;
    }
}

TEST_CASE("coverage curve structure") {
    const auto p = default_params();
    const auto gx = bundled_loglogistic(256, 64);
    const double mu_o = bundled_mu_surface().mu_at(256, 64);
    const std::vector<double> grid{-10.0, 0.0, 10.0};
    const auto curve = coverage_curve(grid, gx, mu_o, p);
    REQUIRE(curve.coverages.size() == 3);
    CHECK(curve.method == CurveMethod::Analytic);
    CHECK(curve.gx_family == "log_logistic");
    CHECK(curve.coverages[0] >= curve.coverages[1]);
    CHECK(curve.coverages[1] >= curve.coverages[2]);
    const std::vector<double> empty;
    CHECK_THROWS(coverage_curve(empty, gx, mu_o, p));
}

TEST_SUITE_END();
