// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <doctest.h>

#include "mmsir/quadrature.hpp"
#include "mmsir/special.hpp"

using namespace mmsir;

TEST_SUITE_BEGIN("special");

TEST_CASE("normal quantile inverts the CDF") {
    for (double p : {1e-9, 1e-4, 0.02425, 0.3, 0.5, 0.78, 0.97575, 0.9999, 1.0 - 1e-9}) {
        CHECK(normal_cdf(normal_quantile(p)) == doctest::Approx(p).epsilon(1e-12));
    }
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("regularized incomplete gamma against quadrature") {
    for (double a : {0.099, 0.5, 1.0, 3.7}) {
        for (double x : {0.01, 0.5, 1.0, 5.0, 20.0}) {
            auto r = integrate_adaptive(
                [&](double t) { return std::exp((a - 1.0) * std::log(t) - t - std::lgamma(a)); },
                0.0, x, 1e-12, 1e-14, 8000);
            CHECK(gamma_p(a, x) == doctest::Approx(r.value).epsilon(1e-7));
        }
    }
    CHECK(gamma_p(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
    CHECK(gamma_p(2.5, 0.0) == 0.0);
}

TEST_CASE("digamma recurrence and known values") {
    const double euler = 0.5772156649015329;
    CHECK(digamma(1.0) == doctest::Approx(-euler).epsilon(1e-12));
    CHECK(digamma(2.0) == doctest::Approx(1.0 - euler).epsilon(1e-12));
    // psi(x+1) = psi(x) + 1/x
    for (double x : {0.099, 0.7, 3.3}) {
        CHECK(digamma(x + 1.0) == doctest::Approx(digamma(x) + 1.0 / x).epsilon(1e-12));
    }
}

TEST_SUITE_END();
