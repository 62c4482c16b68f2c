// SPDX-License-Identifier: Apache-2.0
//
// mmwave-sir: measurement-based mmWave channel model and stochastic-geometry
// SIR coverage analysis for large-scale cellular networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace mmsir {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0; // estimated
    int evaluations = 0;
    bool converged = false;
};

namespace detail {

// Gauss 7 / Kronrod 15 node-weight table on [-1, 1] (positive abscissae).
// Column order: abscissa, Gauss weight (0 for Kronrod-only nodes), Kronrod weight.
inline constexpr double kG7K15[8][3] = {
    {0.000000000000000000e+00, 4.179591836734693878e-01, 2.094821410847278280e-01},
    {4.058451513773971669e-01, 3.818300505051189449e-01, 1.903505780647854099e-01},
    {7.415311855993944399e-01, 2.797053914892766679e-01, 1.406532597155259187e-01},
    {9.491079123427585245e-01, 1.294849661688696933e-01, 6.309209262997855329e-02},
    {2.077849550078984676e-01, 0.0,                      2.044329400752988924e-01},
    {5.860872354676911303e-01, 0.0,                      1.690047266392679028e-01},
    {8.648644233597690727e-01, 0.0,                      1.047900103222501838e-01},
    {9.914553711208126392e-01, 0.0,                      2.293532201052922496e-02},
};

template <class F>
inline void gk15(F&& f, double a, double b, double& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double f0 = f(mid);
    double g7 = kG7K15[0][1] * f0;
    double k15 = kG7K15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kG7K15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += kG7K15[i][1] * fi;
        k15 += kG7K15[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    value = k15;
    // Standard QUADPACK-style error inflation of the G7-K15 difference.
    double diff = std::fabs(g7 - k15);
    error = 200.0 * diff * std::sqrt(200.0 * diff > 1.0 ? 1.0 : 200.0 * diff);
    if (!(error > 0.0)) error = std::fabs(k15) * 1e-16;
}

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]. Refines the largest-
/// error panel until the accumulated error estimate meets
/// max(abs_tol, rel_tol * |integral|) or the panel budget runs out.
/// Panel endpoints are never evaluated (all G7K15 nodes are interior), so
/// integrable endpoint singularities are handled without special casing.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                              double abs_tol = 0.0, int max_panels = 4000,
                              const std::vector<double>& seed_points = {}) {
    QuadResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    std::priority_queue<detail::Panel> heap;
    double total = 0.0, total_err = 0.0;
    int evals = 0;

    auto push_panel = [&](double lo, double hi) {
        detail::Panel p{lo, hi, 0.0, 0.0};
        detail::gk15(f, lo, hi, p.value, p.error);
        evals += 15;
        total += p.value;
        total_err += p.error;
        heap.push(p);
    };

    double prev = a;
    for (double s : seed_points)
        if (s > prev && s < b) {
            push_panel(prev, s);
            prev = s;
        }
    push_panel(prev, b);

    int panels = static_cast<int>(heap.size());
    while (panels < max_panels) {
        double tol = std::max(abs_tol, rel_tol * std::fabs(total));
        if (total_err <= tol) break;
        detail::Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        total_err -= worst.error;
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) { // panel at machine resolution
            total += worst.value;
            heap.push(detail::Panel{worst.a, worst.b, worst.value, 0.0});
            continue;
        }
        push_panel(worst.a, mid);
        push_panel(mid, worst.b);
        ++panels;
    }
    res.value = total;
    res.abs_error = total_err;
    res.evaluations = evals;
    res.converged = total_err <= std::max(abs_tol, rel_tol * std::fabs(total));
    return res;
}

/// Adaptive integration over [a, b] with 0 < a < b seeded by log-spaced
/// panels (one per decade). Suited to integrands with a 0+ singularity or
/// mass spread across many orders of magnitude.
template <class F>
QuadResult integrate_log_panels(F&& f, double a, double b, double rel_tol = 1e-10,
                                double abs_tol = 0.0, int max_panels = 4000) {
    std::vector<double> seeds;
    if (a > 0.0 && b > a) {
        double la = std::log10(a), lb = std::log10(b);
        for (double e = std::ceil(la); e < lb; e += 1.0) seeds.push_back(std::pow(10.0, e));
    }
    return integrate_adaptive(f, a, b, rel_tol, abs_tol, max_panels, seeds);
}

} // namespace mmsir
