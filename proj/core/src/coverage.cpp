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

#include "mmsir/coverage.hpp"

#include <cmath>
#include <numbers>

#include "mmsir/errors.hpp"
#include "mmsir/quadrature.hpp"

namespace mmsir {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// int_0^x v e^(-c v) dv, series-switched to avoid cancellation at small c x.
double int_v_exp(double x, double c) {
    const double cx = c * x;
    if (cx < 1e-3) {
        return x * x *
               (0.5 - cx / 3.0 + cx * cx / 8.0 - cx * cx * cx / 30.0 + cx * cx * cx * cx / 144.0);
    }
    return (1.0 - (1.0 + cx) * std::exp(-cx)) / (c * c);
}

// int_0^x v * p_state(v) dv in closed form.
double int_v_pstate(double x, LinkState state, const SystemParams& p) {
    const double los_part = int_v_exp(x, p.los_decay);
    return state == LinkState::LoS ? los_part : 0.5 * x * x - los_part;
}

double alpha_of(LinkState s, const SystemParams& p) {
    return s == LinkState::LoS ? p.alpha_los : p.alpha_nlos;
}
double beta_of(LinkState s, const SystemParams& p) {
    return s == LinkState::LoS ? p.beta_los : p.beta_nlos;
}

} // namespace

LinkState opposite(LinkState s) { return s == LinkState::LoS ? LinkState::NLoS : LinkState::LoS; }

const char* to_string(LinkState s) { return s == LinkState::LoS ? "los" : "nlos"; }

const char* to_string(CurveMethod m) {
    return m == CurveMethod::Analytic ? "analytic" : "monte_carlo";
}

double path_loss(double r, LinkState state, const SystemParams& params) {
    if (!(r > 0.0)) throw std::invalid_argument("path_loss: r must be > 0");
    return beta_of(state, params) * std::pow(r, -alpha_of(state, params));
}

double p_los(double r, const SystemParams& params) {
    if (r < 0.0) throw std::invalid_argument("p_los: r must be >= 0");
    return std::exp(-params.los_decay * r);
}

double p_state(double r, LinkState state, const SystemParams& params) {
    const double pl = p_los(r, params);
    return state == LinkState::LoS ? pl : 1.0 - pl;
}

double equal_pathloss_boundary(double r, LinkState i, LinkState j, const SystemParams& params) {
    if (!(r > 0.0)) throw std::invalid_argument("equal_pathloss_boundary: r must be > 0");
    if (i == j) return r;
    const double num = beta_of(j, params) * std::pow(r, alpha_of(i, params));
    return std::pow(num / beta_of(i, params), 1.0 / alpha_of(j, params));
}

double association_pdf(double r, LinkState i, const SystemParams& params) {
    if (!(r > 0.0)) throw std::invalid_argument("association_pdf: r must be > 0");
    const LinkState o = opposite(i);
    const double boundary = equal_pathloss_boundary(r, i, o, params);
    const double void_mass =
        int_v_pstate(r, i, params) + int_v_pstate(boundary, o, params);
    return kTwoPi * params.bs_density * p_state(r, i, params) * r *
           std::exp(-kTwoPi * params.bs_density * void_mass);
}

namespace {

double association_mass(double upto, const SystemParams& params) {
    auto f = [&](double r) {
        return association_pdf(r, LinkState::LoS, params) +
               association_pdf(r, LinkState::NLoS, params);
    };
    return integrate_adaptive(f, 0.0, upto, 1e-10, 0.0, 4000).value;
}

} // namespace

double association_state_probability(LinkState i, const SystemParams& params) {
    const double r_max = association_quantile(1.0 - 1e-9, params);
    auto f = [&](double r) { return association_pdf(r, i, params); };
    return integrate_adaptive(f, 0.0, r_max, 1e-10, 0.0, 4000).value;
}

double association_quantile(double mass, const SystemParams& params) {
    if (!(mass > 0.0 && mass < 1.0))
        throw std::invalid_argument("association_quantile: mass must be in (0,1)");
    params.validate();
    double hi = 1.0 / std::sqrt(params.bs_density);
    for (int i = 0; i < 80 && association_mass(hi, params) < mass; ++i) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (association_mass(mid, params) < mass ? lo : hi) = mid;
    }
    return hi;
}

void CoverageCurve::validate() const {
    if (thresholds_db.size() != coverages.size())
        throw validation_error("length mismatch", "coverages");
    if (!stderrs.empty() && stderrs.size() != coverages.size())
        throw validation_error("length mismatch", "stderrs");
    for (std::size_t k = 0; k < coverages.size(); ++k) {
        if (!(coverages[k] >= 0.0 && coverages[k] <= 1.0))
            throw validation_error("coverage outside [0,1]", "coverages");
        if (k > 0 && thresholds_db[k] <= thresholds_db[k - 1])
            throw validation_error("thresholds must increase", "thresholds_db");
        if (k > 0 && coverages[k] > coverages[k - 1] + 1e-6)
            throw validation_error("coverage must be nonincreasing", "coverages");
    }
}

GainTransform::GainTransform(const FittedDist& gx) {
    gx.validate();
    if (!gx.truncation_cap)
        throw validation_error(
            "truncation_cap required for interference integration (heavy-tailed misaligned "
            "gains make the NLoS expectation diverge without it)",
            "truncation_cap");
    cap_ = *gx.truncation_cap;
    mass_ = cdf_eval(gx, cap_);
    const double g_lo = cap_ * 1e-12; // open panels skip the 0+ density singularity
    mean_trunc_ =
        integrate_log_panels([&](double g) { return g * pdf_eval(gx, g); }, g_lo, cap_, 1e-10)
            .value;

    const double u_lo = 1e-16, u_hi = 1e8;
    dx_ = std::log(10.0) / 60.0;
    x_min_ = std::log(u_lo);
    x_max_ = std::log(u_hi);
    const int n = static_cast<int>(std::ceil((x_max_ - x_min_) / dx_)) + 1;
    x_max_ = x_min_ + dx_ * (n - 1);
    w_.resize(n);
    slope_.resize(n);
    for (int k = 0; k < n; ++k) {
        const double u = std::exp(x_min_ + k * dx_);
        w_[k] = integrate_log_panels(
                    [&](double g) { return -std::expm1(-u * g) * pdf_eval(gx, g); }, g_lo, cap_,
                    1e-9)
                    .value;
        const double deriv = integrate_log_panels(
                                 [&](double g) { return g * std::exp(-u * g) * pdf_eval(gx, g); },
                                 g_lo, cap_, 1e-9)
                                 .value;
        slope_[k] = u * deriv; // dW/d(ln u)
    }
}

double GainTransform::w_of(double u) const {
    if (!(u >= 0.0)) throw std::invalid_argument("GainTransform: u must be >= 0");
    if (u == 0.0) return 0.0;
    const double x = std::log(u);
    if (x <= x_min_) return u * mean_trunc_; // W ~ u E[G 1{G<=cap}] as u -> 0
    if (x >= x_max_) return w_.back();
    const double pos = (x - x_min_) / dx_;
    const int i = static_cast<int>(pos);
    const double t = pos - i;
    const double t2 = t * t, t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * w_[i] + (t3 - 2.0 * t2 + t) * dx_ * slope_[i] +
           (-2.0 * t3 + 3.0 * t2) * w_[i + 1] + (t3 - t2) * dx_ * slope_[i + 1];
}

CoverageEvaluator::CoverageEvaluator(const SystemParams& params, const FittedDist& gx,
                                     double mu_o)
    : params_(params), gx_(gx), mu_o_(mu_o), transform_(gx) {
    params_.validate();
    if (!(mu_o > 0.0)) throw validation_error("must be positive", "mu_o");
    if (!(params_.alpha_nlos > 2.0))
        throw validation_error("alpha_nlos must exceed 2 for a convergent interference field",
                               "alpha_nlos");
    r_max_ = association_quantile(1.0 - 1e-6, params_);
}

// Exponent X of L = exp(-X): X = 2 pi lambda int_B^inf W(s l_j(v)) v p_j(v) dv,
// accumulated over doubling windows until both the last window and the
// analytic tail bound are negligible.
double CoverageEvaluator::interference_exponent(double s, double r, LinkState i,
                                                LinkState j) const {
    if (s == 0.0) return 0.0;
    const double boundary = equal_pathloss_boundary(r, i, j, params_);
    const double alpha = alpha_of(j, params_);
    const double beta = beta_of(j, params_);
    const double c = params_.los_decay;

    auto integrand = [&](double v) {
        return transform_.w_of(s * beta * std::pow(v, -alpha)) * v * p_state(v, j, params_);
    };

    double total = 0.0;
    double lo = boundary;
    for (int window = 0; window < 64; ++window) {
        const double hi = 2.0 * lo + 16.0;
        const double part = integrate_adaptive(integrand, lo, hi, 1e-8, 1e-14 * (1.0 + total),
                                               800)
                                .value;
        total += part;
        lo = hi;
        // Tail bound beyond lo: W(u) <= min(mass, u * mean_trunc).
        double tail;
        if (j == LinkState::LoS) {
            const double w_cap = std::min(transform_.mass(),
                                          s * beta * std::pow(lo, -alpha) * transform_.mean_truncated());
            tail = w_cap * (1.0 + c * lo) * std::exp(-c * lo) / (c * c);
        } else {
            tail = s * beta * transform_.mean_truncated() * std::pow(lo, 2.0 - alpha) /
                   (alpha - 2.0);
        }
        if (tail < 1e-9 * (total + 1e-300) && std::fabs(part) < 1e-8 * (total + 1e-300)) break;
    }
    return kTwoPi * params_.bs_density * total;
}

double CoverageEvaluator::laplace_interference(double t_linear, double r, LinkState i,
                                               LinkState j) const {
    if (t_linear < 0.0) throw std::invalid_argument("laplace_interference: T must be >= 0");
    if (!(r > 0.0)) throw std::invalid_argument("laplace_interference: r must be > 0");
    if (t_linear == 0.0) return 1.0;
    const double s = mu_o_ * t_linear / path_loss(r, i, params_);
    return std::exp(-interference_exponent(s, r, i, j));
}

double CoverageEvaluator::coverage_probability(double t_linear) const {
    if (t_linear < 0.0) throw std::invalid_argument("coverage_probability: T must be >= 0");
    if (t_linear == 0.0) return 1.0;
    double total = 0.0;
    for (LinkState i : {LinkState::LoS, LinkState::NLoS}) {
        auto integrand = [&](double r) {
            const double f = association_pdf(r, i, params_);
            if (f <= 0.0) return 0.0;
            const double s = mu_o_ * t_linear / path_loss(r, i, params_);
            const double x_los = interference_exponent(s, r, i, LinkState::LoS);
            const double x_nlos = interference_exponent(s, r, i, LinkState::NLoS);
            return f * std::exp(-(x_los + x_nlos));
        };
        total += integrate_adaptive(integrand, 0.0, r_max_, 1e-7, 1e-7, 2000).value;
    }
    return std::min(total, 1.0);
}

CoverageCurve CoverageEvaluator::coverage_curve(std::span<const double> t_grid_db) const {
    if (t_grid_db.empty())
        throw validation_error("threshold grid must be nonempty", "t_grid_db");
    CoverageCurve curve;
    curve.method = CurveMethod::Analytic;
    curve.gx_family = to_string(gx_.family);
    curve.params = params_;
    curve.thresholds_db.assign(t_grid_db.begin(), t_grid_db.end());
    curve.coverages.reserve(t_grid_db.size());
    for (double t_db : t_grid_db)
        curve.coverages.push_back(coverage_probability(std::pow(10.0, t_db / 10.0)));
    curve.validate();
    return curve;
}

double laplace_interference(double t_linear, double r, LinkState i, LinkState j,
                            const FittedDist& gx, double mu_o, const SystemParams& params) {
    return CoverageEvaluator(params, gx, mu_o).laplace_interference(t_linear, r, i, j);
}

double coverage_probability(double t_linear, const FittedDist& gx, double mu_o,
                            const SystemParams& params) {
    return CoverageEvaluator(params, gx, mu_o).coverage_probability(t_linear);
}

CoverageCurve coverage_curve(std::span<const double> t_grid_db, const FittedDist& gx,
                             double mu_o, const SystemParams& params) {
    return CoverageEvaluator(params, gx, mu_o).coverage_curve(t_grid_db);
}

} // namespace mmsir
