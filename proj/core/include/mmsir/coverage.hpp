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

#include <span>
#include <string>
#include <vector>

#include "mmsir/dist_fit.hpp"
#include "mmsir/params.hpp"

namespace mmsir {

enum class LinkState { LoS, NLoS };

LinkState opposite(LinkState s);
const char* to_string(LinkState s);

/// Path loss gain beta_j * r^(-alpha_j) for r > 0.
double path_loss(double r, LinkState state, const SystemParams& params);

/// LoS probability exp(-los_decay * r) for r >= 0.
double p_los(double r, const SystemParams& params);

/// State probability: p_los for LoS, 1 - p_los for NLoS.
double p_state(double r, LinkState state, const SystemParams& params);

/// Distance at which a state-j link has the same path loss as a state-i link
/// at distance r: (beta_j r^alpha_i / beta_i)^(1/alpha_j). Equals r when i == j.
double equal_pathloss_boundary(double r, LinkState i, LinkState j, const SystemParams& params);

/// PDF of the typical UE's association distance restricted to the event
/// "serving link is in state i" (so the two states' PDFs sum to a unit-mass
/// density over r).
double association_pdf(double r, LinkState i, const SystemParams& params);

/// Total probability of associating in state i (integral of association_pdf).
double association_state_probability(LinkState i, const SystemParams& params);

/// Radius containing `mass` of the total association probability, found by
/// bisection on the numerically integrated CDF.
double association_quantile(double mass, const SystemParams& params);

enum class CurveMethod { Analytic, MonteCarlo };

const char* to_string(CurveMethod m);

struct CoverageCurve {
    std::vector<double> thresholds_db;
    std::vector<double> coverages;
    std::vector<double> stderrs; // per-point standard error; MonteCarlo only
    CurveMethod method = CurveMethod::Analytic;
    std::string gx_family;
    SystemParams params;

    /// Checks list lengths, range and (within quadrature slack) monotonicity.
    void validate() const;
};

/// Laplace transform data of a capped misaligned-gain distribution:
/// W(u) = E[(1 - e^{-u G}) 1{G <= cap}], evaluated by log-panel quadrature on
/// a Hermite-interpolated ln(u) table.
class GainTransform {
public:
    GainTransform() = default;
    explicit GainTransform(const FittedDist& gx);

    double w_of(double u) const;
    double mass() const { return mass_; }             // F(cap)
    double mean_truncated() const { return mean_trunc_; } // E[G 1{G <= cap}]
    double cap() const { return cap_; }

private:
    std::vector<double> w_, slope_; // values and d/d(ln u) on the grid
    double x_min_ = 0.0, x_max_ = 0.0, dx_ = 0.0;
    double mass_ = 0.0, mean_trunc_ = 0.0, cap_ = 0.0;
};

/// Evaluates the closed-form SIR coverage probability for one system
/// configuration and one fitted misaligned-gain law. Builds the gain
/// transform and the association-distance support once, then evaluates
/// thresholds independently.
class CoverageEvaluator {
public:
    CoverageEvaluator(const SystemParams& params, const FittedDist& gx, double mu_o);

    /// Laplace functional of state-j interference at threshold T (linear),
    /// given association state i at distance r. Equals 1 at T = 0.
    double laplace_interference(double t_linear, double r, LinkState i, LinkState j) const;

    double coverage_probability(double t_linear) const;

    CoverageCurve coverage_curve(std::span<const double> t_grid_db) const;

    double association_r_max() const { return r_max_; }
    const GainTransform& transform() const { return transform_; }

private:
    double interference_exponent(double s, double r, LinkState i, LinkState j) const;

    SystemParams params_;
    FittedDist gx_;
    double mu_o_ = 0.0;
    GainTransform transform_;
    double r_max_ = 0.0;
};

/// One-shot convenience wrappers over CoverageEvaluator.
double laplace_interference(double t_linear, double r, LinkState i, LinkState j,
                            const FittedDist& gx, double mu_o, const SystemParams& params);
double coverage_probability(double t_linear, const FittedDist& gx, double mu_o,
                            const SystemParams& params);
CoverageCurve coverage_curve(std::span<const double> t_grid_db, const FittedDist& gx,
                             double mu_o, const SystemParams& params);

} // namespace mmsir
