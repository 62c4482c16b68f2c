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

#include <array>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mmsir/gains.hpp"

namespace mmsir {

enum class DistFamily { Exponential, LogLogistic, Burr, LogNormal, Nakagami };

const char* to_string(DistFamily family);
DistFamily dist_family_from_string(const std::string& s);

/// A fitted (or published) parametric distribution on [0, inf).
///
/// Parameter slots by family:
///   Exponential : p[0] = rate
///   LogLogistic : p[0] = scale a,  p[1] = shape b
///   Burr        : p[0] = shape c,  p[1] = shape k
///   LogNormal   : p[0] = sigma,    p[1] = mu
///   Nakagami    : p[0] = shape m,  p[1] = spread g
struct FittedDist {
    DistFamily family = DistFamily::Exponential;
    std::array<double, 2> p{0.0, 0.0};
    /// Upper support cap used by the coverage integrator; the PDF itself is
    /// not renormalized. Required for heavy-tailed families there.
    std::optional<double> truncation_cap;

    static FittedDist exponential(double rate, std::optional<double> cap = std::nullopt);
    static FittedDist log_logistic(double a, double b, std::optional<double> cap = std::nullopt);
    static FittedDist burr(double c, double k, std::optional<double> cap = std::nullopt);
    static FittedDist log_normal(double sigma, double mu, std::optional<double> cap = std::nullopt);
    static FittedDist nakagami(double m, double g, std::optional<double> cap = std::nullopt);

    int n_params() const { return family == DistFamily::Exponential ? 1 : 2; }
    /// Parameter names in slot order, e.g. {"a", "b"} for LogLogistic.
    std::array<const char*, 2> param_names() const;
    void validate() const;
};

/// Density at y >= 0. Families whose density diverges as y -> 0+ return 0 at
/// exactly y = 0; quadrature elsewhere uses open rules that never sample 0.
double pdf_eval(const FittedDist& dist, double y);

/// Closed-form CDF at y >= 0.
double cdf_eval(const FittedDist& dist, double y);

/// Closed-form (or special-function) inverse CDF, u in (0,1).
double quantile(const FittedDist& dist, double u);

/// Inverse-CDF draw from the (uncapped) distribution.
double sample(const FittedDist& dist, std::mt19937_64& rng);

/// Rejection-capped draw: redraws until the value is <= truncation_cap.
double sample_capped(const FittedDist& dist, std::mt19937_64& rng);

/// Kolmogorov-Smirnov sup-distance between the empirical CDF of the samples
/// and cdf_eval of dist.
double ks_statistic(std::span<const double> samples, const FittedDist& dist);

/// Maximum-likelihood fit of one family to raw positive samples. Exponential
/// and LogNormal use closed forms; LogLogistic, Burr and Nakagami run a
/// quasi-Newton search on log-parameters with random restarts, converged to
/// mean-log-likelihood gradient norm < 1e-8.
FittedDist fit_family_values(std::span<const double> samples, DistFamily family);

/// fit_family_values plus the default truncation cap: n_tx * n_rx for
/// misaligned-gain sets, none for aligned.
FittedDist fit_family(const GainSampleSet& samples, DistFamily family);

/// Power-law surface mu_o = coeff * (n_tx * n_rx)^expo.
struct SurfaceFit {
    double coeff = 0.0;
    double expo = 0.0;

    double mu_at(int n_tx, int n_rx) const;
};

struct SurfacePoint {
    int n_tx = 0;
    int n_rx = 0;
    double mu_o = 0.0;
};

/// Least-squares fit of ln(mu_o) against ln(n_tx * n_rx). Requires at least
/// 3 points with distinct products.
SurfaceFit fit_power_surface(std::span<const SurfacePoint> grid);

} // namespace mmsir
