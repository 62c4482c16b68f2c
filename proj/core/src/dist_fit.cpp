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

#include "mmsir/dist_fit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "mmsir/errors.hpp"
#include "mmsir/special.hpp"

namespace mmsir {

namespace {

double softplus(double x) { return x > 30.0 ? x : std::log1p(std::exp(x)); }
double sigmoid(double x) { return x > 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x)); }

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw validation_error("must be positive and finite", name);
}

// ---- quasi-Newton search on log-parameters ------------------------------

struct OptResult {
    std::array<double, 2> x{};
    double value = std::numeric_limits<double>::infinity();
    double grad_norm = std::numeric_limits<double>::infinity();
    bool converged = false;
};

// Minimizes a smooth 2-D objective with BFGS + Armijo backtracking.
// objective(x, grad) returns the value and fills the gradient.
OptResult minimize_bfgs2(const std::function<double(const std::array<double, 2>&,
                                                    std::array<double, 2>&)>& objective,
                         std::array<double, 2> x0, int max_iter = 300, double grad_tol = 1e-8) {
    OptResult res;
    std::array<double, 2> x = x0, g{}, g_new{};
    double fx = objective(x, g);
    // Inverse Hessian approximation, starts at identity.
    double h00 = 1.0, h01 = 0.0, h11 = 1.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        double gn = std::max(std::fabs(g[0]), std::fabs(g[1]));
        if (!std::isfinite(fx)) break;
        if (gn < grad_tol) {
            res.converged = true;
            break;
        }
        std::array<double, 2> d{-(h00 * g[0] + h01 * g[1]), -(h01 * g[0] + h11 * g[1])};
        double slope = d[0] * g[0] + d[1] * g[1];
        if (slope >= 0.0) { // reset a non-descent direction
            h00 = h11 = 1.0;
            h01 = 0.0;
            d = {-g[0], -g[1]};
            slope = -(g[0] * g[0] + g[1] * g[1]);
        }
        double step = 1.0;
        const double dmax = std::max(std::fabs(d[0]), std::fabs(d[1]));
        if (dmax > 2.0) step = 2.0 / dmax; // keep log-parameter moves sane
        std::array<double, 2> x_new{};
        double f_new = fx;
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls) {
            x_new = {x[0] + step * d[0], x[1] + step * d[1]};
            f_new = objective(x_new, g_new);
            if (std::isfinite(f_new) && f_new <= fx + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
        const std::array<double, 2> s{x_new[0] - x[0], x_new[1] - x[1]};
        const std::array<double, 2> yv{g_new[0] - g[0], g_new[1] - g[1]};
        const double sy = s[0] * yv[0] + s[1] * yv[1];
        if (sy > 1e-14) {
            // BFGS inverse update.
            const double rho = 1.0 / sy;
            const double hy0 = h00 * yv[0] + h01 * yv[1];
            const double hy1 = h01 * yv[0] + h11 * yv[1];
            const double yhy = yv[0] * hy0 + yv[1] * hy1;
            h00 += (1.0 + rho * yhy) * rho * s[0] * s[0] - rho * (s[0] * hy0 + s[0] * hy0);
            h01 += (1.0 + rho * yhy) * rho * s[0] * s[1] - rho * (s[0] * hy1 + s[1] * hy0);
            h11 += (1.0 + rho * yhy) * rho * s[1] * s[1] - rho * (s[1] * hy1 + s[1] * hy1);
        }
        x = x_new;
        fx = f_new;
        g = g_new;
    }
    res.x = x;
    res.value = fx;
    res.grad_norm = std::max(std::fabs(g[0]), std::fabs(g[1]));
    res.converged = res.converged || res.grad_norm < 1e-8;
    return res;
}

OptResult minimize_with_restarts(
    const std::function<double(const std::array<double, 2>&, std::array<double, 2>&)>& objective,
    std::array<double, 2> x0, DistFamily family) {
    OptResult best = minimize_bfgs2(objective, x0);
    std::mt19937_64 rng(0x5eedb0a7ULL + static_cast<std::uint64_t>(family));
    std::uniform_real_distribution<double> jitter(-1.0, 1.0);
    for (int r = 0; r < 5; ++r) {
        std::array<double, 2> xr{x0[0] + jitter(rng), x0[1] + jitter(rng)};
        OptResult cand = minimize_bfgs2(objective, xr);
        if (cand.converged && (!best.converged || cand.value < best.value)) best = cand;
    }
    if (!best.converged)
        throw convergence_error(std::string("fit_family: optimizer did not converge for ") +
                                to_string(family) + " (best gradient norm " +
                                std::to_string(best.grad_norm) + ")");
    return best;
}

} // namespace

const char* to_string(DistFamily family) {
    switch (family) {
        case DistFamily::Exponential: return "exponential";
        case DistFamily::LogLogistic: return "log_logistic";
        case DistFamily::Burr: return "burr";
        case DistFamily::LogNormal: return "log_normal";
        case DistFamily::Nakagami: return "nakagami";
    }
    return "?";
}

DistFamily dist_family_from_string(const std::string& s) {
    if (s == "exponential") return DistFamily::Exponential;
    if (s == "log_logistic") return DistFamily::LogLogistic;
    if (s == "burr") return DistFamily::Burr;
    if (s == "log_normal") return DistFamily::LogNormal;
    if (s == "nakagami") return DistFamily::Nakagami;
    throw validation_error("unknown distribution family '" + s + "'", "family");
}

FittedDist FittedDist::exponential(double rate, std::optional<double> cap) {
    FittedDist d{DistFamily::Exponential, {rate, 0.0}, cap};
    d.validate();
    return d;
}
FittedDist FittedDist::log_logistic(double a, double b, std::optional<double> cap) {
    FittedDist d{DistFamily::LogLogistic, {a, b}, cap};
    d.validate();
    return d;
}
FittedDist FittedDist::burr(double c, double k, std::optional<double> cap) {
    FittedDist d{DistFamily::Burr, {c, k}, cap};
    d.validate();
    return d;
}
FittedDist FittedDist::log_normal(double sigma, double mu, std::optional<double> cap) {
    FittedDist d{DistFamily::LogNormal, {sigma, mu}, cap};
    d.validate();
    return d;
}
FittedDist FittedDist::nakagami(double m, double g, std::optional<double> cap) {
    FittedDist d{DistFamily::Nakagami, {m, g}, cap};
    d.validate();
    return d;
}

std::array<const char*, 2> FittedDist::param_names() const {
    switch (family) {
        case DistFamily::Exponential: return {"rate", ""};
        case DistFamily::LogLogistic: return {"a", "b"};
        case DistFamily::Burr: return {"c", "k"};
        case DistFamily::LogNormal: return {"sigma", "mu"};
        case DistFamily::Nakagami: return {"m", "g"};
    }
    return {"", ""};
}

void FittedDist::validate() const {
    const auto names = param_names();
    require_positive(p[0], names[0]);
    if (n_params() == 2 && family != DistFamily::LogNormal) require_positive(p[1], names[1]);
    if (family == DistFamily::LogNormal && !std::isfinite(p[1]))
        throw validation_error("must be finite", "mu");
    if (truncation_cap && !(*truncation_cap > 0.0))
        throw validation_error("must be positive", "truncation_cap");
}

double pdf_eval(const FittedDist& dist, double y) {
    if (y < 0.0) throw std::invalid_argument("pdf_eval: y must be >= 0");
    switch (dist.family) {
        case DistFamily::Exponential: {
            const double rate = dist.p[0];
            return rate * std::exp(-rate * y);
        }
        case DistFamily::LogLogistic: {
            const double a = dist.p[0], b = dist.p[1];
            if (y == 0.0) return b > 1.0 ? 0.0 : (b == 1.0 ? 1.0 / a : 0.0); // divergence guarded
            const double t = std::pow(y / a, b);
            const double den = 1.0 + t;
            return (b / a) * std::pow(y / a, b - 1.0) / (den * den);
        }
        case DistFamily::Burr: {
            const double c = dist.p[0], k = dist.p[1];
            if (y == 0.0) return c > 1.0 ? 0.0 : (c == 1.0 ? k : 0.0);
            const double t = std::pow(y, c);
            return c * k * std::pow(y, c - 1.0) / std::pow(1.0 + t, k + 1.0);
        }
        case DistFamily::LogNormal: {
            const double sigma = dist.p[0], mu = dist.p[1];
            if (y == 0.0) return 0.0;
            const double z = (std::log(y) - mu) / sigma;
            return std::exp(-0.5 * z * z) / (y * sigma * std::sqrt(2.0 * M_PI));
        }
        case DistFamily::Nakagami: {
            const double m = dist.p[0], g = dist.p[1];
            if (y == 0.0) return m > 0.5 ? 0.0 : (m == 0.5 ? std::exp(m * std::log(m) - std::lgamma(m) - m * std::log(g)) * 2.0 : 0.0);
            const double log_pdf = std::log(2.0) + m * std::log(m) - std::lgamma(m) -
                                   m * std::log(g) + (2.0 * m - 1.0) * std::log(y) -
                                   (m / g) * y * y;
            return std::exp(log_pdf);
        }
    }
    return 0.0;
}

double cdf_eval(const FittedDist& dist, double y) {
    if (y < 0.0) throw std::invalid_argument("cdf_eval: y must be >= 0");
    if (y == 0.0) return 0.0;
    switch (dist.family) {
        case DistFamily::Exponential:
            return -std::expm1(-dist.p[0] * y);
        case DistFamily::LogLogistic: {
            const double t = std::pow(y / dist.p[0], dist.p[1]);
            return t / (1.0 + t);
        }
        case DistFamily::Burr:
            return 1.0 - std::pow(1.0 + std::pow(y, dist.p[0]), -dist.p[1]);
        case DistFamily::LogNormal:
            return normal_cdf((std::log(y) - dist.p[1]) / dist.p[0]);
        case DistFamily::Nakagami:
            return gamma_p(dist.p[0], dist.p[0] * y * y / dist.p[1]);
    }
    return 0.0;
}

double quantile(const FittedDist& dist, double u) {
    if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("quantile: u must be in [0,1)");
    if (u == 0.0) return 0.0;
    switch (dist.family) {
        case DistFamily::Exponential:
            return -std::log1p(-u) / dist.p[0];
        case DistFamily::LogLogistic:
            return dist.p[0] * std::pow(u / (1.0 - u), 1.0 / dist.p[1]);
        case DistFamily::Burr:
            return std::pow(std::pow(1.0 - u, -1.0 / dist.p[1]) - 1.0, 1.0 / dist.p[0]);
        case DistFamily::LogNormal:
            return std::exp(dist.p[1] + dist.p[0] * normal_quantile(u));
        case DistFamily::Nakagami: {
            // y^2 ~ Gamma(shape m, scale g/m); invert the regularized gamma by
            // bracketed bisection.
            const double m = dist.p[0], g = dist.p[1];
            double hi = std::max(1.0, m);
            while (gamma_p(m, hi) < u) hi *= 2.0;
            double lo = 0.0;
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                (gamma_p(m, mid) < u ? lo : hi) = mid;
            }
            return std::sqrt((g / m) * 0.5 * (lo + hi));
        }
    }
    return 0.0;
}

double sample(const FittedDist& dist, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return quantile(dist, unit(rng));
}

double sample_capped(const FittedDist& dist, std::mt19937_64& rng) {
    if (!dist.truncation_cap) return sample(dist, rng);
    const double cap = *dist.truncation_cap;
    if (cdf_eval(dist, cap) < 1e-9)
        throw convergence_error("sample_capped: cap mass too small for rejection sampling");
    for (int attempt = 0; attempt < 1000000; ++attempt) {
        const double v = sample(dist, rng);
        if (v <= cap) return v;
    }
    throw convergence_error("sample_capped: rejection loop exhausted");
}

double ks_statistic(std::span<const double> samples, const FittedDist& dist) {
    if (samples.empty()) throw validation_error("samples must be nonempty", "samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf_eval(dist, sorted[i]);
        d = std::max(d, std::fabs(f - static_cast<double>(i + 1) / n));
        d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
    }
    return d;
}

namespace {

std::vector<double> clean_samples(std::span<const double> samples, bool log_domain) {
    if (samples.size() < 100)
        throw validation_error("need at least 100 samples", "samples");
    double min_pos = std::numeric_limits<double>::infinity();
    for (double v : samples) {
        if (!std::isfinite(v) || v < 0.0)
            throw validation_error("samples must be finite and nonnegative", "samples");
        if (v > 0.0) min_pos = std::min(min_pos, v);
    }
    std::vector<double> out(samples.begin(), samples.end());
    if (log_domain) {
        if (!std::isfinite(min_pos))
            throw validation_error("all samples are zero", "samples");
        for (double& v : out)
            if (v == 0.0) v = min_pos * 1e-3; // keep log-domain likelihoods finite
    }
    return out;
}

FittedDist fit_log_logistic(const std::vector<double>& y) {
    std::vector<double> ly(y.size());
    std::transform(y.begin(), y.end(), ly.begin(), [](double v) { return std::log(v); });
    const double n = static_cast<double>(ly.size());
    const double mean_ly = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double var_ly = 0.0;
    for (double l : ly) var_ly += (l - mean_ly) * (l - mean_ly);
    var_ly /= n;
    // ln Y is logistic(ln a, 1/b): sd = pi / (b sqrt(3)).
    const double b0 = M_PI / std::sqrt(3.0 * std::max(var_ly, 1e-12));

    auto objective = [&](const std::array<double, 2>& x, std::array<double, 2>& grad) {
        const double la = x[0], b = std::exp(x[1]);
        double nll = 0.0, mean_sig = 0.0, mean_lsig = 0.0;
        for (double l : ly) {
            const double t = b * (l - la);
            nll += -(std::log(b) - la + (b - 1.0) * (l - la)) + 2.0 * softplus(t);
            const double s = sigmoid(t);
            mean_sig += s;
            mean_lsig += (l - la) * (1.0 - 2.0 * s);
        }
        nll /= n;
        mean_sig /= n;
        mean_lsig /= n;
        grad[0] = b * (1.0 - 2.0 * mean_sig);
        grad[1] = -(1.0 + b * mean_lsig);
        return nll;
    };
    const auto r = minimize_with_restarts(objective, {mean_ly, std::log(b0)},
                                          DistFamily::LogLogistic);
    return FittedDist::log_logistic(std::exp(r.x[0]), std::exp(r.x[1]));
}

FittedDist fit_burr(const std::vector<double>& y) {
    std::vector<double> ly(y.size());
    std::transform(y.begin(), y.end(), ly.begin(), [](double v) { return std::log(v); });
    const double n = static_cast<double>(ly.size());
    const double mean_ly = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double var_ly = 0.0;
    for (double l : ly) var_ly += (l - mean_ly) * (l - mean_ly);
    var_ly /= n;
    const double c0 = M_PI / std::sqrt(3.0 * std::max(var_ly, 1e-12));
    double sp0 = 0.0;
    for (double l : ly) sp0 += softplus(c0 * l);
    const double k0 = n / std::max(sp0, 1e-12); // profile-likelihood k given c

    auto objective = [&](const std::array<double, 2>& x, std::array<double, 2>& grad) {
        const double c = std::exp(x[0]), k = std::exp(x[1]);
        double nll = 0.0, mean_sp = 0.0, mean_lsig = 0.0, mean_l = 0.0;
        for (double l : ly) {
            const double t = c * l;
            const double sp = softplus(t);
            nll += -(std::log(c) + std::log(k) + (c - 1.0) * l - (k + 1.0) * sp);
            mean_sp += sp;
            mean_lsig += l * sigmoid(t);
            mean_l += l;
        }
        nll /= n;
        mean_sp /= n;
        mean_lsig /= n;
        mean_l /= n;
        grad[0] = -c * (1.0 / c + mean_l - (k + 1.0) * mean_lsig);
        grad[1] = -(1.0 - k * mean_sp);
        return nll;
    };
    const auto r =
        minimize_with_restarts(objective, {std::log(c0), std::log(k0)}, DistFamily::Burr);
    return FittedDist::burr(std::exp(r.x[0]), std::exp(r.x[1]));
}

FittedDist fit_nakagami(const std::vector<double>& y) {
    const double n = static_cast<double>(y.size());
    double mean_y2 = 0.0, mean_ly2 = 0.0, mean_y4 = 0.0;
    for (double v : y) {
        mean_y2 += v * v;
        mean_y4 += v * v * v * v;
        mean_ly2 += 2.0 * std::log(v);
    }
    mean_y2 /= n;
    mean_y4 /= n;
    mean_ly2 /= n;
    const double var_y2 = std::max(mean_y4 - mean_y2 * mean_y2, 1e-300);
    const double m0 = std::max(mean_y2 * mean_y2 / var_y2, 1e-3); // gamma moment estimate

    auto objective = [&](const std::array<double, 2>& x, std::array<double, 2>& grad) {
        const double m = std::exp(x[0]), g = std::exp(x[1]);
        const double nll = -(std::log(2.0) + m * std::log(m) - std::lgamma(m) -
                             m * std::log(g) + (m - 0.5) * mean_ly2 - (m / g) * mean_y2);
        grad[0] = -m * (std::log(m) + 1.0 - digamma(m) - std::log(g) + mean_ly2 - mean_y2 / g);
        grad[1] = -(m * mean_y2 / g - m);
        return nll;
    };
    const auto r = minimize_with_restarts(objective, {std::log(m0), std::log(mean_y2)},
                                          DistFamily::Nakagami);
    return FittedDist::nakagami(std::exp(r.x[0]), std::exp(r.x[1]));
}

} // namespace

FittedDist fit_family_values(std::span<const double> samples, DistFamily family) {
    switch (family) {
        case DistFamily::Exponential: {
            const auto y = clean_samples(samples, false);
            const double mean = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
            if (!(mean > 0.0)) throw validation_error("sample mean must be positive", "samples");
            return FittedDist::exponential(1.0 / mean);
        }
        case DistFamily::LogNormal: {
            const auto y = clean_samples(samples, true);
            double mu = 0.0;
            for (double v : y) mu += std::log(v);
            mu /= y.size();
            double var = 0.0;
            for (double v : y) var += (std::log(v) - mu) * (std::log(v) - mu);
            var /= y.size();
            if (!(var > 0.0))
                throw convergence_error("fit_family: degenerate log-normal (zero variance)");
            return FittedDist::log_normal(std::sqrt(var), mu);
        }
        case DistFamily::LogLogistic: return fit_log_logistic(clean_samples(samples, true));
        case DistFamily::Burr: return fit_burr(clean_samples(samples, true));
        case DistFamily::Nakagami: return fit_nakagami(clean_samples(samples, true));
    }
    throw validation_error("unknown family", "family");
}

FittedDist fit_family(const GainSampleSet& samples, DistFamily family) {
    FittedDist d = fit_family_values(samples.samples, family);
    if (samples.kind == GainKind::Misaligned)
        d.truncation_cap = static_cast<double>(samples.n_tx) * samples.n_rx;
    return d;
}

double SurfaceFit::mu_at(int n_tx, int n_rx) const {
    return coeff * std::pow(static_cast<double>(n_tx) * n_rx, expo);
}

SurfaceFit fit_power_surface(std::span<const SurfacePoint> grid) {
    if (grid.size() < 3)
        throw std::invalid_argument("fit_power_surface: need at least 3 grid points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double first = -1.0;
    bool distinct = false;
    for (const auto& pt : grid) {
        if (pt.n_tx < 1 || pt.n_rx < 1 || !(pt.mu_o > 0.0))
            throw std::invalid_argument("fit_power_surface: invalid grid point");
        const double x = std::log(static_cast<double>(pt.n_tx) * pt.n_rx);
        const double y = std::log(pt.mu_o);
        if (first < 0.0) first = x;
        else if (std::fabs(x - first) > 1e-12) distinct = true;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    if (!distinct)
        throw std::invalid_argument("fit_power_surface: all grid points share one product");
    const double n = static_cast<double>(grid.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    return SurfaceFit{std::exp(intercept), slope};
}

} // namespace mmsir
