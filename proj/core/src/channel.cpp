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

#include "mmsir/channel.hpp"

#include <cmath>
#include <numbers>

#include "mmsir/errors.hpp"

namespace mmsir {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSpreadFloor = 0.0122;   // radians
constexpr double kSpreadMean = 0.178;     // radians, exponential mean
constexpr double kClusterMean = 1.8;      // Poisson mean of the cluster count
constexpr int kMaxSubpaths = 10;
constexpr double kPowerDecayExponent = 2.8; // tau; per-cluster factor U^(tau-1)
constexpr double kPowerSumTol = 1e-12;

} // namespace

int ClusterRealization::total_subpaths() const {
    int n = 0;
    for (const auto& c : clusters) n += static_cast<int>(c.subpaths.size());
    return n;
}

void ClusterRealization::validate() const {
    if (clusters.empty()) throw validation_error("cluster count must be >= 1", "clusters");
    double power_sum = 0.0;
    for (const auto& c : clusters) {
        if (c.subpath_count < 1 || c.subpath_count > kMaxSubpaths)
            throw validation_error("subpath count outside [1,10]", "subpath_count");
        if (static_cast<int>(c.subpaths.size()) != c.subpath_count)
            throw validation_error("subpath list size mismatch", "subpaths");
        if (c.angular_spread < kSpreadFloor)
            throw validation_error("angular spread below floor", "angular_spread");
        for (const auto& s : c.subpaths) {
            if (!(s.power >= 0.0 && s.power <= 1.0))
                throw validation_error("subpath power outside [0,1]", "power");
            power_sum += s.power;
        }
    }
    if (std::fabs(power_sum - 1.0) > kPowerSumTol)
        throw validation_error("subpath powers do not sum to 1", "power");
}

ClusterRealization sample_cluster_realization(std::mt19937_64& rng, const SystemParams& params) {
    params.validate();

    std::poisson_distribution<int> cluster_count_dist(kClusterMean);
    std::uniform_int_distribution<int> subpath_count_dist(1, kMaxSubpaths);
    std::uniform_real_distribution<double> angle_dist(0.0, kTwoPi);
    std::exponential_distribution<double> spread_dist(1.0 / kSpreadMean);
    std::uniform_real_distribution<double> unit_dist(0.0, 1.0);
    std::normal_distribution<double> shadow_dist(0.0, 4.0);
    std::uniform_real_distribution<double> subpath_var_dist(0.0, 0.6);

    ClusterRealization out;
    const int cluster_count = std::max(cluster_count_dist(rng), 1);
    out.clusters.resize(cluster_count);

    double raw_sum = 0.0;
    for (auto& cluster : out.clusters) {
        cluster.subpath_count = subpath_count_dist(rng);
        cluster.central_aoa = angle_dist(rng);
        cluster.central_aod = angle_dist(rng);
        cluster.angular_spread = std::max(spread_dist(rng), kSpreadFloor);

        const double u = unit_dist(rng);
        const double z = shadow_dist(rng);
        const double cluster_factor = std::pow(u, kPowerDecayExponent - 1.0);

        cluster.subpaths.resize(cluster.subpath_count);
        for (int l = 1; l <= cluster.subpath_count; ++l) {
            auto& sp = cluster.subpaths[l - 1];
            const double offset = ((l % 2 == 0) ? 0.5 : -0.5) * cluster.angular_spread;
            sp.aoa = cluster.central_aoa + offset;
            sp.aod = cluster.central_aod + offset;
            const double v = subpath_var_dist(rng);
            sp.power = cluster_factor * std::pow(10.0, -0.1 * z + v) / cluster.subpath_count;
            sp.phase = angle_dist(rng);
            raw_sum += sp.power;
        }
    }
    for (auto& cluster : out.clusters)
        for (auto& sp : cluster.subpaths) sp.power /= raw_sum;
    return out;
}

std::pair<int, int> planar_split(int n) {
    if (n < 1) throw std::invalid_argument("planar_split: n must be >= 1");
    for (int h = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))); h <= n; ++h)
        if (n % h == 0) return {h, n / h};
    return {n, 1};
}

std::vector<cplx> spatial_signature(double theta, int n) {
    if (n < 1) throw std::invalid_argument("spatial_signature: n must be >= 1");
    const auto [n_h, n_v] = planar_split(n);
    std::vector<cplx> u(static_cast<std::size_t>(n));
    const double phase_step = std::numbers::pi * std::cos(theta);
    for (int m = 0; m < n_h; ++m) {
        const cplx e = std::polar(1.0, phase_step * m);
        for (int v = 0; v < n_v; ++v) u[static_cast<std::size_t>(m) * n_v + v] = e;
    }
    return u;
}

BeamVector beamforming_vector(double theta, int n) {
    if (n < 1) throw std::invalid_argument("beamforming_vector: n must be >= 1");
    BeamVector w;
    w.steer_angle = theta;
    w.entries = spatial_signature(theta, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& e : w.entries) e = std::conj(e) * scale;
    return w;
}

double ChannelMatrix::frobenius_sq() const {
    double s = 0.0;
    for (const auto& e : entries) s += std::norm(e);
    return s;
}

ChannelMatrix channel_matrix(const ClusterRealization& realization, const SystemParams& params) {
    realization.validate();
    ChannelMatrix h;
    h.n_rx = params.n_rx;
    h.n_tx = params.n_tx;
    h.entries.assign(static_cast<std::size_t>(h.n_rx) * h.n_tx, cplx{0.0, 0.0});
    for (const auto& cluster : realization.clusters) {
        for (const auto& sp : cluster.subpaths) {
            const cplx g = std::sqrt(sp.power) * std::polar(1.0, -sp.phase);
            const auto u_rx = spatial_signature(sp.aoa, h.n_rx);
            const auto u_tx = spatial_signature(sp.aod, h.n_tx);
            for (int r = 0; r < h.n_rx; ++r) {
                const cplx gr = g * u_rx[r];
                for (int t = 0; t < h.n_tx; ++t) h.at(r, t) += gr * u_tx[t];
            }
        }
    }
    return h;
}

cplx array_factor(double delta_cos, int n) {
    // e^{j pi m 2q} = 1 for integer q, so the sum only depends on x mod 2;
    // reducing to [-1, 1] keeps the lone singular point at x = 0.
    const double x = delta_cos - 2.0 * std::round(0.5 * delta_cos);
    // sum_{m=0}^{n-1} e^{j pi m x} = e^{j pi x (n-1)/2} sin(n pi x/2) / sin(pi x/2)
    const double half = 0.5 * std::numbers::pi * x;
    const double denom = std::sin(half);
    const cplx rotation = std::polar(1.0, half * (n - 1));
    if (std::fabs(denom) < 1e-12) return rotation * static_cast<double>(n);
    return rotation * (std::sin(half * n) / denom);
}

cplx signature_inner(double cos_theta, double cos_steer, int n) {
    const auto [n_h, n_v] = planar_split(n);
    return array_factor(cos_theta - cos_steer, n_h) * static_cast<double>(n_v);
}

} // namespace mmsir
