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

#include "mmsir/network_sim.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "mmsir/channel.hpp"
#include "mmsir/errors.hpp"
#include "mmsir/gains.hpp"
#include "mmsir/rng.hpp"

namespace mmsir {

NetworkSnapshot generate_snapshot(std::mt19937_64& rng, const SystemParams& params,
                                  double region_radius) {
    if (!(region_radius > 0.0))
        throw std::invalid_argument("generate_snapshot: region_radius must be > 0");
    params.validate();

    const double mean_count =
        params.bs_density * std::numbers::pi * region_radius * region_radius;
    std::poisson_distribution<int> count_dist(mean_count);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    NetworkSnapshot snap;
    snap.region_radius = region_radius;
    int count = 0;
    while ((count = count_dist(rng)) == 0) ++snap.resampled_empty;

    snap.bs.resize(static_cast<std::size_t>(count));
    double best_gain = -1.0;
    for (int k = 0; k < count; ++k) {
        auto& bs = snap.bs[static_cast<std::size_t>(k)];
        const double radius = region_radius * std::sqrt(unit(rng)); // uniform on the disc
        const double phi = angle(rng);
        bs.x = radius * std::cos(phi);
        bs.y = radius * std::sin(phi);
        bs.distance = radius;
        bs.state = unit(rng) < p_los(radius, params) ? LinkState::LoS : LinkState::NLoS;
        const double gain = path_loss(std::max(radius, 1e-6), bs.state, params);
        if (gain > best_gain) {
            best_gain = gain;
            snap.serving_index = k;
        }
    }
    return snap;
}

namespace {

struct GainDraw {
    double serving;
    std::vector<double> interferers;
};

GainDraw draw_gains(const NetworkSnapshot& snapshot, const GainSource& gains,
                    std::mt19937_64& rng, const SystemParams& params) {
    GainDraw out;
    const std::size_t n_interferers = snapshot.bs.size() - 1;
    out.interferers.reserve(n_interferers);
    if (std::holds_alternative<UnitGains>(gains)) {
        out.serving = 1.0;
        out.interferers.assign(n_interferers, 1.0);
    } else if (const auto* fitted = std::get_if<FittedGains>(&gains)) {
        if (!(fitted->mu_o > 0.0)) throw validation_error("must be positive", "mu_o");
        std::exponential_distribution<double> exp_dist(fitted->mu_o);
        out.serving = exp_dist(rng);
        for (std::size_t k = 0; k < n_interferers; ++k)
            out.interferers.push_back(sample_capped(fitted->gx, rng));
    } else {
        const auto serving_link = sample_cluster_realization(rng, params);
        out.serving = aligned_gain(serving_link, params);
        for (std::size_t k = 0; k < n_interferers; ++k) {
            const auto link = sample_cluster_realization(rng, params);
            out.interferers.push_back(misaligned_gain(link, rng, params));
        }
    }
    return out;
}

} // namespace

SirSample snapshot_sir(const NetworkSnapshot& snapshot, const GainSource& gains,
                       std::mt19937_64& rng, const SystemParams& params) {
    if (snapshot.bs.empty() || snapshot.serving_index < 0)
        throw std::invalid_argument("snapshot_sir: snapshot has no serving BS");
    const auto draw = draw_gains(snapshot, gains, rng, params);

    SirSample sample;
    sample.serving_state = snapshot.serving_state();
    const auto& serving = snapshot.serving();
    const double signal =
        draw.serving * path_loss(std::max(serving.distance, 1e-6), serving.state, params);

    double interference = 0.0;
    std::size_t g = 0;
    for (int k = 0; k < static_cast<int>(snapshot.bs.size()); ++k) {
        if (k == snapshot.serving_index) continue;
        const auto& bs = snapshot.bs[static_cast<std::size_t>(k)];
        interference +=
            draw.interferers[g++] * path_loss(std::max(bs.distance, 1e-6), bs.state, params);
    }
    sample.sir_linear = interference > 0.0
                            ? signal / interference
                            : std::numeric_limits<double>::infinity();
    return sample;
}

CoverageCurve empirical_coverage(std::size_t n_drops, std::span<const double> t_grid_db,
                                 const GainSource& gains, const SystemParams& params,
                                 double region_radius, int n_threads) {
    if (n_drops == 0) throw std::invalid_argument("empirical_coverage: n_drops must be >= 1");
    if (t_grid_db.empty()) throw validation_error("threshold grid must be nonempty", "t_grid_db");
    params.validate();

    std::vector<double> t_linear(t_grid_db.size());
    for (std::size_t k = 0; k < t_grid_db.size(); ++k)
        t_linear[k] = std::pow(10.0, t_grid_db[k] / 10.0);

    std::vector<std::vector<std::size_t>> counts; // per worker, per threshold
    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = n_threads > 0 ? static_cast<unsigned>(n_threads) : (hw ? hw : 1);
    if (n_drops < 4 * workers) workers = 1;
    counts.assign(workers, std::vector<std::size_t>(t_grid_db.size(), 0));

    auto run = [&](unsigned worker_id, std::size_t begin, std::size_t end) {
        auto& local = counts[worker_id];
        for (std::size_t drop = begin; drop < end; ++drop) {
            auto rng = make_stream(params.rng_seed, drop);
            const auto snap = generate_snapshot(rng, params, region_radius);
            const auto sir = snapshot_sir(snap, gains, rng, params);
            for (std::size_t k = 0; k < t_linear.size(); ++k)
                if (sir.sir_linear >= t_linear[k]) ++local[k];
        }
    };

    if (workers == 1) {
        run(0, 0, n_drops);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n_drops + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n_drops, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run, w, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    CoverageCurve curve;
    curve.method = CurveMethod::MonteCarlo;
    curve.params = params;
    if (const auto* fitted = std::get_if<FittedGains>(&gains))
        curve.gx_family = to_string(fitted->gx.family);
    else if (std::holds_alternative<FullChannelGains>(gains))
        curve.gx_family = "full_channel";
    else
        curve.gx_family = "unit";
    curve.thresholds_db.assign(t_grid_db.begin(), t_grid_db.end());
    curve.coverages.resize(t_grid_db.size());
    curve.stderrs.resize(t_grid_db.size());
    for (std::size_t k = 0; k < t_grid_db.size(); ++k) {
        std::size_t hits = 0;
        for (const auto& local : counts) hits += local[k];
        const double p = static_cast<double>(hits) / static_cast<double>(n_drops);
        curve.coverages[k] = p;
        curve.stderrs[k] = std::sqrt(p * (1.0 - p) / static_cast<double>(n_drops));
    }
    curve.validate();
    return curve;
}

} // namespace mmsir
