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

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "mmsir/coverage.hpp"
#include "mmsir/dist_fit.hpp"
#include "mmsir/params.hpp"

namespace mmsir {

/// One Poisson network drop around a typical UE at the origin.
struct NetworkSnapshot {
    struct Bs {
        double x = 0.0;
        double y = 0.0;
        double distance = 0.0;
        LinkState state = LinkState::LoS;
    };
    std::vector<Bs> bs;   // at least one (empty draws are resampled)
    int serving_index = -1;
    double region_radius = 0.0;
    int resampled_empty = 0; // empty draws discarded before this snapshot

    const Bs& serving() const { return bs[static_cast<std::size_t>(serving_index)]; }
    LinkState serving_state() const { return serving().state; }
};

/// Poisson(lambda * pi * R^2) BS count, uniform positions on the disc,
/// independent per-BS LoS states, association by maximum path-loss gain.
NetworkSnapshot generate_snapshot(std::mt19937_64& rng, const SystemParams& params,
                                  double region_radius);

struct SirSample {
    double sir_linear = 0.0; // +inf when the snapshot has no interferer
    LinkState serving_state = LinkState::LoS;

    bool infinite() const { return std::isinf(sir_linear); }
};

/// Gain models for the SIR computation.
/// FittedGains: G_o ~ Exponential(mu_o), G_x i.i.d. from gx rejection-capped
/// at its truncation_cap. FullChannelGains: every gain sampled through the
/// cluster channel model. UnitGains: all gains 1 (testing).
struct FittedGains {
    double mu_o = 0.0;
    FittedDist gx;
};
struct FullChannelGains {};
struct UnitGains {};
using GainSource = std::variant<FittedGains, FullChannelGains, UnitGains>;

/// Per-snapshot SIR per the unit-transmit-power model: serving gain times
/// serving path loss over the sum of per-interferer gain times path loss.
SirSample snapshot_sir(const NetworkSnapshot& snapshot, const GainSource& gains,
                       std::mt19937_64& rng, const SystemParams& params);

/// Monte Carlo coverage estimate over n_drops independent snapshots with
/// per-drop RNG streams; deterministic for fixed params.rng_seed regardless
/// of thread count. Includes per-point standard errors.
CoverageCurve empirical_coverage(std::size_t n_drops, std::span<const double> t_grid_db,
                                 const GainSource& gains, const SystemParams& params,
                                 double region_radius, int n_threads = 0);

} // namespace mmsir
