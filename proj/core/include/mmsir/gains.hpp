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
#include <vector>

#include "mmsir/channel.hpp"
#include "mmsir/params.hpp"

namespace mmsir {

enum class GainKind { Aligned, Misaligned };

const char* to_string(GainKind kind);
GainKind gain_kind_from_string(const std::string& s);

/// Monte Carlo gain samples for one antenna configuration, one fresh channel
/// realization per sample.
struct GainSampleSet {
    GainKind kind = GainKind::Aligned;
    int n_tx = 0;
    int n_rx = 0;
    std::uint64_t seed = 0;
    std::vector<double> samples; // linear power gains, all >= 0
};

/// Beamforming power gain |w_rx^T H w_tx|^2 for arbitrary steering angles,
/// evaluated through the factored subpath sum (no matrix materialization).
double beam_gain(const ClusterRealization& realization, double steer_aoa, double steer_aod,
                 const SystemParams& params);

/// Gain with both beams matched to the AoA/AoD of the strongest subpath.
double aligned_gain(const ClusterRealization& realization, const SystemParams& params);

/// Gain with both steering angles drawn i.i.d. Uniform[0, 2pi), independent
/// of the realization's signature angles.
double misaligned_gain(const ClusterRealization& realization, std::mt19937_64& rng,
                       const SystemParams& params);

/// Batched i.i.d. sampling driver; deterministic under a fixed params.rng_seed
/// regardless of thread count (per-sample RNG streams). n_threads = 0 picks
/// the hardware concurrency.
GainSampleSet sample_gain_set(GainKind kind, std::size_t n_samples, const SystemParams& params,
                              int n_threads = 0);

} // namespace mmsir
