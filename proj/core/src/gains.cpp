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

#include "mmsir/gains.hpp"

#include <cmath>
#include <string>
#include <thread>

#include "mmsir/errors.hpp"
#include "mmsir/rng.hpp"

namespace mmsir {

const char* to_string(GainKind kind) {
    return kind == GainKind::Aligned ? "aligned" : "misaligned";
}

GainKind gain_kind_from_string(const std::string& s) {
    if (s == "aligned") return GainKind::Aligned;
    if (s == "misaligned") return GainKind::Misaligned;
    throw validation_error("unknown gain kind '" + s + "'", "kind");
}

double beam_gain(const ClusterRealization& realization, double steer_aoa, double steer_aod,
                 const SystemParams& params) {
    const double cos_rx = std::cos(steer_aoa);
    const double cos_tx = std::cos(steer_aod);
    cplx sum{0.0, 0.0};
    for (const auto& cluster : realization.clusters) {
        for (const auto& sp : cluster.subpaths) {
            const cplx rx = signature_inner(std::cos(sp.aoa), cos_rx, params.n_rx);
            const cplx tx = signature_inner(std::cos(sp.aod), cos_tx, params.n_tx);
            sum += std::sqrt(sp.power) * std::polar(1.0, -sp.phase) * rx * tx;
        }
    }
    return std::norm(sum) / (static_cast<double>(params.n_rx) * params.n_tx);
}

double aligned_gain(const ClusterRealization& realization, const SystemParams& params) {
    const Subpath* strongest = nullptr;
    for (const auto& cluster : realization.clusters)
        for (const auto& sp : cluster.subpaths)
            if (!strongest || sp.power > strongest->power) strongest = &sp;
    return beam_gain(realization, strongest->aoa, strongest->aod, params);
}

double misaligned_gain(const ClusterRealization& realization, std::mt19937_64& rng,
                       const SystemParams& params) {
    // Interfering beams land uniformly on the array's beamspace (cos-domain)
    // grid, the continuum limit of a DFT codebook sweep.
    std::uniform_real_distribution<double> beamspace(-1.0, 1.0);
    const double steer_aoa = std::acos(beamspace(rng));
    const double steer_aod = std::acos(beamspace(rng));
    return beam_gain(realization, steer_aoa, steer_aod, params);
}

GainSampleSet sample_gain_set(GainKind kind, std::size_t n_samples, const SystemParams& params,
                              int n_threads) {
    if (n_samples == 0) throw std::invalid_argument("sample_gain_set: n_samples must be >= 1");
    params.validate();

    GainSampleSet set;
    set.kind = kind;
    set.n_tx = params.n_tx;
    set.n_rx = params.n_rx;
    set.seed = params.rng_seed;
    set.samples.resize(n_samples);

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto rng = make_stream(params.rng_seed, i);
            const auto realization = sample_cluster_realization(rng, params);
            set.samples[i] = (kind == GainKind::Aligned)
                                 ? aligned_gain(realization, params)
                                 : misaligned_gain(realization, rng, params);
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = n_threads > 0 ? static_cast<unsigned>(n_threads) : (hw ? hw : 1);
    if (workers <= 1 || n_samples < 2 * workers) {
        worker(0, n_samples);
        return set;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n_samples + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(n_samples, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
    return set;
}

} // namespace mmsir
