// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "mmsir/gains.hpp"
#include "mmsir/rng.hpp"

using namespace mmsir;

namespace {

SystemParams params_for(int n_tx, int n_rx) {
    SystemParams p;
    p.n_tx = n_tx;
    p.n_rx = n_rx;
    return p;
}

void RealizationSampling(benchmark::State& state) {
    const auto p = params_for(256, 64);
    auto rng = make_stream(1, 0);
    for (auto _ : state) {
        auto re = sample_cluster_realization(rng, p);
        benchmark::DoNotOptimize(re);
    }
}
BENCHMARK(RealizationSampling);

void AlignedGain(benchmark::State& state) {
    const auto p = params_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    auto rng = make_stream(2, 0);
    const auto re = sample_cluster_realization(rng, p);
    for (auto _ : state) benchmark::DoNotOptimize(aligned_gain(re, p));
}
BENCHMARK(AlignedGain)->Args({64, 16})->Args({256, 64});

void MisalignedGain(benchmark::State& state) {
    const auto p = params_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    auto rng = make_stream(2, 0); // same realization as AlignedGain
    const auto re = sample_cluster_realization(rng, p);
    for (auto _ : state) benchmark::DoNotOptimize(misaligned_gain(re, rng, p));
}
BENCHMARK(MisalignedGain)->Args({64, 16})->Args({256, 64});

void ChannelMatrixMaterialization(benchmark::State& state) {
    const auto p = params_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    auto rng = make_stream(4, 0);
    const auto re = sample_cluster_realization(rng, p);
    for (auto _ : state) benchmark::DoNotOptimize(channel_matrix(re, p));
}
BENCHMARK(ChannelMatrixMaterialization)->Args({16, 4})->Args({64, 16});

void GainBatch(benchmark::State& state) {
    const auto p = params_for(256, 64);
    for (auto _ : state) {
        auto set = sample_gain_set(GainKind::Misaligned, 1000, p, 1);
        benchmark::DoNotOptimize(set);
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(GainBatch);

} // namespace
