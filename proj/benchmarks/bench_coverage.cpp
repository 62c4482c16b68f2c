// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "mmsir/coverage.hpp"
#include "mmsir/network_sim.hpp"
#include "mmsir/rng.hpp"
#include "mmsir/table_data.hpp"

using namespace mmsir;

namespace {

SystemParams params_256x64() {
    SystemParams p;
    p.n_tx = 256;
    p.n_rx = 64;
    return p;
}

void GainTransformBuild(benchmark::State& state) {
    const auto gx = bundled_loglogistic(256, 64);
    for (auto _ : state) {
        GainTransform transform(gx);
        benchmark::DoNotOptimize(transform);
    }
}
BENCHMARK(GainTransformBuild);

void LaplaceFunctional(benchmark::State& state) {
    const auto p = params_256x64();
    const CoverageEvaluator evaluator(p, bundled_loglogistic(256, 64),
                                      bundled_mu_surface().mu_at(256, 64));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            evaluator.laplace_interference(1.0, 60.0, LinkState::LoS, LinkState::NLoS));
}
BENCHMARK(LaplaceFunctional);

void CoveragePoint(benchmark::State& state) {
    const auto p = params_256x64();
    const CoverageEvaluator evaluator(p, bundled_loglogistic(256, 64),
                                      bundled_mu_surface().mu_at(256, 64));
    for (auto _ : state) benchmark::DoNotOptimize(evaluator.coverage_probability(1.0));
}
BENCHMARK(CoveragePoint);

void AssociationPdf(benchmark::State& state) {
    const auto p = params_256x64();
    for (auto _ : state)
        benchmark::DoNotOptimize(association_pdf(60.0, LinkState::LoS, p));
}
BENCHMARK(AssociationPdf);

void SnapshotAndSir(benchmark::State& state) {
    const auto p = params_256x64();
    const FittedGains gains{bundled_mu_surface().mu_at(256, 64), bundled_loglogistic(256, 64)};
    std::uint64_t drop = 0;
    for (auto _ : state) {
        auto rng = make_stream(7, drop++);
        const auto snap = generate_snapshot(rng, p, 2000.0);
        benchmark::DoNotOptimize(snapshot_sir(snap, gains, rng, p));
    }
}
BENCHMARK(SnapshotAndSir);

} // namespace

BENCHMARK_MAIN();
