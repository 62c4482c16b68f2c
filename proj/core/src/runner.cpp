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

#include "mmsir/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mmsir/errors.hpp"
#include "mmsir/io.hpp"
#include "mmsir/network_sim.hpp"
#include "mmsir/table_data.hpp"

namespace mmsir {

namespace fs = std::filesystem;

namespace {

std::string format_double(double v, const char* fmt = "%.12g") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

void write_text(const fs::path& path, const std::string& text, RunResult& result) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open " + path.string() + " for writing");
    os << text;
    if (!os) throw io_error("write failed for " + path.string());
    result.files.push_back(path);
}

template <class WriteFn>
void write_stream(const fs::path& path, WriteFn&& fn, RunResult& result) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open " + path.string() + " for writing");
    fn(os);
    if (!os) throw io_error("write failed for " + path.string());
    result.files.push_back(path);
}

fs::path ensure_output_dir(const RunConfig& config) {
    fs::path dir(config.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error("cannot create output directory " + dir.string());
    return dir;
}

std::string config_tag(const SystemParams& p) {
    return std::to_string(p.n_tx) + "x" + std::to_string(p.n_rx);
}

GainSampleSet obtain_samples(const RunConfig& config) {
    if (!config.fitting.input_csv.empty()) {
        std::ifstream is(config.fitting.input_csv);
        if (!is) throw io_error("cannot open samples file " + config.fitting.input_csv);
        return read_gain_csv(is);
    }
    return sample_gain_set(config.sampling.kind, config.sampling.n_samples, config.system,
                           config.n_threads);
}

RunResult run_gains(const RunConfig& config) {
    RunResult result;
    const auto dir = ensure_output_dir(config);
    const auto set = sample_gain_set(config.sampling.kind, config.sampling.n_samples,
                                     config.system, config.n_threads);
    write_stream(dir / ("gains_" + std::string(to_string(set.kind)) + "_" +
                        config_tag(config.system) + ".csv"),
                 [&](std::ostream& os) { write_gain_csv(set, os); }, result);
    return result;
}

RunResult run_fit(const RunConfig& config) {
    RunResult result;
    const auto dir = ensure_output_dir(config);
    const auto set = obtain_samples(config);
    std::string report = "family,ks\n";
    for (DistFamily family : config.fitting.families) {
        const FittedDist fit = fit_family(set, family);
        write_text(dir / ("fit_" + std::string(to_string(family)) + ".json"),
                   fitted_dist_to_json(fit) + "\n", result);
        report += std::string(to_string(family)) + "," +
                  format_double(ks_statistic(set.samples, fit)) + "\n";
    }
    write_text(dir / "ks_report.csv", report, result);
    return result;
}

CoverageCurve analytic_curve(const RunConfig& config, const ResolvedGx& resolved) {
    CoverageEvaluator evaluator(config.system, resolved.gx, resolved.mu_o);
    return evaluator.coverage_curve(config.coverage.t_grid_db);
}

CoverageCurve montecarlo_curve(const RunConfig& config, const ResolvedGx& resolved) {
    GainSource source;
    if (config.simulation.gain_mode == SimGainMode::Fitted)
        source = FittedGains{resolved.mu_o, resolved.gx};
    else
        source = FullChannelGains{};
    return empirical_coverage(config.simulation.n_drops, config.coverage.t_grid_db, source,
                              config.system, config.simulation.region_radius, config.n_threads);
}

RunResult run_coverage(const RunConfig& config) {
    RunResult result;
    const auto dir = ensure_output_dir(config);
    const auto curve = analytic_curve(config, resolve_gx(config));
    write_stream(dir / "coverage_analytic.csv",
                 [&](std::ostream& os) { write_curve_csv(curve, os); }, result);
    return result;
}

RunResult run_simulate(const RunConfig& config) {
    RunResult result;
    const auto dir = ensure_output_dir(config);
    ResolvedGx resolved;
    if (config.simulation.gain_mode == SimGainMode::Fitted) resolved = resolve_gx(config);
    const auto curve = montecarlo_curve(config, resolved);
    write_stream(dir / "coverage_montecarlo.csv",
                 [&](std::ostream& os) { write_curve_csv(curve, os); }, result);
    return result;
}

std::string compare_csv(const CoverageCurve& analytic, const CoverageCurve& empirical) {
    std::string out = "T_dB,analytic,empirical,delta,stderr\n";
    for (std::size_t k = 0; k < analytic.thresholds_db.size(); ++k) {
        out += format_double(analytic.thresholds_db[k], "%.10g");
        out += "," + format_double(analytic.coverages[k]);
        out += "," + format_double(empirical.coverages[k]);
        out += "," + format_double(analytic.coverages[k] - empirical.coverages[k]);
        out += "," + format_double(empirical.stderrs[k]) + "\n";
    }
    return out;
}

RunResult run_compare(const RunConfig& config) {
    RunResult result;
    const auto dir = ensure_output_dir(config);
    const auto resolved = resolve_gx(config);
    const auto analytic = analytic_curve(config, resolved);
    const auto empirical = montecarlo_curve(config, resolved);
    write_stream(dir / "coverage_analytic.csv",
                 [&](std::ostream& os) { write_curve_csv(analytic, os); }, result);
    write_stream(dir / "coverage_montecarlo.csv",
                 [&](std::ostream& os) { write_curve_csv(empirical, os); }, result);
    write_text(dir / "compare.csv", compare_csv(analytic, empirical), result);
    return result;
}

RunResult run_reproduce(const RunConfig& base, const std::string& target) {
    RunResult result;
    const auto dir = ensure_output_dir(base);

    if (target == "fig2") {
        RunConfig config = base;
        config.system.n_tx = 256;
        config.system.n_rx = 64;
        config.sampling.kind = GainKind::Aligned;
        const auto set = sample_gain_set(GainKind::Aligned, config.sampling.n_samples,
                                         config.system, config.n_threads);
        const auto fit = fit_family(set, DistFamily::Exponential);
        write_stream(dir / "fig2_gains_aligned_256x64.csv",
                     [&](std::ostream& os) { write_gain_csv(set, os); }, result);
        write_text(dir / "fig2_fit_exponential.json", fitted_dist_to_json(fit) + "\n", result);
        write_text(dir / "fig2_ks.csv",
                   "family,ks\nexponential," +
                       format_double(ks_statistic(set.samples, fit)) + "\n",
                   result);
        return result;
    }
    if (target == "fig3") {
        RunConfig config = base;
        std::vector<SurfacePoint> grid;
        std::string csv = "n_tx,n_rx,mu_o\n";
        for (int tx : {4, 16, 64, 256})
            for (int rx : {4, 16, 64, 256}) {
                config.system.n_tx = tx;
                config.system.n_rx = rx;
                const auto set = sample_gain_set(GainKind::Aligned, config.sampling.n_samples,
                                                 config.system, config.n_threads);
                const auto fit = fit_family(set, DistFamily::Exponential);
                grid.push_back({tx, rx, fit.p[0]});
                csv += std::to_string(tx) + "," + std::to_string(rx) + "," +
                       format_double(fit.p[0]) + "\n";
            }
        const auto surface = fit_power_surface(grid);
        write_text(dir / "fig3_mu_grid.csv", csv, result);
        write_text(dir / "fig3_surface.json", surface_fit_to_json(surface) + "\n", result);
        return result;
    }
    if (target == "fig5") {
        for (auto [tx, rx] : {std::pair{64, 16}, std::pair{256, 64}}) {
            RunConfig config = base;
            config.system.n_tx = tx;
            config.system.n_rx = rx;
            config.coverage.gx_source = GxSource::Bundled;
            config.coverage.gx_family = DistFamily::LogLogistic;
            config.simulation.gain_mode = SimGainMode::Fitted;
            const auto resolved = resolve_gx(config);
            const auto analytic = analytic_curve(config, resolved);
            const auto empirical = montecarlo_curve(config, resolved);
            const std::string tag = config_tag(config.system);
            write_stream(dir / ("fig5_analytic_" + tag + ".csv"),
                         [&](std::ostream& os) { write_curve_csv(analytic, os); }, result);
            write_stream(dir / ("fig5_montecarlo_" + tag + ".csv"),
                         [&](std::ostream& os) { write_curve_csv(empirical, os); }, result);
            write_text(dir / ("fig5_compare_" + tag + ".csv"), compare_csv(analytic, empirical),
                       result);
        }
        return result;
    }
    if (target == "fig6") {
        RunConfig config = base;
        config.system.n_tx = 256;
        config.system.n_rx = 64;
        for (DistFamily family : {DistFamily::LogLogistic, DistFamily::Burr,
                                  DistFamily::LogNormal, DistFamily::Nakagami}) {
            config.coverage.gx_source = GxSource::Bundled;
            config.coverage.gx_family = family;
            const auto curve = analytic_curve(config, resolve_gx(config));
            write_stream(dir / ("fig6_" + std::string(to_string(family)) + "_256x64.csv"),
                         [&](std::ostream& os) { write_curve_csv(curve, os); }, result);
        }
        return result;
    }
    throw validation_error("unknown reproduce target '" + target +
                               "' (expected fig2|fig3|fig5|fig6)",
                           "target");
}

} // namespace

Verb verb_from_string(const std::string& s) {
    if (s == "gains") return Verb::Gains;
    if (s == "fit") return Verb::Fit;
    if (s == "coverage") return Verb::Coverage;
    if (s == "simulate") return Verb::Simulate;
    if (s == "compare") return Verb::Compare;
    if (s == "reproduce") return Verb::Reproduce;
    throw validation_error("unknown command '" + s + "'", "verb");
}

ResolvedGx resolve_gx(const RunConfig& config) {
    ResolvedGx out;
    switch (config.coverage.gx_source) {
        case GxSource::Bundled:
            out.gx = config.coverage.gx_family == DistFamily::LogLogistic
                         ? bundled_loglogistic(config.system.n_tx, config.system.n_rx)
                         : bundled_gx_256x64(config.coverage.gx_family);
            break;
        case GxSource::Explicit:
            out.gx = *config.coverage.gx_explicit;
            break;
        case GxSource::FitFromSamples: {
            auto sampling = config;
            sampling.sampling.kind = GainKind::Misaligned;
            const auto set = obtain_samples(sampling);
            out.gx = fit_family(set, config.coverage.gx_family);
            break;
        }
    }
    out.mu_o = config.coverage.mu_o
                   ? *config.coverage.mu_o
                   : bundled_mu_surface().mu_at(config.system.n_tx, config.system.n_rx);
    return out;
}

RunResult run_command(Verb verb, const RunConfig& config, const std::string& target) {
    config.validate();
    switch (verb) {
        case Verb::Gains: return run_gains(config);
        case Verb::Fit: return run_fit(config);
        case Verb::Coverage: return run_coverage(config);
        case Verb::Simulate: return run_simulate(config);
        case Verb::Compare: return run_compare(config);
        case Verb::Reproduce: return run_reproduce(config, target);
    }
    throw validation_error("unknown verb", "verb");
}

} // namespace mmsir
