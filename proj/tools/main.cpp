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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmsir/errors.hpp"
#include "mmsir/runner.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

void print_error(const char* type, const std::string& message) {
    nlohmann::json j{{"error", {{"type", type}, {"message", message}}}};
    std::cout << j.dump() << "\n";
}

int dispatch(const std::string& verb_name, const std::string& config_path,
             std::optional<std::uint64_t> seed, std::optional<std::string> out_dir,
             std::optional<int> threads, const std::string& target) {
    std::string config_text = "{}";
    if (!config_path.empty()) {
        std::ifstream is(config_path);
        if (!is) {
            print_error("io", "cannot open config file " + config_path);
            return kExitIo;
        }
        std::stringstream buf;
        buf << is.rdbuf();
        config_text = buf.str();
    }
    mmsir::RunConfig config = mmsir::parse_config_with_env(config_text);
    if (seed) config.system.rng_seed = *seed;
    if (out_dir) config.output_dir = *out_dir;
    if (threads) config.n_threads = *threads;
    config.validate();

    const auto result =
        mmsir::run_command(mmsir::verb_from_string(verb_name), config, target);
    for (const auto& file : result.files) std::cout << file.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Measurement-based mmWave channel gains and SIR coverage analysis"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<int> threads;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--seed", seed, "Override system.rng_seed");
    app.add_option("--out", out_dir, "Override output_dir");
    app.add_option("--threads", threads, "Worker threads (0 = hardware)");

    std::string reproduce_target;
    app.add_subcommand("gains", "Sample aligned or misaligned beamforming gains to CSV");
    app.add_subcommand("fit", "Fit gain distributions, write JSON fits and a KS report");
    app.add_subcommand("coverage", "Closed-form SIR coverage curve to CSV");
    app.add_subcommand("simulate", "Monte Carlo SIR coverage curve to CSV");
    app.add_subcommand("compare", "Analytic vs Monte Carlo coverage with per-point deltas");
    auto* reproduce =
        app.add_subcommand("reproduce", "Run a bundled end-to-end reproduction recipe");
    reproduce->add_option("target", reproduce_target, "fig2 | fig3 | fig5 | fig6")->required();

    CLI11_PARSE(app, argc, argv);
    const std::string verb = app.get_subcommands().front()->get_name();

    try {
        return dispatch(verb, config_path, seed, out_dir, threads, reproduce_target);
    } catch (const mmsir::convergence_error& e) {
        print_error("convergence", e.what());
        return kExitConvergence;
    } catch (const mmsir::io_error& e) {
        print_error("io", e.what());
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        print_error("io", e.what());
        return kExitIo;
    } catch (const std::invalid_argument& e) { // includes validation_error
        print_error("validation", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 1;
    }
}
