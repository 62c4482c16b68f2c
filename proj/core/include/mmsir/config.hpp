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

#include <optional>
#include <string>
#include <vector>

#include "mmsir/dist_fit.hpp"
#include "mmsir/gains.hpp"
#include "mmsir/params.hpp"

namespace mmsir {

enum class GxSource { Bundled, FitFromSamples, Explicit };
enum class SimGainMode { Fitted, FullChannel };

struct SamplingConfig {
    GainKind kind = GainKind::Aligned;
    std::size_t n_samples = 100000;
};

struct FittingConfig {
    std::vector<DistFamily> families = {DistFamily::Exponential, DistFamily::LogLogistic,
                                        DistFamily::Burr, DistFamily::LogNormal,
                                        DistFamily::Nakagami};
    std::string input_csv; // when empty, samples are generated per `sampling`
};

struct CoverageConfig {
    std::vector<double> t_grid_db = {-10, -5, 0, 5, 10, 15, 20, 25, 30};
    GxSource gx_source = GxSource::Bundled;
    DistFamily gx_family = DistFamily::LogLogistic;
    std::optional<FittedDist> gx_explicit;  // required when gx_source == Explicit
    std::optional<double> mu_o;             // default: published power-law surface
};

struct SimulationConfig {
    std::size_t n_drops = 10000;
    double region_radius = 2000.0; // meters
    SimGainMode gain_mode = SimGainMode::Fitted;
};

struct RunConfig {
    SystemParams system;
    SamplingConfig sampling;
    FittingConfig fitting;
    CoverageConfig coverage;
    SimulationConfig simulation;
    std::string output_dir = "out";
    int n_threads = 0;

    void validate() const; // throws validation_error naming the field
};

/// Parses a JSON configuration document; missing keys take the defaults
/// above. Throws io_error on malformed JSON (with position info) and
/// validation_error on invariant violations.
RunConfig parse_config(const std::string& json_text);

/// parse_config plus environment overrides: any scalar key can be overridden
/// by MMSIR_<SECTION>_<KEY> (e.g. MMSIR_SYSTEM_N_TX=64,
/// MMSIR_SIMULATION_N_DROPS=100, MMSIR_COVERAGE_T_GRID_DB="[-10,0,10]").
RunConfig parse_config_with_env(const std::string& json_text);

/// Canonical JSON form; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const RunConfig& config);

bool operator==(const RunConfig& a, const RunConfig& b);

} // namespace mmsir
