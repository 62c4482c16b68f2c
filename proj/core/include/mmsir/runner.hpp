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

#include <filesystem>
#include <string>
#include <vector>

#include "mmsir/config.hpp"

namespace mmsir {

enum class Verb { Gains, Fit, Coverage, Simulate, Compare, Reproduce };

Verb verb_from_string(const std::string& s);

struct RunResult {
    std::vector<std::filesystem::path> files;
};

/// Executes one CLI verb against a validated configuration, writing artifacts
/// under config.output_dir. `target` selects the reproduction recipe
/// (fig2|fig3|fig5|fig6) and is ignored by other verbs. Throws
/// validation_error / convergence_error / io_error on failure.
RunResult run_command(Verb verb, const RunConfig& config, const std::string& target = "");

/// Misaligned-gain law and aligned rate used by coverage/simulate/compare for
/// one configuration (gx_source resolution plus the mu_o default).
struct ResolvedGx {
    FittedDist gx;
    double mu_o = 0.0;
};
ResolvedGx resolve_gx(const RunConfig& config);

} // namespace mmsir
