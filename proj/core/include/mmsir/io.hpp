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

#include <iosfwd>
#include <string>

#include "mmsir/coverage.hpp"
#include "mmsir/dist_fit.hpp"
#include "mmsir/gains.hpp"

namespace mmsir {

/// Gain CSV format: one `# kind=...,n_tx=...,n_rx=...,seed=...` comment line,
/// then one gain per row with full round-trip precision.
void write_gain_csv(const GainSampleSet& set, std::ostream& os);
GainSampleSet read_gain_csv(std::istream& is);

/// Coverage CSV: header `T_dB,coverage,method,gx_family[,stderr]`, the
/// stderr column present for Monte Carlo curves.
void write_curve_csv(const CoverageCurve& curve, std::ostream& os);
CoverageCurve read_curve_csv(std::istream& is);

std::string fitted_dist_to_json(const FittedDist& dist);
FittedDist fitted_dist_from_json(const std::string& text);

std::string surface_fit_to_json(const SurfaceFit& fit);
SurfaceFit surface_fit_from_json(const std::string& text);

} // namespace mmsir
