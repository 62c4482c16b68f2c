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

#include <span>

#include "mmsir/dist_fit.hpp"

namespace mmsir {

/// Published log-logistic misaligned-gain parameters for one antenna
/// configuration; the dist carries truncation_cap = n_tx * n_rx.
struct BundledGxEntry {
    int n_tx = 0;
    int n_rx = 0;
    FittedDist dist;
};

/// The full published 4x4 grid over antenna counts {4, 16, 64, 256}.
std::span<const BundledGxEntry> bundled_loglogistic_table();

/// Grid lookup; throws validation_error when the configuration is absent.
const FittedDist& bundled_loglogistic(int n_tx, int n_rx);

/// Published bound/comparison fits at the 256x64 configuration:
/// LogLogistic, Burr, LogNormal and Nakagami. Caps set to 16384.
FittedDist bundled_gx_256x64(DistFamily family);

/// Published aligned-rate power-law surface.
SurfaceFit bundled_mu_surface();

/// The bundled data serialized as the canonical JSON document (the same
/// content as data/gx_fit_params.json in the source tree).
std::string bundled_gx_json();

} // namespace mmsir
