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

#include <cmath>
#include <cstdint>

#include "mmsir/errors.hpp"

namespace mmsir {

/// Scalar system constants: carrier, deployment density, LoS/NLoS path-loss
/// laws and the antenna counts of the BS (TX) and UE (RX) arrays.
struct SystemParams {
    double carrier_freq_hz = 2.8e10; // 28 GHz
    double bs_density = 1.0e-4;      // BS per m^2 (100 BS per km^2)
    double los_decay = 0.0149;       // 1/m, LoS probability exp(-los_decay * r)
    double alpha_los = 2.0;          // path loss exponents
    double alpha_nlos = 2.92;
    double beta_los = 6.309573444801933e-8;  // 10^-7.2, unit-distance gain
    double beta_nlos = 7.244359600749901e-7; // 10^-6.14
    int n_tx = 256;
    int n_rx = 64;
    std::uint64_t rng_seed = 0;

    /// Throws validation_error naming the first offending field.
    void validate() const {
        if (!(carrier_freq_hz > 0.0)) throw validation_error("must be > 0", "carrier_freq_hz");
        if (!(bs_density > 0.0)) throw validation_error("must be > 0", "bs_density");
        if (!(los_decay > 0.0)) throw validation_error("must be > 0", "los_decay");
        if (!(alpha_los > 0.0)) throw validation_error("must be > 0", "alpha_los");
        if (!(alpha_nlos > 0.0)) throw validation_error("must be > 0", "alpha_nlos");
        if (!(beta_los > 0.0)) throw validation_error("must be > 0", "beta_los");
        if (!(beta_nlos > 0.0)) throw validation_error("must be > 0", "beta_nlos");
        if (n_tx < 1) throw validation_error("must be >= 1", "n_tx");
        if (n_rx < 1) throw validation_error("must be >= 1", "n_rx");
        for (double v : {carrier_freq_hz, bs_density, los_decay, alpha_los, alpha_nlos,
                         beta_los, beta_nlos})
            if (!std::isfinite(v)) throw validation_error("must be finite", "system");
    }
};

} // namespace mmsir
