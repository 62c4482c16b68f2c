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

#include "mmsir/table_data.hpp"

#include <array>
#include <string>

#include "mmsir/errors.hpp"
#include "mmsir/io.hpp"

namespace mmsir {

namespace {

double cap_of(int n_tx, int n_rx) { return static_cast<double>(n_tx) * n_rx; }

const std::array<BundledGxEntry, 16>& table() {
    static const std::array<BundledGxEntry, 16> t = {{
        {4, 4, FittedDist::log_logistic(3.28, 0.877, cap_of(4, 4))},
        {16, 4, FittedDist::log_logistic(2.51, 0.743, cap_of(16, 4))},
        {64, 4, FittedDist::log_logistic(2.11, 0.722, cap_of(64, 4))},
        {256, 4, FittedDist::log_logistic(1.92, 0.709, cap_of(256, 4))},
        {4, 16, FittedDist::log_logistic(2.52, 0.743, cap_of(4, 16))},
        {16, 16, FittedDist::log_logistic(3.49, 0.656, cap_of(16, 16))},
        {64, 16, FittedDist::log_logistic(3.28, 0.612, cap_of(64, 16))},
        {256, 16, FittedDist::log_logistic(2.89, 0.589, cap_of(256, 16))},
        {4, 64, FittedDist::log_logistic(2.11, 0.722, cap_of(4, 64))},
        {16, 64, FittedDist::log_logistic(3.28, 0.612, cap_of(16, 64))},
        {64, 64, FittedDist::log_logistic(2.55, 0.57, cap_of(64, 64))},
        {256, 64, FittedDist::log_logistic(1.98, 0.551, cap_of(256, 64))},
        {4, 256, FittedDist::log_logistic(1.92, 0.709, cap_of(4, 256))},
        {16, 256, FittedDist::log_logistic(2.89, 0.589, cap_of(16, 256))},
        {64, 256, FittedDist::log_logistic(1.98, 0.551, cap_of(64, 256))},
        {256, 256, FittedDist::log_logistic(1.45, 0.547, cap_of(256, 256))},
    }};
    return t;
}

} // namespace

std::span<const BundledGxEntry> bundled_loglogistic_table() { return table(); }

const FittedDist& bundled_loglogistic(int n_tx, int n_rx) {
    for (const auto& entry : table())
        if (entry.n_tx == n_tx && entry.n_rx == n_rx) return entry.dist;
    throw validation_error("no bundled log-logistic parameters for " + std::to_string(n_tx) +
                               "x" + std::to_string(n_rx),
                           "gx_source");
}

FittedDist bundled_gx_256x64(DistFamily family) {
    const double cap = cap_of(256, 64);
    switch (family) {
        case DistFamily::LogLogistic: return bundled_loglogistic(256, 64);
        case DistFamily::Burr: return FittedDist::burr(0.692, 0.518, cap);
        case DistFamily::LogNormal: return FittedDist::log_normal(2.962, 0.908, cap);
        case DistFamily::Nakagami: return FittedDist::nakagami(0.099, 50.53, cap);
        case DistFamily::Exponential: break;
    }
    throw validation_error("no bundled 256x64 parameters for family", "gx_family");
}

SurfaceFit bundled_mu_surface() { return SurfaceFit{0.814, -0.927}; }

std::string bundled_gx_json() {
    std::string out = "{\n  \"log_logistic\": {\n";
    const auto& t = table();
    for (std::size_t i = 0; i < t.size(); ++i) {
        out += "    \"" + std::to_string(t[i].n_tx) + "x" + std::to_string(t[i].n_rx) +
               "\": " + fitted_dist_to_json(t[i].dist);
        out += (i + 1 < t.size()) ? ",\n" : "\n";
    }
    out += "  },\n  \"bounds_256x64\": {\n";
    out += "    \"burr\": " + fitted_dist_to_json(bundled_gx_256x64(DistFamily::Burr)) + ",\n";
    out += "    \"log_normal\": " + fitted_dist_to_json(bundled_gx_256x64(DistFamily::LogNormal)) +
           ",\n";
    out += "    \"nakagami\": " + fitted_dist_to_json(bundled_gx_256x64(DistFamily::Nakagami)) +
           "\n";
    out += "  },\n  \"mu_o_surface\": {\"coeff\": 0.814, \"expo\": -0.927}\n}\n";
    return out;
}

} // namespace mmsir
