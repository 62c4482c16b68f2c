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

#include "mmsir/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mmsir/errors.hpp"

namespace mmsir {

namespace {

std::string format_double(double v, const char* fmt = "%.17g") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

} // namespace

void write_gain_csv(const GainSampleSet& set, std::ostream& os) {
    os << "# kind=" << to_string(set.kind) << ",n_tx=" << set.n_tx << ",n_rx=" << set.n_rx
       << ",seed=" << set.seed << "\n";
    for (double g : set.samples) os << format_double(g) << "\n";
}

GainSampleSet read_gain_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# ", 0) != 0)
        throw io_error("gain csv: missing metadata comment line");
    GainSampleSet set;
    std::stringstream header(line.substr(2));
    std::string field;
    while (std::getline(header, field, ',')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw io_error("gain csv: malformed metadata field");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "kind") set.kind = gain_kind_from_string(value);
        else if (key == "n_tx") set.n_tx = std::stoi(value);
        else if (key == "n_rx") set.n_rx = std::stoi(value);
        else if (key == "seed") set.seed = std::stoull(value);
        else throw io_error("gain csv: unknown metadata key '" + key + "'");
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        set.samples.push_back(std::stod(line));
    }
    return set;
}

void write_curve_csv(const CoverageCurve& curve, std::ostream& os) {
    const bool mc = curve.method == CurveMethod::MonteCarlo;
    os << "T_dB,coverage,method,gx_family" << (mc ? ",stderr" : "") << "\n";
    for (std::size_t k = 0; k < curve.thresholds_db.size(); ++k) {
        os << format_double(curve.thresholds_db[k], "%.10g") << ","
           << format_double(curve.coverages[k], "%.12g") << "," << to_string(curve.method) << ","
           << curve.gx_family;
        if (mc) os << "," << format_double(curve.stderrs[k], "%.12g");
        os << "\n";
    }
}

CoverageCurve read_curve_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw io_error("curve csv: empty stream");
    const bool mc = line.find(",stderr") != std::string::npos;
    if (line.rfind("T_dB,coverage,method,gx_family", 0) != 0)
        throw io_error("curve csv: unexpected header '" + line + "'");
    CoverageCurve curve;
    curve.method = mc ? CurveMethod::MonteCarlo : CurveMethod::Analytic;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        std::getline(row, cell, ',');
        curve.thresholds_db.push_back(std::stod(cell));
        std::getline(row, cell, ',');
        curve.coverages.push_back(std::stod(cell));
        std::getline(row, cell, ','); // method, fixed per file
        std::getline(row, cell, ',');
        curve.gx_family = cell;
        if (mc) {
            std::getline(row, cell, ',');
            curve.stderrs.push_back(std::stod(cell));
        }
    }
    return curve;
}

std::string fitted_dist_to_json(const FittedDist& dist) {
    nlohmann::json params;
    const auto names = dist.param_names();
    params[names[0]] = dist.p[0];
    if (dist.n_params() == 2) params[names[1]] = dist.p[1];
    nlohmann::json j{{"family", to_string(dist.family)}, {"params", params}};
    j["truncation_cap"] =
        dist.truncation_cap ? nlohmann::json(*dist.truncation_cap) : nlohmann::json(nullptr);
    return j.dump();
}

FittedDist fitted_dist_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw io_error(std::string("fitted dist json: ") + e.what());
    }
    FittedDist dist;
    dist.family = dist_family_from_string(j.at("family").get<std::string>());
    const auto names = dist.param_names();
    const auto& params = j.at("params");
    dist.p[0] = params.at(names[0]).get<double>();
    if (dist.n_params() == 2) dist.p[1] = params.at(names[1]).get<double>();
    if (j.contains("truncation_cap") && !j.at("truncation_cap").is_null())
        dist.truncation_cap = j.at("truncation_cap").get<double>();
    dist.validate();
    return dist;
}

std::string surface_fit_to_json(const SurfaceFit& fit) {
    return nlohmann::json{{"coeff", fit.coeff}, {"expo", fit.expo}}.dump();
}

SurfaceFit surface_fit_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw io_error(std::string("surface fit json: ") + e.what());
    }
    return SurfaceFit{j.at("coeff").get<double>(), j.at("expo").get<double>()};
}

} // namespace mmsir
