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

#include "mmsir/config.hpp"

#include <cstdlib>

#include <json.hpp>

#include "mmsir/errors.hpp"
#include "mmsir/io.hpp"
#include "mmsir/table_data.hpp"

namespace mmsir {

namespace {

using nlohmann::json;

const char* to_string(GxSource s) {
    switch (s) {
        case GxSource::Bundled: return "bundled";
        case GxSource::FitFromSamples: return "fit";
        case GxSource::Explicit: return "explicit";
    }
    return "?";
}

GxSource gx_source_from_string(const std::string& s) {
    if (s == "bundled") return GxSource::Bundled;
    if (s == "fit") return GxSource::FitFromSamples;
    if (s == "explicit") return GxSource::Explicit;
    throw validation_error("unknown gx_source '" + s + "'", "coverage.gx_source");
}

const char* to_string(SimGainMode m) {
    return m == SimGainMode::Fitted ? "fitted" : "full_channel";
}

SimGainMode sim_gain_mode_from_string(const std::string& s) {
    if (s == "fitted") return SimGainMode::Fitted;
    if (s == "full_channel") return SimGainMode::FullChannel;
    throw validation_error("unknown gain_mode '" + s + "'", "simulation.gain_mode");
}

template <class T>
void read_if(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

json merged_defaults(const json& user) {
    json base = json::object();
    if (!user.is_object()) throw validation_error("config root must be a JSON object", "config");
    base.merge_patch(user);
    return base;
}

// Keys eligible for MMSIR_* environment overrides, as (env suffix, pointer).
struct EnvKey {
    const char* env;
    const char* pointer;
};
constexpr EnvKey kEnvKeys[] = {
    {"MMSIR_SYSTEM_CARRIER_FREQ_HZ", "/system/carrier_freq_hz"},
    {"MMSIR_SYSTEM_BS_DENSITY", "/system/bs_density"},
    {"MMSIR_SYSTEM_LOS_DECAY", "/system/los_decay"},
    {"MMSIR_SYSTEM_ALPHA_LOS", "/system/alpha_los"},
    {"MMSIR_SYSTEM_ALPHA_NLOS", "/system/alpha_nlos"},
    {"MMSIR_SYSTEM_BETA_LOS", "/system/beta_los"},
    {"MMSIR_SYSTEM_BETA_NLOS", "/system/beta_nlos"},
    {"MMSIR_SYSTEM_N_TX", "/system/n_tx"},
    {"MMSIR_SYSTEM_N_RX", "/system/n_rx"},
    {"MMSIR_SYSTEM_RNG_SEED", "/system/rng_seed"},
    {"MMSIR_SAMPLING_KIND", "/sampling/kind"},
    {"MMSIR_SAMPLING_N_SAMPLES", "/sampling/n_samples"},
    {"MMSIR_FITTING_FAMILIES", "/fitting/families"},
    {"MMSIR_FITTING_INPUT_CSV", "/fitting/input_csv"},
    {"MMSIR_COVERAGE_T_GRID_DB", "/coverage/t_grid_db"},
    {"MMSIR_COVERAGE_GX_SOURCE", "/coverage/gx_source"},
    {"MMSIR_COVERAGE_GX_FAMILY", "/coverage/gx_family"},
    {"MMSIR_COVERAGE_MU_O", "/coverage/mu_o"},
    {"MMSIR_SIMULATION_N_DROPS", "/simulation/n_drops"},
    {"MMSIR_SIMULATION_REGION_RADIUS", "/simulation/region_radius"},
    {"MMSIR_SIMULATION_GAIN_MODE", "/simulation/gain_mode"},
    {"MMSIR_OUTPUT_DIR", "/output_dir"},
    {"MMSIR_N_THREADS", "/n_threads"},
};

RunConfig from_json(const json& doc) {
    RunConfig cfg;
    if (doc.contains("system")) {
        const auto& s = doc.at("system");
        read_if(s, "carrier_freq_hz", cfg.system.carrier_freq_hz);
        read_if(s, "bs_density", cfg.system.bs_density);
        read_if(s, "los_decay", cfg.system.los_decay);
        read_if(s, "alpha_los", cfg.system.alpha_los);
        read_if(s, "alpha_nlos", cfg.system.alpha_nlos);
        read_if(s, "beta_los", cfg.system.beta_los);
        read_if(s, "beta_nlos", cfg.system.beta_nlos);
        read_if(s, "n_tx", cfg.system.n_tx);
        read_if(s, "n_rx", cfg.system.n_rx);
        read_if(s, "rng_seed", cfg.system.rng_seed);
    }
    if (doc.contains("sampling")) {
        const auto& s = doc.at("sampling");
        if (s.contains("kind")) cfg.sampling.kind = gain_kind_from_string(s.at("kind"));
        read_if(s, "n_samples", cfg.sampling.n_samples);
    }
    if (doc.contains("fitting")) {
        const auto& s = doc.at("fitting");
        if (s.contains("families")) {
            cfg.fitting.families.clear();
            for (const auto& f : s.at("families"))
                cfg.fitting.families.push_back(dist_family_from_string(f.get<std::string>()));
        }
        read_if(s, "input_csv", cfg.fitting.input_csv);
    }
    if (doc.contains("coverage")) {
        const auto& s = doc.at("coverage");
        if (s.contains("t_grid_db"))
            cfg.coverage.t_grid_db = s.at("t_grid_db").get<std::vector<double>>();
        if (s.contains("gx_source"))
            cfg.coverage.gx_source = gx_source_from_string(s.at("gx_source"));
        if (s.contains("gx_family"))
            cfg.coverage.gx_family = dist_family_from_string(s.at("gx_family"));
        if (s.contains("gx") && !s.at("gx").is_null())
            cfg.coverage.gx_explicit = fitted_dist_from_json(s.at("gx").dump());
        if (s.contains("mu_o") && !s.at("mu_o").is_null())
            cfg.coverage.mu_o = s.at("mu_o").get<double>();
    }
    if (doc.contains("simulation")) {
        const auto& s = doc.at("simulation");
        read_if(s, "n_drops", cfg.simulation.n_drops);
        read_if(s, "region_radius", cfg.simulation.region_radius);
        if (s.contains("gain_mode"))
            cfg.simulation.gain_mode = sim_gain_mode_from_string(s.at("gain_mode"));
    }
    read_if(doc, "output_dir", cfg.output_dir);
    read_if(doc, "n_threads", cfg.n_threads);
    cfg.validate();
    return cfg;
}

} // namespace

void RunConfig::validate() const {
    system.validate();
    if (sampling.n_samples < 1) throw validation_error("must be >= 1", "sampling.n_samples");
    if (fitting.families.empty()) throw validation_error("must be nonempty", "fitting.families");
    if (coverage.t_grid_db.empty())
        throw validation_error("must be nonempty", "coverage.t_grid_db");
    for (std::size_t k = 1; k < coverage.t_grid_db.size(); ++k)
        if (!(coverage.t_grid_db[k] > coverage.t_grid_db[k - 1]))
            throw validation_error("must be strictly increasing", "coverage.t_grid_db");
    if (coverage.gx_source == GxSource::Explicit) {
        if (!coverage.gx_explicit)
            throw validation_error("explicit gx_source needs a 'gx' object", "coverage.gx");
        coverage.gx_explicit->validate();
    }
    if (coverage.gx_source == GxSource::Bundled) {
        bool found = false;
        for (const auto& entry : bundled_loglogistic_table())
            if (entry.n_tx == system.n_tx && entry.n_rx == system.n_rx) found = true;
        if (coverage.gx_family != DistFamily::LogLogistic) {
            if (!(system.n_tx == 256 && system.n_rx == 64))
                throw validation_error("bundled non-log-logistic parameters exist only for 256x64",
                                       "coverage.gx_family");
            found = true;
        }
        if (!found)
            throw validation_error("no bundled parameters for this antenna configuration",
                                   "coverage.gx_source");
    }
    if (coverage.mu_o && !(*coverage.mu_o > 0.0))
        throw validation_error("must be positive", "coverage.mu_o");
    if (simulation.n_drops < 1) throw validation_error("must be >= 1", "simulation.n_drops");
    if (!(simulation.region_radius > 0.0))
        throw validation_error("must be positive", "simulation.region_radius");
    if (output_dir.empty()) throw validation_error("must be nonempty", "output_dir");
    if (n_threads < 0) throw validation_error("must be >= 0", "n_threads");
}

RunConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw io_error(std::string("config parse error: ") + e.what());
    }
    return from_json(merged_defaults(doc));
}

RunConfig parse_config_with_env(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw io_error(std::string("config parse error: ") + e.what());
    }
    doc = merged_defaults(doc);
    for (const auto& key : kEnvKeys) {
        const char* value = std::getenv(key.env);
        if (!value) continue;
        json parsed;
        try {
            parsed = json::parse(value);
        } catch (const json::parse_error&) {
            parsed = std::string(value); // plain strings need no quoting
        }
        doc[json::json_pointer(key.pointer)] = parsed;
    }
    return from_json(doc);
}

std::string serialize_config(const RunConfig& cfg) {
    json families = json::array();
    for (auto f : cfg.fitting.families) families.push_back(to_string(f));
    json doc{
        {"system",
         {{"carrier_freq_hz", cfg.system.carrier_freq_hz},
          {"bs_density", cfg.system.bs_density},
          {"los_decay", cfg.system.los_decay},
          {"alpha_los", cfg.system.alpha_los},
          {"alpha_nlos", cfg.system.alpha_nlos},
          {"beta_los", cfg.system.beta_los},
          {"beta_nlos", cfg.system.beta_nlos},
          {"n_tx", cfg.system.n_tx},
          {"n_rx", cfg.system.n_rx},
          {"rng_seed", cfg.system.rng_seed}}},
        {"sampling",
         {{"kind", to_string(cfg.sampling.kind)}, {"n_samples", cfg.sampling.n_samples}}},
        {"fitting", {{"families", families}, {"input_csv", cfg.fitting.input_csv}}},
        {"coverage",
         {{"t_grid_db", cfg.coverage.t_grid_db},
          {"gx_source", to_string(cfg.coverage.gx_source)},
          {"gx_family", to_string(cfg.coverage.gx_family)}}},
        {"simulation",
         {{"n_drops", cfg.simulation.n_drops},
          {"region_radius", cfg.simulation.region_radius},
          {"gain_mode", to_string(cfg.simulation.gain_mode)}}},
        {"output_dir", cfg.output_dir},
        {"n_threads", cfg.n_threads},
    };
    if (cfg.coverage.gx_explicit)
        doc["coverage"]["gx"] = json::parse(fitted_dist_to_json(*cfg.coverage.gx_explicit));
    if (cfg.coverage.mu_o) doc["coverage"]["mu_o"] = *cfg.coverage.mu_o;
    return doc.dump(2);
}

bool operator==(const RunConfig& a, const RunConfig& b) {
    return serialize_config(a) == serialize_config(b);
}

} // namespace mmsir
