// SPDX-License-Identifier: Apache-2.0
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "mmsir/io.hpp"

namespace fs = std::filesystem;

TEST_SUITE_BEGIN("cli");

namespace {

struct CliResult {
    int exit_code = -1;
    std::string stdout_text;
};

CliResult run_cli(const std::string& args, const fs::path& workdir) {
    const fs::path out = workdir / "stdout.txt";
    const std::string cmd = "cd '" + workdir.string() + "' && '" + MMSIR_CLI_PATH + "' " + args +
                            " > '" + out.string() + "' 2>stderr.txt";
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream is(out);
    std::stringstream buf;
    buf << is.rdbuf();
    result.stdout_text = buf.str();
    return result;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("mmsir_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream os(path);
    os << text;
}

std::string slurp(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    std::stringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

const char* kTinyConfig = R"({
  "system": {"n_tx": 16, "n_rx": 4, "rng_seed": 9},
  "sampling": {"kind": "misaligned", "n_samples": 2000},
  "fitting": {"families": ["exponential", "log_logistic"]},
  "coverage": {"t_grid_db": [-5, 0, 5]},
  "simulation": {"n_drops": 300, "region_radius": 900}
})";

} // namespace

TEST_CASE("gains verb writes a parseable sample file") {
    const auto dir = fresh_dir("gains");
    write_file(dir / "config.json", kTinyConfig);
    const auto result = run_cli("--config config.json --out run gains", dir);
    REQUIRE(result.exit_code == 0);
    const fs::path csv = dir / "run" / "gains_misaligned_16x4.csv";
    REQUIRE(fs::exists(csv));
    std::ifstream is(csv);
    const auto set = mmsir::read_gain_csv(is);
    CHECK(set.samples.size() == 2000);
    CHECK(set.n_tx == 16);
    CHECK(set.seed == 9);
}

TEST_CASE("fit verb emits fit JSON files and a KS report") {
    const auto dir = fresh_dir("fit");
    write_file(dir / "config.json", kTinyConfig);
    const auto result = run_cli("--config config.json --out run fit", dir);
    REQUIRE(result.exit_code == 0);
    CHECK(fs::exists(dir / "run" / "fit_exponential.json"));
    const auto fit =
        mmsir::fitted_dist_from_json(slurp(dir / "run" / "fit_log_logistic.json"));
    CHECK(fit.family == mmsir::DistFamily::LogLogistic);
    REQUIRE(fit.truncation_cap.has_value());
    CHECK(*fit.truncation_cap == 64.0);
    const auto report = slurp(dir / "run" / "ks_report.csv");
    CHECK(report.rfind("family,ks", 0) == 0);
    CHECK(report.find("log_logistic,") != std::string::npos);
}

TEST_CASE("fit verb consumes samples from a gain CSV") {
    const auto dir = fresh_dir("fitcsv");
    write_file(dir / "config.json", kTinyConfig);
    REQUIRE(run_cli("--config config.json --out run gains", dir).exit_code == 0);
    write_file(dir / "config2.json", R"({
      "system": {"n_tx": 16, "n_rx": 4},
      "fitting": {"families": ["exponential"],
                  "input_csv": "run/gains_misaligned_16x4.csv"}
    })");
    REQUIRE(run_cli("--config config2.json --out run fit", dir).exit_code == 0);
    const auto fit = mmsir::fitted_dist_from_json(slurp(dir / "run" / "fit_exponential.json"));
    CHECK(fit.p[0] > 0.0);
}

TEST_CASE("compare verb is deterministic byte for byte") {
    const auto dir = fresh_dir("compare");
    write_file(dir / "config.json", kTinyConfig);
    const auto r1 = run_cli("--config config.json --out run1 compare", dir);
    const auto r2 = run_cli("--config config.json --out run2 compare", dir);
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    for (const char* name :
         {"coverage_analytic.csv", "coverage_montecarlo.csv", "compare.csv"}) {
        CHECK(slurp(dir / "run1" / name) == slurp(dir / "run2" / name));
        CHECK_FALSE(slurp(dir / "run1" / name).empty());
    }
    // The joined report parses row by row: T_dB,analytic,empirical,delta,stderr.
    std::stringstream rows(slurp(dir / "run1" / "compare.csv"));
    std::string line;
    std::getline(rows, line);
    CHECK(line == "T_dB,analytic,empirical,delta,stderr");
    int parsed = 0;
    while (std::getline(rows, line)) {
        std::stringstream cells(line);
        std::string cell;
        double analytic = -1.0, empirical = -1.0, delta = 0.0;
        std::getline(cells, cell, ',');
        std::getline(cells, cell, ',');
        analytic = std::stod(cell);
        std::getline(cells, cell, ',');
        empirical = std::stod(cell);
        std::getline(cells, cell, ',');
        delta = std::stod(cell);
        CHECK(delta == doctest::Approx(analytic - empirical).epsilon(1e-9));
        ++parsed;
    }
    CHECK(parsed == 3);
}

TEST_CASE("seed flag changes the sample stream") {
    const auto dir = fresh_dir("seed");
    write_file(dir / "config.json", kTinyConfig);
    REQUIRE(run_cli("--config config.json --out a --seed 1 gains", dir).exit_code == 0);
    REQUIRE(run_cli("--config config.json --out b --seed 2 gains", dir).exit_code == 0);
    CHECK(slurp(dir / "a" / "gains_misaligned_16x4.csv") !=
          slurp(dir / "b" / "gains_misaligned_16x4.csv"));
}

TEST_CASE("validation failures exit 2 with an error JSON") {
    const auto dir = fresh_dir("badcfg");
    write_file(dir / "config.json", R"({"system": {"n_tx": 0}})");
    const auto result = run_cli("--config config.json gains", dir);
    CHECK(result.exit_code == 2);
    const auto j = nlohmann::json::parse(result.stdout_text);
    CHECK(j.at("error").at("type") == "validation");
    CHECK(j.at("error").at("message").get<std::string>().find("n_tx") != std::string::npos);
}

TEST_CASE("missing config file exits 4") {
    const auto dir = fresh_dir("noconfig");
    const auto result = run_cli("--config nope.json gains", dir);
    CHECK(result.exit_code == 4);
    const auto j = nlohmann::json::parse(result.stdout_text);
    CHECK(j.at("error").at("type") == "io");
}

TEST_CASE("unknown reproduce target exits 2") {
    const auto dir = fresh_dir("badtarget");
    const auto result = run_cli("reproduce fig9", dir);
    CHECK(result.exit_code == 2);
}

TEST_CASE("reproduce fig2 smoke run") {
    const auto dir = fresh_dir("fig2");
    write_file(dir / "config.json", R"({"sampling": {"n_samples": 3000}})");
    const auto result = run_cli("--config config.json --out fig2 reproduce fig2", dir);
    REQUIRE(result.exit_code == 0);
    CHECK(fs::exists(dir / "fig2" / "fig2_gains_aligned_256x64.csv"));
    const auto fit = mmsir::fitted_dist_from_json(slurp(dir / "fig2" / "fig2_fit_exponential.json"));
    CHECK(fit.family == mmsir::DistFamily::Exponential);
    CHECK(fit.p[0] > 0.0);
}

TEST_CASE("reproduce fig5 smoke run produces four curves and two joins") {
    const auto dir = fresh_dir("fig5");
    write_file(dir / "config.json",
               R"({"coverage": {"t_grid_db": [-5, 5]}, "simulation": {"n_drops": 200}})");
    const auto result = run_cli("--config config.json --out fig5 reproduce fig5", dir);
    REQUIRE(result.exit_code == 0);
    for (const char* name : {"fig5_analytic_64x16.csv", "fig5_montecarlo_64x16.csv",
                             "fig5_compare_64x16.csv", "fig5_analytic_256x64.csv",
                             "fig5_montecarlo_256x64.csv", "fig5_compare_256x64.csv"}) {
        CHECK(fs::exists(dir / "fig5" / name));
    }
    std::ifstream is(dir / "fig5" / "fig5_analytic_256x64.csv");
    const auto curve = mmsir::read_curve_csv(is);
    REQUIRE(curve.coverages.size() == 2);
    CHECK(curve.coverages[0] >= curve.coverages[1]);
}

TEST_CASE("reproduce fig6 smoke run produces the four family curves") {
    const auto dir = fresh_dir("fig6");
    write_file(dir / "config.json", R"({"coverage": {"t_grid_db": [0]}})");
    const auto result = run_cli("--config config.json --out fig6 reproduce fig6", dir);
    REQUIRE(result.exit_code == 0);
    for (const char* name :
         {"fig6_log_logistic_256x64.csv", "fig6_burr_256x64.csv", "fig6_log_normal_256x64.csv",
          "fig6_nakagami_256x64.csv"}) {
        CHECK(fs::exists(dir / "fig6" / name));
    }
}

TEST_SUITE_END();
