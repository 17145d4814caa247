// Copyright 2026 The momenta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// momenta: analyze, verify and sample orbits of a scenario config.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "momenta/checks.hpp"
#include "momenta/reduction.hpp"
#include "momenta/report.hpp"

#ifndef MOMENTA_CANONICAL_SIGN
#define MOMENTA_CANONICAL_SIGN 1.0
#endif

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsageError = 2;

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("momenta");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("MOMENTA_LOG");
  const std::string level = env ? env : "off";
  if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else if (level == "info") {
    spdlog::set_level(spdlog::level::info);
  } else {
    if (level != "off") std::cerr << "momenta: unknown MOMENTA_LOG value '" << level << "', logging off\n";
    spdlog::set_level(spdlog::level::off);
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string format_check(const momenta::CheckReport& c) {
  std::ostringstream os;
  os << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << c.name << " max_error=" << std::setprecision(3)
     << std::scientific << c.max_error << " tol=" << c.tolerance << " n=" << c.sample_count;
  if (!c.passed && !c.notes.empty()) os << "  (" << c.notes << ")";
  return os.str();
}

int run_analyze(const std::string& config_path, const std::string& out_path) {
  const auto config = momenta::load_config(config_path);
  momenta::AnalyzeOptions opts;
  opts.canonical_sign = MOMENTA_CANONICAL_SIGN;
  spdlog::info("analyzing scenario '{}'", config.name);
  const auto report = momenta::analyze(config, opts);
  write_output(momenta::serialize_report(report), out_path);
  return momenta::all_checks_passed(report) ? kPass : kCheckFailure;
}

int run_verify(const std::string& config_path, std::optional<std::uint64_t> seed) {
  const auto config = momenta::load_config(config_path);
  momenta::VerifyOptions opts;
  opts.seed = seed;
  opts.canonical_sign = MOMENTA_CANONICAL_SIGN;
  spdlog::info("verifying scenario '{}'", config.name);
  const auto reports = momenta::verify(config, opts);
  std::size_t failed = 0;
  for (const auto& c : reports) {
    std::cout << format_check(c) << "\n";
    if (!c.passed) ++failed;
  }
  std::cout << (reports.size() - failed) << "/" << reports.size() << " checks passed\n";
  return failed == 0 ? kPass : kCheckFailure;
}

int run_orbit(const std::string& config_path, std::size_t mu_index, std::size_t samples, const std::string& out_path) {
  const auto config = momenta::load_config(config_path);
  const auto scenario = momenta::build_scenario(config, MOMENTA_CANONICAL_SIGN);
  const auto mus = scenario.mus();
  if (mu_index >= mus.size()) {
    throw CLI::ValidationError("--mu", "index " + std::to_string(mu_index) + " out of range (" +
                                           std::to_string(mus.size()) + " mu values)");
  }
  const auto& mu = mus[mu_index];
  const std::uint64_t seed = config.verify.seed + mu_index;
  const auto descriptor = momenta::orbit_descriptor(scenario, mu, seed, samples);
  const auto points = momenta::sample_orbit(scenario, mu, samples, seed);
  const bool casimir = !scenario.is_torus();
  const std::size_t n = scenario.dim();

  std::ostringstream os;
  os << std::setprecision(17);
  os << "# orbit descriptor: " << descriptor.to_string() << "\n";
  os << "sample";
  for (std::size_t i = 0; i < n; ++i) os << ",g" << i;
  for (std::size_t i = 0; i < n; ++i) os << ",mu" << i;
  if (casimir) os << ",casimir";
  os << "\n";
  for (std::size_t k = 0; k < points.size(); ++k) {
    os << k;
    for (std::size_t i = 0; i < n; ++i) os << "," << points[k].lifted.coords[static_cast<Eigen::Index>(i)];
    for (std::size_t i = 0; i < n; ++i) os << "," << points[k].image[i];
    if (casimir) os << "," << points[k].casimir.value_or(0.0);
    os << "\n";
  }
  write_output(os.str(), out_path);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"Momentum maps on universal covers: analysis, verification and orbit sampling"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::uint64_t seed = 0;
  std::size_t mu_index = 0, samples = 100;

  auto* analyze = app.add_subcommand("analyze", "Write the JSON analysis report");
  analyze->add_option("--config", config_path, "Scenario config (JSON)")->required();
  analyze->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run every applicable check");
  verify->add_option("--config", config_path, "Scenario config (JSON)")->required();
  auto* seed_opt = verify->add_option("--seed", seed, "Override the config seed");

  auto* orbit = app.add_subcommand("orbit", "Sample the orbit of one mu as CSV");
  orbit->add_option("--config", config_path, "Scenario config (JSON)")->required();
  orbit->add_option("--mu", mu_index, "Index into the mu list")->required();
  orbit->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);
  orbit->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (analyze->parsed()) return run_analyze(config_path, out_path);
    if (verify->parsed()) {
      return run_verify(config_path, *seed_opt ? std::optional<std::uint64_t>(seed) : std::nullopt);
    }
    return run_orbit(config_path, mu_index, samples, out_path);
  } catch (const momenta::ConfigError& e) {
    std::cerr << "config error";
    if (!e.field().empty()) std::cerr << " at " << e.field();
    if (e.line() != 0) std::cerr << " (line " << e.line() << ")";
    std::cerr << ": " << e.what() << "\n";
    return kUsageError;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const momenta::CapabilityError& e) {
    std::cerr << "unsupported scenario: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
