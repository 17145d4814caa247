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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "momenta/check_report.hpp"
#include "momenta/scenario.hpp"

namespace momenta {

struct CheckContext {
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  /// Tolerance for comparisons of quadrature-derived cylinder points.
  double tolerance = 1e-8;
};

struct CheckEntry {
  std::string name;
  std::function<CheckReport(const Scenario&, const CheckContext&)> run;
};

/// Every check that applies to the scenario, in a fixed order.
std::vector<CheckEntry> applicable_checks(const Scenario& scenario);

/// Runs one named check. Numerical failures become failed reports.
/// Throws std::invalid_argument for an unknown or inapplicable name.
CheckReport run_check(const Scenario& scenario, const std::string& name, const CheckContext& ctx);

/// Runs all applicable checks, concurrently when `parallel` is set. The
/// result order and values do not depend on scheduling.
std::vector<CheckReport> run_checks(const Scenario& scenario, const CheckContext& ctx, bool parallel = true);

struct VerifyOptions {
  std::optional<std::uint64_t> seed;
  bool parallel = true;
  /// Passed to MagneticCotangent::with_canonical_sign; +1 outside mutation tests.
  double canonical_sign = 1.0;
};

std::vector<CheckReport> verify(const ScenarioConfig& config, const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckReport>& reports);

/// A random piecewise-exponential phase path from z0 with `segments`
/// segments, directions in [-scale, scale]^n and momentum nodes in [-1, 1]^n.
PhasePath random_phase_path(const GroupModel& model, std::mt19937_64& rng, std::size_t segments, double scale = 1.0);

/// A random group path from the identity with `segments` segments.
GroupPath random_group_path(const GroupModel& model, std::mt19937_64& rng, std::size_t segments, double scale = 1.0);

}  // namespace momenta
