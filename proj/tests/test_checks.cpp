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

#include <algorithm>

#include <gtest/gtest.h>

#include "momenta/checks.hpp"
#include "test_util.hpp"

namespace momenta {
namespace {

using testing::config_path;

class AllChecks : public ::testing::TestWithParam<std::string> {};

TEST_P(AllChecks, PassOnShippedScenario) {
  const auto reports = verify(load_config(config_path(GetParam())));
  ASSERT_FALSE(reports.empty());
  for (const CheckReport& r : reports) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.max_error << " > " << r.tolerance << " " << r.notes;
    EXPECT_EQ(r.passed, r.max_error <= r.tolerance);
  }
}

TEST_P(AllChecks, ScheduleDoesNotChangeResults) {
  ScenarioConfig c = load_config(config_path(GetParam()));
  c.verify.sample_count = 10;
  VerifyOptions serial;
  serial.parallel = false;
  EXPECT_EQ(verify(c, serial), verify(c));
}

INSTANTIATE_TEST_SUITE_P(Scenarios, AllChecks,
                         ::testing::Values("torus_invertible.json", "torus_zero.json", "torus_partial_kernel.json",
                                           "torus_dense.json", "heisenberg.json", "central_extension_zero.json"),
                         [](const auto& info) { return info.param.substr(0, info.param.find('.')); });

bool has_check(const Scenario& s, const std::string& name) {
  const auto entries = applicable_checks(s);
  return std::any_of(entries.begin(), entries.end(), [&](const CheckEntry& c) { return c.name == name; });
}

TEST(Checks, ApplicabilityFollowsScenario) {
  const Scenario zero = testing::load_scenario("torus_zero.json");
  const Scenario dense = testing::load_scenario("torus_dense.json");
  const Scenario heis = testing::load_scenario("heisenberg.json");
  EXPECT_TRUE(has_check(zero, "sigma_zero_isotropic"));
  EXPECT_FALSE(has_check(heis, "sigma_zero_isotropic"));
  EXPECT_FALSE(has_check(dense, "deck_group_trivial"));
  EXPECT_TRUE(has_check(heis, "casimir_invariance"));
  EXPECT_TRUE(has_check(heis, "casimir_sign_convention"));
  EXPECT_FALSE(has_check(zero, "casimir_invariance"));
  EXPECT_THROW(run_check(zero, "casimir_invariance", {}), std::invalid_argument);
}

TEST(Checks, SignFlipBreaksMomentumCondition) {
  for (const char* name : {"torus_zero.json", "torus_invertible.json", "heisenberg.json"}) {
    const Scenario s = testing::load_scenario(name, -1.0);
    const CheckReport r = run_check(s, "momentum_condition", {});
    EXPECT_FALSE(r.passed) << name;
  }
}

TEST(Checks, SeedOverrideChangesSamplesNotVerdicts) {
  ScenarioConfig c = load_config(config_path("heisenberg.json"));
  c.verify.sample_count = 10;
  VerifyOptions a, b;
  a.seed = 1;
  b.seed = 2;
  const auto ra = verify(c, a), rb = verify(c, b);
  EXPECT_TRUE(all_passed(ra));
  EXPECT_TRUE(all_passed(rb));
  EXPECT_NE(ra, rb);
}

}  // namespace
}  // namespace momenta
