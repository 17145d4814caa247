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

#include <gtest/gtest.h>

#include "momenta/report.hpp"
#include "test_util.hpp"

namespace momenta {
namespace {

using testing::config_path;

AnalysisReport analyze_file(const std::string& name, bool with_checks = false) {
  AnalyzeOptions o;
  o.run_checks = with_checks;
  return analyze(load_config(config_path(name)), o);
}

TEST(Report, InvertibleTorusFacts) {
  const AnalysisReport r = analyze_file("torus_invertible.json");
  EXPECT_TRUE(r.gamma0.empty());
  EXPECT_TRUE(r.holonomy_closed);
  EXPECT_EQ(r.holonomy_generators, (StringMatrix{{"0", "-1"}, {"1", "0"}}));
  EXPECT_EQ(r.cover_simplified, "ℝ^2");
  EXPECT_TRUE(r.flags.empty());
  ASSERT_EQ(r.reduction.size(), 2u);
  for (const auto& m : r.reduction) {
    ASSERT_EQ(m.deck_groups.size(), 2u);
    for (const auto& d : m.deck_groups) EXPECT_TRUE(d.symplectomorphism);
  }
}

TEST(Report, PartialKernelTorusIsCylinder) {
  const AnalysisReport r = analyze_file("torus_partial_kernel.json");
  EXPECT_EQ(r.gamma0, (StringMatrix{{"1", "2", "3"}}));
  EXPECT_EQ(r.cover, "T^1 × ℝ^2");
  EXPECT_TRUE(r.hamiltonian_cover);
  ASSERT_EQ(r.reduction[0].deck_groups.size(), 3u);
  EXPECT_EQ(r.reduction[0].deck_groups[2].gamma_n, "configured");
}

TEST(Report, HeisenbergHolonomyIsClosedLine) {
  const AnalysisReport r = analyze_file("heisenberg.json");
  EXPECT_TRUE(r.holonomy_closed);
  EXPECT_EQ(r.holonomy_generators, (StringMatrix{{"0", "-1", "0"}}));
  EXPECT_TRUE(r.gamma0.empty());
  for (const auto& m : r.reduction)
    for (const auto& d : m.deck_groups) EXPECT_EQ(d.invariants, "trivial");
  for (const auto& o : r.orbits) EXPECT_EQ(o.kind, "casimirLevelSet");
}

TEST(Report, DenseHolonomyIsFlaggedAndReductionSuppressed) {
  const AnalysisReport r = analyze_file("torus_dense.json");
  EXPECT_FALSE(r.holonomy_closed);
  EXPECT_EQ(r.rational_rank, 3u);
  EXPECT_EQ(r.real_rank, 2u);
  EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), "non-closed holonomy"), r.flags.end());
  EXPECT_TRUE(r.reduction_suppressed);
  EXPECT_TRUE(r.reduction.empty());
  EXPECT_NE(serialize_report(r).find("\"suppressed\": true"), std::string::npos);
}

TEST(Report, NonHamiltonianGammaNIsNoted) {
  const AnalysisReport r = analyze_file("torus_zero.json");
  EXPECT_TRUE(r.hamiltonian_cover);
  const AnalysisReport inv = analyze(parse_config(R"({"group": "torus", "dim": 2, "theta": [["0", "1"], ["-1", "0"]],
                                                      "gammaN": [[1, 0]]})"),
                                     AnalyzeOptions{std::nullopt, false, false, 1.0});
  EXPECT_FALSE(inv.hamiltonian_cover);
  EXPECT_FALSE(inv.reduction[0].notes.empty());
}

TEST(Report, RoundTripIsLossless) {
  for (const char* name : {"torus_invertible.json", "torus_dense.json", "heisenberg.json"}) {
    const AnalysisReport r = analyze_file(name, true);
    const std::string text = serialize_report(r);
    const AnalysisReport back = parse_report(text);
    EXPECT_EQ(back, r) << name;
    EXPECT_EQ(serialize_report(back), text) << name;
  }
}

TEST(Report, NonFiniteErrorsSurviveRoundTrip) {
  AnalysisReport r = analyze_file("torus_zero.json");
  r.checks.push_back({"broken", std::numeric_limits<double>::infinity(), 1e-8, false, 0, "error: diverged"});
  EXPECT_EQ(parse_report(serialize_report(r)), r);
}

TEST(Report, IdenticalRunsDifferOnlyInHeader) {
  AnalysisReport a = analyze_file("heisenberg.json", true), b = analyze_file("heisenberg.json", true);
  a.generated_at = b.generated_at = "";
  EXPECT_EQ(serialize_report(a), serialize_report(b));
}

TEST(Report, MalformedReportThrows) {
  EXPECT_THROW(parse_report("{}"), std::invalid_argument);
  EXPECT_THROW(parse_report("not json"), std::invalid_argument);
}

}  // namespace
}  // namespace momenta
