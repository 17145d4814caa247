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

#include "momenta/scenario.hpp"

namespace momenta {
namespace {

ConfigError rejection(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return ConfigError("", 0, "");
}

TEST(Config, ParsesTorus) {
  const ScenarioConfig c = parse_config(R"({"group": "torus", "dim": 2, "theta": [["0", "1"], ["-1", "0"]]})");
  EXPECT_EQ(c.group, ScenarioGroup::Torus);
  EXPECT_EQ(c.dim, 2u);
  EXPECT_EQ(c.theta[0][1], "1");
  ASSERT_EQ(c.mu_list.size(), 1u);
  EXPECT_EQ(c.mu_list[0], (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(c.verify.tolerance, 1e-8);
  EXPECT_EQ(c.verify.sample_count, 100u);
  EXPECT_EQ(c.verify.seed, 42u);
}

TEST(Config, AcceptsIntegersAndIrrationalEntries) {
  const ScenarioConfig c = parse_config(
      R"({"group": "torus", "dim": 2, "radicand": "3", "theta": [[0, "1/2+1/3*al"], ["-1/2-1/3*al", 0]],
          "verify": {"tolerance": 1e-6, "sampleCount": 10, "seed": 7}})");
  EXPECT_EQ(c.radicand, "3");
  EXPECT_EQ(c.theta[0][0], "0");
  EXPECT_EQ(c.verify.sample_count, 10u);
  EXPECT_EQ(c.verify.seed, 7u);
}

TEST(Config, ParsesHeisenbergFamily) {
  const ScenarioConfig c = parse_config(R"({"group": "heisenberg", "sigma": ["1", "0"], "mu": [[0, 1, 2]], "gammaN": [[2]]})");
  EXPECT_EQ(c.group, ScenarioGroup::Heisenberg);
  EXPECT_EQ(c.dim, 3u);
  EXPECT_EQ(c.gamma_n, (std::vector<std::vector<long>>{{2}}));
  EXPECT_EQ(parse_config(R"({"group": "centralExtension", "sigma": [0, 0]})").group, ScenarioGroup::CentralExtension);
}

TEST(Config, RejectsNonSkewTheta) {
  const ConfigError e = rejection(R"({"group": "torus", "dim": 2, "theta": [["0", "1"], ["1", "0"]]})");
  EXPECT_NE(std::string(e.what()).find("theta not antisymmetric"), std::string::npos);
  EXPECT_EQ(e.field(), "theta[0][1]");
  const ConfigError diag = rejection(R"({"group": "torus", "dim": 1, "theta": [["1"]]})");
  EXPECT_EQ(diag.field(), "theta[0][0]");
}

TEST(Config, RejectsMalformedScalarWithLine) {
  const ConfigError e = rejection("{\n  \"group\": \"torus\",\n  \"dim\": 2,\n  \"theta\": [[\"0\", \"1/\"], [\"0\", \"0\"]]\n}");
  EXPECT_EQ(e.field(), "theta[0][1]");
  EXPECT_EQ(e.line(), 4u);
}

TEST(Config, RejectsSquareRadicand) {
  EXPECT_EQ(rejection(R"({"group": "torus", "dim": 1, "radicand": "4", "theta": [["0"]]})").field(), "radicand");
  EXPECT_EQ(rejection(R"({"group": "torus", "dim": 1, "radicand": "-3", "theta": [["0"]]})").field(), "radicand");
}

TEST(Config, RejectsStructuralErrors) {
  EXPECT_EQ(rejection(R"({"group": "torus", "dim": 2, "theta": [["0", "1"]]})").field(), "theta");
  EXPECT_EQ(rejection(R"({"group": "torus", "theta": [["0"]]})").field(), "dim");
  EXPECT_EQ(rejection(R"({"group": "sphere"})").field(), "group");
  EXPECT_EQ(rejection(R"({"group": "torus", "dim": 1, "theta": [["0"]], "extra": 1})").field(), "extra");
  EXPECT_EQ(rejection(R"({"group": "heisenberg", "sigma": ["1", "0"], "theta": []})").field(), "theta");
  EXPECT_EQ(rejection(R"({"group": "heisenberg", "sigma": ["1"]})").field(), "sigma");
  EXPECT_EQ(rejection(R"({"group": "heisenberg", "sigma": ["1", "0"], "mu": [[1, 2]]})").field(), "mu[0]");
  EXPECT_EQ(rejection(R"({"group": "heisenberg", "sigma": ["1", "0"], "gammaN": [[1, 2]]})").field(), "gammaN[0]");
  EXPECT_EQ(rejection(R"({"group": "torus", "dim": 1, "theta": [["0"]], "verify": {"seeds": 1}})").field(),
            "verify.seeds");
  EXPECT_EQ(rejection(R"({"group": "torus", "dim": 1, "theta": [["0"]], "verify": {"tolerance": 0}})").field(),
            "verify.tolerance");
}

TEST(Config, ReportsJsonSyntaxLine) {
  const ConfigError e = rejection("{\n  \"group\": \"torus\",\n  \"dim\": 2,,\n}");
  EXPECT_EQ(e.line(), 3u);
}

TEST(Config, MissingFileIsConfigError) {
  EXPECT_THROW(load_config("/nonexistent/momenta.json"), ConfigError);
}

}  // namespace
}  // namespace momenta
