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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "momenta/cylinder.hpp"
#include "momenta/exact_lattice.hpp"
#include "momenta/symplectic_model.hpp"

namespace momenta {

/// Invalid configuration. `field` is a JSON path like "theta[1][0]";
/// `line` is 1-based, or 0 when unknown.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, std::size_t line, const std::string& message);
  const std::string& field() const { return field_; }
  std::size_t line() const { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

enum class ScenarioGroup { Torus, Heisenberg, CentralExtension };

std::string to_string(ScenarioGroup g);

struct VerifySettings {
  double tolerance = 1e-8;
  std::size_t sample_count = 100;
  std::uint64_t seed = 42;
};

/// Parsed, validated scenario description (see docs/config.md).
struct ScenarioConfig {
  std::string name;
  ScenarioGroup group = ScenarioGroup::Torus;
  std::size_t dim = 0;
  std::string radicand = "2";
  /// Torus: d x d exact-scalar strings.
  std::vector<std::vector<std::string>> theta;
  /// Heisenberg family: the covector sigma on R^2.
  std::array<std::string, 2> sigma{"0", "0"};
  std::vector<std::vector<double>> mu_list;
  /// Generators of Gamma_N in loop coordinates (Z^d for tori, Z for the Heisenberg family).
  std::vector<std::vector<long>> gamma_n;
  VerifySettings verify;
};

ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::string& path);

/// Everything derived from a config: the phase space, the loops generating
/// Gamma = pi_1(G), the holonomy group H = J(Gamma) and its closure, the
/// kernel lattice Gamma_0 and the cylinder g*/Hbar.
///
/// Both Heisenberg settings use G = S^1 x R^2 (the circle quotient of the
/// Heisenberg group) so that Gamma = Z is generated by the central loop.
struct Scenario {
  ScenarioConfig config;
  QuadraticField field{2};
  std::shared_ptr<const MagneticCotangent> model;
  /// n x r integer matrix whose columns are the loop directions.
  IntMatrix loop_directions;
  /// n x r exact matrix with columns J(loop_k) = theta(loop_k).
  ExactMatrix holonomy;
  ClosedSubgroupDecomp closure;
  LatticeSubgroup gamma0;
  LatticeSubgroup gamma_n;
  std::shared_ptr<const CylinderGeometry> cylinder;

  std::size_t dim() const { return model->dim(); }
  std::size_t loop_rank() const { return loop_directions.cols(); }
  bool is_torus() const { return config.group == ScenarioGroup::Torus; }
  bool holonomy_closed() const { return closure.closed; }

  /// The straight loop in G with lifted endpoint sum_k k_i loop_i.
  GroupPath loop(const std::vector<long>& k) const;
  /// Exact holonomy element H k.
  ExactVector holonomy_of(const std::vector<long>& k) const;
  std::vector<DualVector> mus() const;
};

/// Builds the scenario. `canonical_sign` is forwarded to MagneticCotangent.
Scenario build_scenario(const ScenarioConfig& config, double canonical_sign = 1.0);

}  // namespace momenta
