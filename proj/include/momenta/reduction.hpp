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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "momenta/check_report.hpp"
#include "momenta/scenario.hpp"

namespace momenta {

/// The requested computation is not supported for this scenario.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma' = image of the lifted action at z0; all of Gamma for T*G.
LatticeSubgroup gamma_prime(const Scenario& scenario);

/// Gamma_mu = {k in Gamma : J(k) in sigma_mu(G~)}. Tori: {k : theta k in
/// image(theta)}, decided exactly. Heisenberg family: all of Gamma.
LatticeSubgroup gamma_mu(const Scenario& scenario, const DualVector& mu);

struct DeckGroup {
  AbelianInvariants invariants;
  bool symplectomorphism() const { return invariants.is_trivial(); }
  /// "symplectomorphism" when trivial, otherwise the invariants.
  std::string to_string() const;
};

/// gamma_mu / (gamma_n + gamma_prime). Throws std::invalid_argument unless
/// gamma_n + gamma_prime <= gamma_mu.
DeckGroup deck_group(const LatticeSubgroup& gamma_mu, const LatticeSubgroup& gamma_prime,
                     const LatticeSubgroup& gamma_n);

/// Deck group of the reduced-space cover. Throws std::invalid_argument
/// ("not a Hamiltonian cover") unless gamma_n <= Gamma_0, and
/// CapabilityError when the holonomy is not closed.
DeckGroup deck_group_of_reduced_cover(const Scenario& scenario, const DualVector& mu, const LatticeSubgroup& gamma_n);

/// f(psi, nu) = psi^2 / 2 - <w^-1 s, nu>, where w^-1 s = (s2, -s1) solves i_v w = s.
double heisenberg_casimir(const Eigen::Vector2d& sigma, double psi, const Eigen::Vector2d& nu);

enum class OrbitKind { AffineSubspace, CasimirLevelSet, SampledCloud };
std::string to_string(OrbitKind k);

/// Description of the orbit of mu under the affine action.
struct OrbitDescriptor {
  OrbitKind kind = OrbitKind::SampledCloud;
  std::vector<double> basepoint;
  std::vector<std::vector<double>> directions;
  double casimir = 0.0;
  std::vector<std::vector<double>> points;
  /// Largest distance of a sampled image from the analytic set.
  double max_membership_error = 0.0;
  std::size_t samples = 0;

  std::string to_string() const;
};

struct OrbitSample {
  GroupElement lifted;
  DualVector image;
  std::optional<double> casimir;
};

/// Affine-action images of mu under `count` random group elements with
/// lifted chart coordinates uniform in [-2, 2].
std::vector<OrbitSample> sample_orbit(const Scenario& scenario, const DualVector& mu, std::size_t count,
                                      std::uint64_t seed);

/// Distance of p from the set described by d (0 for sampled clouds).
double orbit_membership_error(const Scenario& scenario, const OrbitDescriptor& d, const DualVector& p);

/// Analytic orbit description, validated against `samples` sampled images.
OrbitDescriptor orbit_descriptor(const Scenario& scenario, const DualVector& mu, std::uint64_t seed,
                                 std::size_t samples = 200);

/// Samples x~ with J(x~) = mu and checks that deck loops move J inside
/// mu + H, by exactly the holonomy of the loop, without moving the base point.
CheckReport reduction_fiber_check(const Scenario& scenario, const DualVector& mu, std::size_t samples,
                                  std::uint64_t seed, double tolerance);

}  // namespace momenta
