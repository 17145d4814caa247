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

#include <vector>

#include <Eigen/Dense>

#include "momenta/lie_model.hpp"
#include "momenta/symplectic_model.hpp"

namespace momenta {

/// A path in T*G: a group path plus a body-momentum curve that is linear on
/// each segment. momentum_nodes()[k] is the momentum at breakpoint k.
class PhasePath {
 public:
  PhasePath(GroupPath base, std::vector<DualVector> momentum_nodes);

  /// Momentum interpolated linearly from 0 at t = 0 to `mu` at t = 1.
  static PhasePath with_linear_momentum(GroupPath base, const DualVector& mu);
  /// Straight path in the cover chart from the identity to `lifted`, with
  /// momentum rising linearly from 0 to `mu`.
  static PhasePath straight_to(const GroupModel& model, const GroupElement& lifted, const DualVector& mu);
  static PhasePath trivial(const GroupModel& model);

  const GroupPath& base() const { return base_; }
  const std::vector<DualVector>& momentum_nodes() const { return momentum_; }

  DualVector momentum(double t) const;
  /// Point at time t, with the group part in the cover chart.
  PhasePoint evaluate_lifted(double t) const;
  PhaseTangent velocity(double t) const;
  PhasePoint endpoint() const;
  PhasePoint lifted_endpoint() const;

  /// This path at double speed, then one extra segment from the endpoint
  /// moving by exp(direction) while the momentum goes linearly to mu_end.
  PhasePath extended(const AlgebraVector& direction, const DualVector& mu_end) const;

 private:
  GroupPath base_;
  std::vector<DualVector> momentum_;
};

/// x then y (y's group part left-translated to x's endpoint), each at double
/// speed. Throws if x's final momentum differs from y's initial momentum.
PhasePath concatenate(const PhasePath& x, const PhasePath& y);

/// Integral over [0,1] of Ad*_{g(t)^-1} theta(g(t)^-1 g'(t)).
DualVector theta_integral(const GroupModel& model, const CocycleTheta& theta, const GroupPath& p);

/// (s.u, -a s - (s.u/2) i_u w) with i_u w = (-u2, u1), for the lifted endpoint (a, u).
DualVector theta_closed_form_heisenberg(const Eigen::Vector2d& sigma, const GroupElement& lifted_endpoint);

/// Closed form of theta_integral from the lifted endpoint: theta u on tori,
/// the Heisenberg formula on the Heisenberg family. Throws
/// std::invalid_argument when theta is not of Heisenberg shape there.
DualVector theta_closed_form(const GroupModel& model, const CocycleTheta& theta, const GroupElement& lifted_endpoint);

/// Contribution of one segment to the momentum map: integral over [0, duration]
/// of omega(x)(e_i generator, x') along g0 exp(s eta) with momentum linear from mu0 to mu1.
DualVector segment_momentum(const MagneticCotangent& model, const GroupElement& g0, const DualVector& mu0,
                            const AlgebraVector& eta, const DualVector& mu1, double duration);

/// J on the universal cover, by quadrature of omega(generator, velocity).
/// Vanishes on the trivial path.
DualVector momentum_of_path(const MagneticCotangent& model, const PhasePath& x);

/// Ad*_{g^-1} mu + theta_integral(g~), g the endpoint of g~.
DualVector momentum_closed_form(const MagneticCotangent& model, const GroupPath& g, const DualVector& mu);

/// Horizontal lift of x for the flat connection, started at 0: an RK4
/// integration with at most 1/1024 per step, checked against steps of at
/// most 1/2048. Throws NumericalError when the two differ by more than 1e-7.
DualVector horizontal_transport(const MagneticCotangent& model, const PhasePath& x);

/// Non-equivariance cocycle: integral of Psi(z0)(Ad_{g(t)^-1} e_i, g(t)^-1 g'(t)).
DualVector sigma_J(const MagneticCotangent& model, const GroupPath& g);

/// Pointwise left action t -> g(t) x(t), resampled as in path_product.
PhasePath lifted_action_on_path(const GroupPath& g, const PhasePath& x);

/// gamma * x: the loop gamma (at zero momentum) followed by x translated to gamma's endpoint.
PhasePath deck_transform(const GroupPath& gamma, const PhasePath& x);

/// Affine action g~ . mu = Ad*_{g^-1} mu + sigma_J(g~).
DualVector affine_action(const MagneticCotangent& model, const GroupPath& g, const DualVector& mu);

/// Finite-difference test of dJ^xi = omega(xi_M, .) at z, reached by the
/// straight path to z's chart coordinates. Each of the 2n displaced points
/// is reached by the same trunk plus one short segment (step 1e-4, central
/// differences). Both the quadrature J and the closed form J are tested;
/// the larger normwise relative error (denominator clamped at 1e-8) is returned.
double verify_momentum_condition(const MagneticCotangent& model, const PhasePoint& z, const AlgebraVector& xi);

}  // namespace momenta
