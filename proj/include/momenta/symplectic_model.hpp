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
#include <cstddef>

#include <Eigen/Dense>

#include "momenta/exact_scalar.hpp"
#include "momenta/lie_model.hpp"

namespace momenta {

/// A point of T*G in left trivialization: base point and body momentum.
struct PhasePoint {
  GroupElement g;
  DualVector mu;
};

/// A tangent vector (xi, nu): left-trivialized base velocity and momentum velocity.
struct PhaseTangent {
  AlgebraVector xi;
  DualVector nu;
};

/// Skew map theta: g -> g*, with exact entries. Sigma(x, y) = <theta x, y>.
class CocycleTheta {
 public:
  /// Throws std::invalid_argument unless m is square and antisymmetric.
  static CocycleTheta from_matrix(const ExactMatrix& m);
  /// [[0, s], [-s^T, 0]] on the Heisenberg algebra (center first).
  static CocycleTheta heisenberg(const ExactScalar& s1, const ExactScalar& s2);
  static CocycleTheta zero(std::size_t n);

  std::size_t dim() const { return exact_.rows(); }
  const ExactMatrix& matrix() const { return exact_; }
  const Eigen::MatrixXd& real() const { return real_; }
  bool is_zero() const;

  /// True when theta has the Heisenberg shape [[0, s], [-s^T, 0]].
  bool has_sigma() const;
  std::array<ExactScalar, 2> sigma() const;
  Eigen::Vector2d sigma_real() const;

  DualVector apply(const AlgebraVector& x) const;
  double sigma_form(const AlgebraVector& x, const AlgebraVector& y) const;
  /// Matrix S with Sigma(x, y) = x^T S y.
  Eigen::MatrixXd sigma_matrix() const { return real_.transpose(); }

 private:
  explicit CocycleTheta(ExactMatrix m);

  ExactMatrix exact_;
  Eigen::MatrixXd real_;
};

/// Exact check of Sigma([x,y],z) + Sigma([y,z],x) + Sigma([z,x],y) = 0 on basis triples.
bool satisfies_cocycle_identity(const GroupModel& group, const CocycleTheta& theta);

/// T*G with the magnetic form Omega_canon - pi^* B_theta, in left trivialization:
///
///   omega((x1,n1),(x2,n2)) = <n2,x1> - <n1,x2> + <mu,[x1,x2]> - Sigma(x1,x2).
///
/// The canonical part can be scaled by -1 through with_canonical_sign, which
/// exists only so the verification suite can be shown to detect the flip.
class MagneticCotangent {
 public:
  /// Throws std::invalid_argument on a dimension mismatch or when theta
  /// violates the cocycle identity.
  MagneticCotangent(GroupModel group, CocycleTheta theta);

  const GroupModel& group() const { return group_; }
  const CocycleTheta& theta() const { return theta_; }
  const Eigen::MatrixXd& sigma_matrix() const { return sigma_; }
  std::size_t dim() const { return group_.dim(); }

  double canonical_sign() const { return sign_; }
  MagneticCotangent with_canonical_sign(double sign) const;

  double omega(const PhasePoint& z, const PhaseTangent& v1, const PhaseTangent& v2) const;
  /// 2n x 2n matrix W(a, b) = omega(z, e_a, e_b) in the basis (e_i, 0), (0, e_i).
  Eigen::MatrixXd omega_matrix(const PhasePoint& z) const;
  /// Infinitesimal generator of the lifted left action: (Ad_{g^-1} xi, 0).
  PhaseTangent generator(const AlgebraVector& xi, const PhasePoint& z) const;
  /// Psi(z)(e_i, e_j) = omega(z)(generator(e_i), generator(e_j)).
  Eigen::MatrixXd chu_map(const PhasePoint& z) const;

  /// Left action of h on T*G: (g, mu) -> (h g, mu).
  PhasePoint act(const GroupElement& h, const PhasePoint& z) const;

  void check(const PhasePoint& z) const;
  void check(const PhaseTangent& v) const;

 private:
  GroupModel group_;
  CocycleTheta theta_;
  Eigen::MatrixXd sigma_;
  double sign_ = 1.0;
};

}  // namespace momenta
