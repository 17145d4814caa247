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

#include <memory>

#include <Eigen/Dense>

#include "momenta/exact_lattice.hpp"
#include "momenta/momentum.hpp"

namespace momenta {

/// The cylinder C = g* / Hbar with Hbar = V + Z-span(Lambda).
///
/// Points are handled in the basis B = [V | Lambda | W], where W is an
/// orthonormal complement of span(V, Lambda). Canonical coordinates have the
/// V part zeroed and the Lambda part reduced into [0, 1).
class CylinderGeometry {
 public:
  explicit CylinderGeometry(const ClosedSubgroupDecomp& closure);
  /// Hbar = {0}.
  static std::shared_ptr<const CylinderGeometry> trivial(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(basis_.rows()); }
  std::size_t subspace_dim() const { return v_; }
  std::size_t lattice_rank() const { return l_; }
  const Eigen::MatrixXd& basis() const { return basis_; }

  /// Coordinates in B, canonicalized.
  Eigen::VectorXd canonical_coordinates(const Eigen::VectorXd& mu) const;
  /// Removes the V component of a tangent vector (the derivative of the projection).
  Eigen::VectorXd tangent_projection(const Eigen::VectorXd& v) const;
  /// Shortest representative of a coordinate difference: Lambda entries
  /// wrapped into [-1/2, 1/2), V entries zeroed.
  Eigen::VectorXd wrap_difference(Eigen::VectorXd dc) const;

 private:
  std::size_t v_ = 0;
  std::size_t l_ = 0;
  Eigen::MatrixXd basis_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

/// Element of g*/Hbar, stored through its canonical representative.
class CylinderPoint {
 public:
  CylinderPoint(std::shared_ptr<const CylinderGeometry> geometry, const DualVector& mu);

  const std::shared_ptr<const CylinderGeometry>& geometry() const { return geometry_; }
  const DualVector& representative() const { return representative_; }
  const Eigen::VectorXd& coordinates() const { return coords_; }

  /// Representative addition followed by canonicalization.
  CylinderPoint operator+(const CylinderPoint& other) const;
  /// Euclidean distance of canonical representatives with Lambda coordinates
  /// compared on the circle.
  double distance(const CylinderPoint& other) const;
  /// The wrapped difference this - other as a vector of g*.
  Eigen::VectorXd difference(const CylinderPoint& other) const;
  bool is_zero(double tol = 1e-9) const;

 private:
  std::shared_ptr<const CylinderGeometry> geometry_;
  DualVector representative_;
  Eigen::VectorXd coords_;
};

CylinderPoint cylinder_project(const DualVector& mu, const std::shared_ptr<const CylinderGeometry>& geometry);

/// K(z) = pi_C(J(x)) for a phase path x ending at z.
CylinderPoint cylinder_momentum(const MagneticCotangent& model, const PhasePath& x,
                                const std::shared_ptr<const CylinderGeometry>& geometry);

/// sigma_K(g) = pi_C(sigma_J(lift)).
CylinderPoint sigma_K(const MagneticCotangent& model, const GroupPath& lift,
                      const std::shared_ptr<const CylinderGeometry>& geometry);

/// Phi(g, [mu]) = [Ad*_{g^-1} mu] + sigma_K(g), with g given by a lift.
CylinderPoint affine_cylinder_action(const MagneticCotangent& model, const GroupPath& lift, const CylinderPoint& mu);

}  // namespace momenta
