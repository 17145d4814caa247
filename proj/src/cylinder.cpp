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

#include "momenta/cylinder.hpp"

#include <cmath>
#include <stdexcept>

namespace momenta {

namespace {

double wrap_unit(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

}  // namespace

CylinderGeometry::CylinderGeometry(const ClosedSubgroupDecomp& closure) {
  const auto n = static_cast<Eigen::Index>(closure.ambient_dim);
  const auto vs = closure.subspace_basis_real();
  const auto ls = closure.lattice_basis_real();
  v_ = vs.size();
  l_ = ls.size();
  const auto k = static_cast<Eigen::Index>(v_ + l_);
  if (k > n) throw std::invalid_argument("closure decomposition has too many basis vectors");

  basis_.resize(n, n);
  Eigen::Index col = 0;
  for (const auto* group : {&vs, &ls})
    for (const auto& v : *group) {
      for (Eigen::Index i = 0; i < n; ++i) basis_(i, col) = v[static_cast<std::size_t>(i)];
      ++col;
    }
  if (k < n) {
    Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n);
    if (k > 0) {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis_.leftCols(k));
      q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    }
    basis_.rightCols(n - k) = q.rightCols(n - k);
  }
  lu_.compute(basis_);
  if (std::abs(lu_.determinant()) < 1e-12) throw std::invalid_argument("closure decomposition is degenerate");
}

std::shared_ptr<const CylinderGeometry> CylinderGeometry::trivial(std::size_t dim) {
  ClosedSubgroupDecomp d;
  d.ambient_dim = dim;
  return std::make_shared<const CylinderGeometry>(d);
}

Eigen::VectorXd CylinderGeometry::canonical_coordinates(const Eigen::VectorXd& mu) const {
  if (static_cast<std::size_t>(mu.size()) != dim()) throw std::invalid_argument("cylinder: dimension mismatch");
  Eigen::VectorXd c = lu_.solve(mu);
  for (std::size_t i = 0; i < v_; ++i) c[static_cast<Eigen::Index>(i)] = 0.0;
  for (std::size_t i = v_; i < v_ + l_; ++i) {
    auto& x = c[static_cast<Eigen::Index>(i)];
    x = wrap_unit(x);
    if (x > 1.0 - 1e-12) x = 0.0;
  }
  return c;
}

Eigen::VectorXd CylinderGeometry::tangent_projection(const Eigen::VectorXd& v) const {
  Eigen::VectorXd c = lu_.solve(v);
  for (std::size_t i = 0; i < v_; ++i) c[static_cast<Eigen::Index>(i)] = 0.0;
  return basis_ * c;
}

Eigen::VectorXd CylinderGeometry::wrap_difference(Eigen::VectorXd dc) const {
  for (std::size_t i = 0; i < v_; ++i) dc[static_cast<Eigen::Index>(i)] = 0.0;
  for (std::size_t i = v_; i < v_ + l_; ++i) {
    auto& x = dc[static_cast<Eigen::Index>(i)];
    x -= std::round(x);
  }
  return dc;
}

CylinderPoint::CylinderPoint(std::shared_ptr<const CylinderGeometry> geometry, const DualVector& mu)
    : geometry_(std::move(geometry)) {
  if (!geometry_) throw std::invalid_argument("cylinder point needs a geometry");
  coords_ = geometry_->canonical_coordinates(mu.vec());
  representative_ = DualVector(Eigen::VectorXd(geometry_->basis() * coords_));
}

CylinderPoint CylinderPoint::operator+(const CylinderPoint& other) const {
  if (geometry_ != other.geometry_ && geometry_->basis() != other.geometry_->basis()) {
    throw std::invalid_argument("cylinder points live on different cylinders");
  }
  return CylinderPoint(geometry_, representative_ + other.representative_);
}

Eigen::VectorXd CylinderPoint::difference(const CylinderPoint& other) const {
  return geometry_->basis() * geometry_->wrap_difference(coords_ - other.coords_);
}

double CylinderPoint::distance(const CylinderPoint& other) const { return difference(other).norm(); }

bool CylinderPoint::is_zero(double tol) const {
  return distance(CylinderPoint(geometry_, DualVector(geometry_->dim()))) <= tol;
}

CylinderPoint cylinder_project(const DualVector& mu, const std::shared_ptr<const CylinderGeometry>& geometry) {
  return CylinderPoint(geometry, mu);
}

CylinderPoint cylinder_momentum(const MagneticCotangent& model, const PhasePath& x,
                                const std::shared_ptr<const CylinderGeometry>& geometry) {
  return cylinder_project(momentum_of_path(model, x), geometry);
}

CylinderPoint sigma_K(const MagneticCotangent& model, const GroupPath& lift,
                      const std::shared_ptr<const CylinderGeometry>& geometry) {
  return cylinder_project(sigma_J(model, lift), geometry);
}

CylinderPoint affine_cylinder_action(const MagneticCotangent& model, const GroupPath& lift, const CylinderPoint& mu) {
  const GroupModel cover = model.group().universal_cover();
  const DualVector moved = cover.coadjoint_inverse(lift.lifted_endpoint(), mu.representative());
  return cylinder_project(moved, mu.geometry()) + sigma_K(model, lift, mu.geometry());
}

}  // namespace momenta
