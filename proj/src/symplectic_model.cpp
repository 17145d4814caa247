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

#include "momenta/symplectic_model.hpp"

#include <stdexcept>

namespace momenta {

CocycleTheta::CocycleTheta(ExactMatrix m) : exact_(std::move(m)) {
  const auto n = static_cast<Eigen::Index>(exact_.rows());
  real_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      real_(i, j) = exact_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double();
}

CocycleTheta CocycleTheta::from_matrix(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("theta must be square");
  if (m.rows() == 0) throw std::invalid_argument("theta must be nonempty");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (!(m(i, j) + m(j, i)).is_zero()) throw std::invalid_argument("theta not antisymmetric");
  return CocycleTheta(m);
}

CocycleTheta CocycleTheta::heisenberg(const ExactScalar& s1, const ExactScalar& s2) {
  ExactMatrix m(3, 3);
  m(0, 1) = s1;
  m(0, 2) = s2;
  m(1, 0) = -s1;
  m(2, 0) = -s2;
  return CocycleTheta(m);
}

CocycleTheta CocycleTheta::zero(std::size_t n) { return CocycleTheta(ExactMatrix(n, n)); }

bool CocycleTheta::is_zero() const {
  for (std::size_t i = 0; i < exact_.rows(); ++i)
    for (std::size_t j = 0; j < exact_.cols(); ++j)
      if (!exact_(i, j).is_zero()) return false;
  return true;
}

bool CocycleTheta::has_sigma() const { return dim() == 3 && exact_(1, 2).is_zero(); }

std::array<ExactScalar, 2> CocycleTheta::sigma() const {
  if (!has_sigma()) throw std::invalid_argument("theta is not of Heisenberg shape");
  return {exact_(0, 1), exact_(0, 2)};
}

Eigen::Vector2d CocycleTheta::sigma_real() const {
  if (!has_sigma()) throw std::invalid_argument("theta is not of Heisenberg shape");
  return {real_(0, 1), real_(0, 2)};
}

DualVector CocycleTheta::apply(const AlgebraVector& x) const {
  if (x.size() != dim()) throw std::invalid_argument("theta: dimension mismatch");
  return DualVector(Eigen::VectorXd(real_ * x.vec()));
}

double CocycleTheta::sigma_form(const AlgebraVector& x, const AlgebraVector& y) const {
  return pairing(apply(x), y);
}

bool satisfies_cocycle_identity(const GroupModel& group, const CocycleTheta& theta) {
  const std::size_t n = group.dim();
  if (theta.dim() != n) return false;
  const auto& c = group.structure_constants();
  const ExactMatrix& t = theta.matrix();
  // Sigma([e_i, e_j], e_k) = sum_l c[l][i][j] <theta e_l, e_k> = sum_l c[l][i][j] t(k, l)
  auto term = [&](std::size_t i, std::size_t j, std::size_t k) {
    ExactScalar s;
    for (std::size_t l = 0; l < n; ++l) {
      if (c[l][i][j] != 0) s += ExactScalar(c[l][i][j]) * t(k, l);
    }
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(term(i, j, k) + term(j, k, i) + term(k, i, j)).is_zero()) return false;
  return true;
}

MagneticCotangent::MagneticCotangent(GroupModel group, CocycleTheta theta)
    : group_(std::move(group)), theta_(std::move(theta)), sigma_(theta_.sigma_matrix()) {
  if (theta_.dim() != group_.dim()) {
    throw std::invalid_argument("theta is " + std::to_string(theta_.dim()) + "x" + std::to_string(theta_.dim()) +
                                " but the group has dimension " + std::to_string(group_.dim()));
  }
  if (!satisfies_cocycle_identity(group_, theta_)) {
    throw std::invalid_argument("theta does not satisfy the cocycle identity");
  }
}

MagneticCotangent MagneticCotangent::with_canonical_sign(double sign) const {
  if (sign != 1.0 && sign != -1.0) throw std::invalid_argument("canonical sign must be +1 or -1");
  MagneticCotangent out = *this;
  out.sign_ = sign;
  return out;
}

void MagneticCotangent::check(const PhasePoint& z) const {
  group_.check(z.g);
  if (z.mu.size() != dim()) throw std::invalid_argument("phase point momentum has wrong dimension");
}

void MagneticCotangent::check(const PhaseTangent& v) const {
  group_.check(v.xi);
  if (v.nu.size() != dim()) throw std::invalid_argument("phase tangent momentum has wrong dimension");
}

double MagneticCotangent::omega(const PhasePoint& z, const PhaseTangent& v1, const PhaseTangent& v2) const {
  check(z);
  check(v1);
  check(v2);
  const double canonical =
      pairing(v2.nu, v1.xi) - pairing(v1.nu, v2.xi) + pairing(z.mu, group_.bracket(v1.xi, v2.xi));
  return sign_ * canonical - v1.xi.vec().dot(sigma_ * v2.xi.vec());
}

Eigen::MatrixXd MagneticCotangent::omega_matrix(const PhasePoint& z) const {
  const std::size_t n = dim();
  auto basis = [n](std::size_t a) {
    PhaseTangent v{AlgebraVector(n), DualVector(n)};
    if (a < n) v.xi[a] = 1.0;
    else v.nu[a - n] = 1.0;
    return v;
  };
  const auto m = static_cast<Eigen::Index>(2 * n);
  Eigen::MatrixXd w(m, m);
  for (std::size_t a = 0; a < 2 * n; ++a)
    for (std::size_t b = 0; b < 2 * n; ++b)
      w(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = omega(z, basis(a), basis(b));
  return w;
}

PhaseTangent MagneticCotangent::generator(const AlgebraVector& xi, const PhasePoint& z) const {
  check(z);
  group_.check(xi);
  Eigen::VectorXd x = group_.adjoint(group_.inverse(z.g)) * xi.vec();
  return {AlgebraVector(std::move(x)), DualVector(dim())};
}

Eigen::MatrixXd MagneticCotangent::chu_map(const PhasePoint& z) const {
  const std::size_t n = dim();
  std::vector<PhaseTangent> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(generator(AlgebraVector::unit(n, i), z));
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd psi(m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      psi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = omega(z, gens[i], gens[j]);
  return psi;
}

PhasePoint MagneticCotangent::act(const GroupElement& h, const PhasePoint& z) const {
  check(z);
  return {group_.multiply(h, z.g), z.mu};
}

}  // namespace momenta
