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
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

namespace momenta {

/// Raised when an iterative numerical procedure misses its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinate vector tagged with the space it lives in, so that Lie algebra
/// and dual vectors cannot be mixed up silently.
template <class Tag>
class Coords {
 public:
  Coords() = default;
  explicit Coords(std::size_t n) : v_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n))) {}
  explicit Coords(Eigen::VectorXd v) : v_(std::move(v)) {}
  Coords(std::initializer_list<double> xs) : v_(static_cast<Eigen::Index>(xs.size())) {
    Eigen::Index i = 0;
    for (double x : xs) v_[i++] = x;
  }

  static Coords unit(std::size_t n, std::size_t i) {
    Coords c(n);
    c.v_[static_cast<Eigen::Index>(i)] = 1.0;
    return c;
  }

  std::size_t size() const { return static_cast<std::size_t>(v_.size()); }
  double operator[](std::size_t i) const { return v_[static_cast<Eigen::Index>(i)]; }
  double& operator[](std::size_t i) { return v_[static_cast<Eigen::Index>(i)]; }
  const Eigen::VectorXd& vec() const { return v_; }
  Eigen::VectorXd& vec() { return v_; }
  double norm() const { return v_.norm(); }

  Coords& operator+=(const Coords& o) { v_ += o.v_; return *this; }
  Coords& operator-=(const Coords& o) { v_ -= o.v_; return *this; }
  Coords& operator*=(double s) { v_ *= s; return *this; }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(double s, Coords a) { return a *= s; }
  friend Coords operator*(Coords a, double s) { return a *= s; }
  Coords operator-() const { return Coords(Eigen::VectorXd(-v_)); }

 private:
  Eigen::VectorXd v_;
};

struct AlgebraTag {};
struct DualTag {};

/// Element of the Lie algebra, in a fixed ordered basis.
using AlgebraVector = Coords<AlgebraTag>;
/// Element of the dual of the Lie algebra, in the dual basis.
using DualVector = Coords<DualTag>;

inline double pairing(const DualVector& mu, const AlgebraVector& xi) {
  if (mu.size() != xi.size()) throw std::invalid_argument("pairing: dimension mismatch");
  return mu.vec().dot(xi.vec());
}

/// Chart coordinates of a group element. Torus: d angles in [0,1).
/// Universal torus: d reals. Heisenberg and its circle quotient: (a, u1, u2)
/// with the central coordinate first (taken mod 1 for the quotient).
struct GroupElement {
  Eigen::VectorXd coords;
};

enum class GroupKind { Torus, UniversalTorus, Heisenberg, CentralExtension };

std::string to_string(GroupKind kind);

/// One of four concrete Lie groups together with its Lie algebra.
///
/// The Heisenberg product is (a,u)(b,v) = (a + b + w(u,v)/2, u + v) with
/// w(u,v) = u1 v2 - u2 v1; the central extension S^1 x R^2 uses the same
/// rule with the first coordinate taken mod 1. Exponentials are linear in
/// these charts: exp(t (b, x)) = (t b, t x).
class GroupModel {
 public:
  static GroupModel torus(std::size_t d);
  static GroupModel universal_torus(std::size_t d);
  static GroupModel heisenberg();
  static GroupModel central_extension();

  GroupKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  bool is_abelian() const { return kind_ == GroupKind::Torus || kind_ == GroupKind::UniversalTorus; }
  bool is_simply_connected() const {
    return kind_ == GroupKind::UniversalTorus || kind_ == GroupKind::Heisenberg;
  }
  bool is_heisenberg_family() const {
    return kind_ == GroupKind::Heisenberg || kind_ == GroupKind::CentralExtension;
  }

  /// The simply connected cover; charts are shared, only normalization differs.
  GroupModel universal_cover() const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement exp(const AlgebraVector& xi, double t = 1.0) const;
  /// Inverse of exp on the universal cover chart (global for these groups).
  AlgebraVector log_cover(const GroupElement& g) const;
  /// Reduces periodic coordinates into [0, 1). Idempotent.
  GroupElement normalize(const GroupElement& g) const;
  /// Chart distance; periodic coordinates use the circle metric.
  double distance(const GroupElement& g, const GroupElement& h) const;

  Eigen::MatrixXd adjoint(const GroupElement& g) const;
  /// Ad*_{g^-1} mu, defined by <Ad*_{g^-1} mu, x> = <mu, Ad_{g^-1} x>.
  DualVector coadjoint_inverse(const GroupElement& g, const DualVector& mu) const;
  AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y) const;

  /// c[k][i][j] with [e_i, e_j] = sum_k c[k][i][j] e_k, exact.
  const std::vector<std::vector<std::vector<mpq_class>>>& structure_constants() const { return structure_; }

  /// Chart velocity of t -> g exp(t eta) at t = 0.
  Eigen::VectorXd chart_velocity(const GroupElement& g, const AlgebraVector& eta) const;

  void check(const GroupElement& g) const;
  void check(const AlgebraVector& x) const;

 private:
  GroupModel(GroupKind kind, std::size_t dim);

  GroupKind kind_;
  std::size_t dim_;
  std::vector<std::vector<std::vector<mpq_class>>> structure_;
};

/// w(u, v) = u1 v2 - u2 v1, the standard symplectic form on R^2.
inline double planar_symplectic(double u1, double u2, double v1, double v2) { return u1 * v2 - u2 * v1; }

struct PathSegment {
  AlgebraVector direction;
  double duration = 0.0;
};

/// Piecewise-exponential path g(t) = g(t_k) exp((t - t_k) direction_k) on
/// segment k, parametrized by [0, 1]. Points are computed in the universal
/// cover chart, so the path also represents a homotopy class in the cover.
class GroupPath {
 public:
  GroupPath(GroupModel model, std::vector<PathSegment> segments);
  GroupPath(GroupModel model, std::vector<PathSegment> segments, GroupElement base);

  static GroupPath trivial(const GroupModel& model);
  /// t -> exp(t xi), from the identity to exp(xi).
  static GroupPath straight(const GroupModel& model, const AlgebraVector& xi);

  const GroupModel& model() const { return model_; }
  const std::vector<PathSegment>& segments() const { return segments_; }
  /// Segment start times plus the final time 1.
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  /// Cover-chart points at the breakpoints.
  const std::vector<GroupElement>& nodes() const { return nodes_; }
  const GroupElement& base() const { return nodes_.front(); }

  /// Point of the path in the model's own chart (normalized).
  GroupElement evaluate(double t) const;
  /// Point of the lifted path in the universal cover chart.
  GroupElement evaluate_lifted(double t) const;
  AlgebraVector left_velocity(double t) const;
  GroupElement endpoint() const { return model_.normalize(nodes_.back()); }
  const GroupElement& lifted_endpoint() const { return nodes_.back(); }
  bool is_loop() const;
  /// Index of the segment containing t (the later one at a breakpoint).
  std::size_t segment_index(double t) const;

 private:
  void build();

  GroupModel model_;
  std::vector<PathSegment> segments_;
  std::vector<double> breakpoints_;
  std::vector<GroupElement> nodes_;
};

/// Representative of the pointwise product t -> p(t) q(t) in the cover.
/// Resamples on the union of both breakpoint sets refined to at least 32
/// sub-intervals; each sub-interval becomes one exponential segment given
/// by the left logarithm between consecutive samples. Throws
/// NumericalError when the endpoint misses by more than 1e-10 after four
/// refinement doublings.
GroupPath path_product(const GroupPath& p, const GroupPath& q);

/// First p, then q left-translated to start at p's endpoint; each half runs
/// at double speed.
GroupPath concatenate(const GroupPath& p, const GroupPath& q);

/// Left-translates the whole path by a cover element.
GroupPath left_translate(const GroupElement& g, const GroupPath& p);

}  // namespace momenta
