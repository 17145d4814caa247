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

#include "momenta/lie_model.hpp"

#include <algorithm>
#include <cmath>

namespace momenta {

namespace {

constexpr double kDurationTolerance = 1e-12;
constexpr double kEndpointTolerance = 1e-10;
constexpr int kMinSubintervals = 32;
constexpr int kMaxDoublings = 4;

double wrap_unit(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

}  // namespace

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Torus: return "torus";
    case GroupKind::UniversalTorus: return "universalTorus";
    case GroupKind::Heisenberg: return "heisenberg";
    case GroupKind::CentralExtension: return "centralExtension";
  }
  return "unknown";
}

GroupModel::GroupModel(GroupKind kind, std::size_t dim) : kind_(kind), dim_(dim) {
  structure_.assign(dim, std::vector<std::vector<mpq_class>>(dim, std::vector<mpq_class>(dim, 0)));
  if (is_heisenberg_family()) {
    structure_[0][1][2] = 1;
    structure_[0][2][1] = -1;
  }
}

GroupModel GroupModel::torus(std::size_t d) {
  if (d == 0) throw std::invalid_argument("torus dimension must be positive");
  return GroupModel(GroupKind::Torus, d);
}

GroupModel GroupModel::universal_torus(std::size_t d) {
  if (d == 0) throw std::invalid_argument("torus dimension must be positive");
  return GroupModel(GroupKind::UniversalTorus, d);
}

GroupModel GroupModel::heisenberg() { return GroupModel(GroupKind::Heisenberg, 3); }

GroupModel GroupModel::central_extension() { return GroupModel(GroupKind::CentralExtension, 3); }

GroupModel GroupModel::universal_cover() const {
  switch (kind_) {
    case GroupKind::Torus: return universal_torus(dim_);
    case GroupKind::CentralExtension: return heisenberg();
    default: return *this;
  }
}

void GroupModel::check(const GroupElement& g) const {
  if (static_cast<std::size_t>(g.coords.size()) != dim_) {
    throw std::invalid_argument("group element has " + std::to_string(g.coords.size()) +
                                " coordinates, model dimension is " + std::to_string(dim_));
  }
}

void GroupModel::check(const AlgebraVector& x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("algebra vector has " + std::to_string(x.size()) +
                                " coordinates, model dimension is " + std::to_string(dim_));
  }
}

GroupElement GroupModel::identity() const { return {Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim_))}; }

GroupElement GroupModel::multiply(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  GroupElement out{g.coords + h.coords};
  if (is_heisenberg_family()) {
    out.coords[0] += 0.5 * planar_symplectic(g.coords[1], g.coords[2], h.coords[1], h.coords[2]);
  }
  return normalize(out);
}

GroupElement GroupModel::inverse(const GroupElement& g) const {
  check(g);
  return normalize({-g.coords});
}

GroupElement GroupModel::exp(const AlgebraVector& xi, double t) const {
  check(xi);
  return normalize({t * xi.vec()});
}

AlgebraVector GroupModel::log_cover(const GroupElement& g) const {
  check(g);
  return AlgebraVector(g.coords);
}

GroupElement GroupModel::normalize(const GroupElement& g) const {
  GroupElement out = g;
  if (kind_ == GroupKind::Torus) {
    for (Eigen::Index i = 0; i < out.coords.size(); ++i) out.coords[i] = wrap_unit(out.coords[i]);
  } else if (kind_ == GroupKind::CentralExtension) {
    out.coords[0] = wrap_unit(out.coords[0]);
  }
  return out;
}

double GroupModel::distance(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  Eigen::VectorXd d = g.coords - h.coords;
  if (kind_ == GroupKind::Torus) {
    for (Eigen::Index i = 0; i < d.size(); ++i) d[i] -= std::round(d[i]);
  } else if (kind_ == GroupKind::CentralExtension) {
    d[0] -= std::round(d[0]);
  }
  return d.norm();
}

Eigen::MatrixXd GroupModel::adjoint(const GroupElement& g) const {
  check(g);
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXd ad = Eigen::MatrixXd::Identity(n, n);
  if (is_heisenberg_family()) {
    // Ad_(a,u) (b, x) = (b + w(u, x), x)
    ad(0, 1) = -g.coords[2];
    ad(0, 2) = g.coords[1];
  }
  return ad;
}

DualVector GroupModel::coadjoint_inverse(const GroupElement& g, const DualVector& mu) const {
  if (mu.size() != dim_) throw std::invalid_argument("coadjoint: dimension mismatch");
  return DualVector(Eigen::VectorXd(adjoint(inverse(g)).transpose() * mu.vec()));
}

AlgebraVector GroupModel::bracket(const AlgebraVector& x, const AlgebraVector& y) const {
  check(x);
  check(y);
  AlgebraVector out(dim_);
  if (is_heisenberg_family()) out[0] = planar_symplectic(x[1], x[2], y[1], y[2]);
  return out;
}

Eigen::VectorXd GroupModel::chart_velocity(const GroupElement& g, const AlgebraVector& eta) const {
  check(g);
  check(eta);
  Eigen::VectorXd v = eta.vec();
  if (is_heisenberg_family()) v[0] += 0.5 * planar_symplectic(g.coords[1], g.coords[2], eta[1], eta[2]);
  return v;
}

GroupPath::GroupPath(GroupModel model, std::vector<PathSegment> segments)
    : GroupPath(model, std::move(segments), model.identity()) {}

GroupPath::GroupPath(GroupModel model, std::vector<PathSegment> segments, GroupElement base)
    : model_(std::move(model)), segments_(std::move(segments)) {
  model_.check(base);
  nodes_.push_back(std::move(base));
  build();
}

void GroupPath::build() {
  if (segments_.empty()) throw std::invalid_argument("group path needs at least one segment");
  const GroupModel cover = model_.universal_cover();
  double total = 0.0;
  breakpoints_.assign(1, 0.0);
  for (const auto& s : segments_) {
    model_.check(s.direction);
    if (!(s.duration > 0.0)) throw std::invalid_argument("path segment durations must be positive");
    total += s.duration;
    breakpoints_.push_back(total);
    nodes_.push_back(cover.multiply(nodes_.back(), cover.exp(s.direction, s.duration)));
  }
  if (std::abs(total - 1.0) > kDurationTolerance) {
    throw std::invalid_argument("path segment durations sum to " + std::to_string(total) + ", expected 1");
  }
  breakpoints_.back() = 1.0;
}

GroupPath GroupPath::trivial(const GroupModel& model) {
  return GroupPath(model, {PathSegment{AlgebraVector(model.dim()), 1.0}});
}

GroupPath GroupPath::straight(const GroupModel& model, const AlgebraVector& xi) {
  return GroupPath(model, {PathSegment{xi, 1.0}});
}

std::size_t GroupPath::segment_index(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("path parameter outside [0, 1]");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  std::size_t k = static_cast<std::size_t>(it - breakpoints_.begin());
  k = k == 0 ? 0 : k - 1;
  return std::min(k, segments_.size() - 1);
}

GroupElement GroupPath::evaluate_lifted(double t) const {
  const std::size_t k = segment_index(t);
  const GroupModel cover = model_.universal_cover();
  return cover.multiply(nodes_[k], cover.exp(segments_[k].direction, t - breakpoints_[k]));
}

GroupElement GroupPath::evaluate(double t) const { return model_.normalize(evaluate_lifted(t)); }

AlgebraVector GroupPath::left_velocity(double t) const { return segments_[segment_index(t)].direction; }

bool GroupPath::is_loop() const {
  return model_.distance(endpoint(), model_.normalize(base())) <= kEndpointTolerance;
}

GroupPath path_product(const GroupPath& p, const GroupPath& q) {
  const GroupModel& model = p.model();
  if (model.kind() != q.model().kind() || model.dim() != q.model().dim()) {
    throw std::invalid_argument("path_product: paths live in different groups");
  }
  const GroupModel cover = model.universal_cover();
  const GroupElement e = cover.identity();
  if (cover.distance(p.base(), e) > kEndpointTolerance || cover.distance(q.base(), e) > kEndpointTolerance) {
    throw std::invalid_argument("path_product: paths must start at the identity");
  }

  std::vector<double> cuts = p.breakpoints();
  cuts.insert(cuts.end(), q.breakpoints().begin(), q.breakpoints().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double a, double b) { return std::abs(a - b) < 1e-15; }),
             cuts.end());

  auto product_at = [&](double t) { return cover.multiply(p.evaluate_lifted(t), q.evaluate_lifted(t)); };
  const GroupElement target = product_at(1.0);

  int per_unit = kMinSubintervals;
  for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, per_unit *= 2) {
    std::vector<double> ts{0.0};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double a = cuts[i], b = cuts[i + 1];
      const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) * per_unit - 1e-9)));
      for (int k = 1; k <= pieces; ++k) ts.push_back(k == pieces ? b : a + (b - a) * k / pieces);
    }
    std::vector<PathSegment> segments;
    GroupElement prev = product_at(ts[0]);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      GroupElement next = product_at(ts[i + 1]);
      const double dt = ts[i + 1] - ts[i];
      AlgebraVector step = cover.log_cover(cover.multiply(cover.inverse(prev), next));
      segments.push_back({(1.0 / dt) * step, dt});
      prev = std::move(next);
    }
    GroupPath out(model, std::move(segments));
    if (cover.distance(out.lifted_endpoint(), target) <= kEndpointTolerance) return out;
  }
  throw NumericalError("path_product: endpoint mismatch after refinement");
}

GroupPath concatenate(const GroupPath& p, const GroupPath& q) {
  std::vector<PathSegment> segments;
  for (const auto& s : p.segments()) segments.push_back({2.0 * s.direction, 0.5 * s.duration});
  for (const auto& s : q.segments()) segments.push_back({2.0 * s.direction, 0.5 * s.duration});
  return GroupPath(p.model(), std::move(segments), p.base());
}

GroupPath left_translate(const GroupElement& g, const GroupPath& p) {
  const GroupModel cover = p.model().universal_cover();
  return GroupPath(p.model(), p.segments(), cover.multiply(g, p.base()));
}

}  // namespace momenta
