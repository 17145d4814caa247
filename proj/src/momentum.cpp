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

#include "momenta/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "momenta/quadrature.hpp"

namespace momenta {

namespace {

constexpr int kCoarseSteps = 1024;
constexpr int kFineSteps = 2048;
constexpr double kRichardsonTolerance = 1e-7;
constexpr double kFiniteDifferenceStep = 1e-4;
constexpr double kDenominatorClamp = 1e-8;

DualVector lerp(const DualVector& a, const DualVector& b, double w) { return (1.0 - w) * a + w * b; }

}  // namespace

PhasePath::PhasePath(GroupPath base, std::vector<DualVector> momentum_nodes)
    : base_(std::move(base)), momentum_(std::move(momentum_nodes)) {
  if (momentum_.size() != base_.segments().size() + 1) {
    throw std::invalid_argument("phase path needs one momentum node per breakpoint");
  }
  for (const auto& m : momentum_) {
    if (m.size() != base_.model().dim()) throw std::invalid_argument("phase path momentum has wrong dimension");
  }
}

PhasePath PhasePath::with_linear_momentum(GroupPath base, const DualVector& mu) {
  std::vector<DualVector> nodes;
  for (double t : base.breakpoints()) nodes.push_back(t * mu);
  return PhasePath(std::move(base), std::move(nodes));
}

PhasePath PhasePath::straight_to(const GroupModel& model, const GroupElement& lifted, const DualVector& mu) {
  return with_linear_momentum(GroupPath::straight(model, model.universal_cover().log_cover(lifted)), mu);
}

PhasePath PhasePath::trivial(const GroupModel& model) {
  return with_linear_momentum(GroupPath::trivial(model), DualVector(model.dim()));
}

DualVector PhasePath::momentum(double t) const {
  const std::size_t k = base_.segment_index(t);
  const auto& bp = base_.breakpoints();
  return lerp(momentum_[k], momentum_[k + 1], (t - bp[k]) / (bp[k + 1] - bp[k]));
}

PhasePoint PhasePath::evaluate_lifted(double t) const { return {base_.evaluate_lifted(t), momentum(t)}; }

PhaseTangent PhasePath::velocity(double t) const {
  const std::size_t k = base_.segment_index(t);
  const auto& seg = base_.segments()[k];
  return {seg.direction, (1.0 / seg.duration) * (momentum_[k + 1] - momentum_[k])};
}

PhasePoint PhasePath::endpoint() const { return {base_.endpoint(), momentum_.back()}; }

PhasePoint PhasePath::lifted_endpoint() const { return {base_.lifted_endpoint(), momentum_.back()}; }

PhasePath PhasePath::extended(const AlgebraVector& direction, const DualVector& mu_end) const {
  std::vector<PathSegment> segments;
  for (const auto& s : base_.segments()) segments.push_back({2.0 * s.direction, 0.5 * s.duration});
  segments.push_back({2.0 * direction, 0.5});
  std::vector<DualVector> nodes = momentum_;
  nodes.push_back(mu_end);
  return PhasePath(GroupPath(base_.model(), std::move(segments), base_.base()), std::move(nodes));
}

PhasePath concatenate(const PhasePath& x, const PhasePath& y) {
  if ((x.momentum_nodes().back() - y.momentum_nodes().front()).norm() > 1e-12) {
    throw std::invalid_argument("concatenate: momentum curves do not meet");
  }
  std::vector<DualVector> nodes = x.momentum_nodes();
  nodes.insert(nodes.end(), y.momentum_nodes().begin() + 1, y.momentum_nodes().end());
  return PhasePath(concatenate(x.base(), y.base()), std::move(nodes));
}

DualVector theta_integral(const GroupModel& model, const CocycleTheta& theta, const GroupPath& p) {
  if (theta.dim() != model.dim()) throw std::invalid_argument("theta_integral: dimension mismatch");
  const GroupModel cover = model.universal_cover();
  DualVector total(model.dim());
  for (std::size_t k = 0; k < p.segments().size(); ++k) {
    const auto& seg = p.segments()[k];
    const GroupElement& g0 = p.nodes()[k];
    const DualVector th = theta.apply(seg.direction);
    auto f = [&](double s) {
      return cover.coadjoint_inverse(cover.multiply(g0, cover.exp(seg.direction, s)), th).vec();
    };
    total.vec() += integrate_adaptive(f, 0.0, seg.duration);
  }
  return total;
}

DualVector theta_closed_form_heisenberg(const Eigen::Vector2d& sigma, const GroupElement& lifted_endpoint) {
  if (lifted_endpoint.coords.size() != 3) throw std::invalid_argument("Heisenberg endpoint needs 3 coordinates");
  const double a = lifted_endpoint.coords[0];
  const Eigen::Vector2d u(lifted_endpoint.coords[1], lifted_endpoint.coords[2]);
  const Eigen::Vector2d iota(-u[1], u[0]);
  const double su = sigma.dot(u);
  const Eigen::Vector2d rest = -a * sigma - 0.5 * su * iota;
  return DualVector{su, rest[0], rest[1]};
}

DualVector theta_closed_form(const GroupModel& model, const CocycleTheta& theta, const GroupElement& lifted_endpoint) {
  model.check(lifted_endpoint);
  if (model.is_abelian()) return theta.apply(AlgebraVector(lifted_endpoint.coords));
  if (!theta.has_sigma()) throw std::invalid_argument("theta_closed_form: theta is not of Heisenberg shape");
  return theta_closed_form_heisenberg(theta.sigma_real(), lifted_endpoint);
}

DualVector segment_momentum(const MagneticCotangent& model, const GroupElement& g0, const DualVector& mu0,
                            const AlgebraVector& eta, const DualVector& mu1, double duration) {
  const std::size_t n = model.dim();
  const GroupModel cover = model.group().universal_cover();
  const PhaseTangent v{eta, (1.0 / duration) * (mu1 - mu0)};
  auto f = [&](double s) {
    const PhasePoint z{cover.multiply(g0, cover.exp(eta, s)), lerp(mu0, mu1, s / duration)};
    Eigen::VectorXd out(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      out[static_cast<Eigen::Index>(i)] = model.omega(z, model.generator(AlgebraVector::unit(n, i), z), v);
    }
    return out;
  };
  return DualVector(integrate_adaptive(f, 0.0, duration));
}

DualVector momentum_of_path(const MagneticCotangent& model, const PhasePath& x) {
  const GroupPath& p = x.base();
  DualVector total(model.dim());
  for (std::size_t k = 0; k < p.segments().size(); ++k) {
    const auto& seg = p.segments()[k];
    total += segment_momentum(model, p.nodes()[k], x.momentum_nodes()[k], seg.direction, x.momentum_nodes()[k + 1],
                              seg.duration);
  }
  return total;
}

DualVector momentum_closed_form(const MagneticCotangent& model, const GroupPath& g, const DualVector& mu) {
  const GroupModel cover = model.group().universal_cover();
  return cover.coadjoint_inverse(g.lifted_endpoint(), mu) + theta_integral(model.group(), model.theta(), g);
}

namespace {

// RK4 on the joint state (chart coordinates of g, accumulated J).
Eigen::VectorXd transport_with(const MagneticCotangent& model, const PhasePath& x, int per_unit) {
  const std::size_t n = model.dim();
  const auto ni = static_cast<Eigen::Index>(n);
  const GroupModel cover = model.group().universal_cover();
  const GroupPath& p = x.base();
  Eigen::VectorXd g = p.base().coords;
  Eigen::VectorXd j = Eigen::VectorXd::Zero(ni);
  for (std::size_t k = 0; k < p.segments().size(); ++k) {
    const auto& seg = p.segments()[k];
    const DualVector& m0 = x.momentum_nodes()[k];
    const DualVector& m1 = x.momentum_nodes()[k + 1];
    const PhaseTangent v{seg.direction, (1.0 / seg.duration) * (m1 - m0)};
    auto rate = [&](double s, const Eigen::VectorXd& gc, Eigen::VectorXd& dg, Eigen::VectorXd& dj) {
      const PhasePoint z{GroupElement{gc}, lerp(m0, m1, s / seg.duration)};
      dg = cover.chart_velocity(z.g, seg.direction);
      dj.resize(ni);
      for (std::size_t i = 0; i < n; ++i) {
        dj[static_cast<Eigen::Index>(i)] = model.omega(z, model.generator(AlgebraVector::unit(n, i), z), v);
      }
    };
    const int steps = std::max(1, static_cast<int>(std::ceil(seg.duration * per_unit - 1e-9)));
    const double h = seg.duration / steps;
    Eigen::VectorXd g1, g2, g3, g4, j1, j2, j3, j4;
    for (int s = 0; s < steps; ++s) {
      const double t = s * h;
      rate(t, g, g1, j1);
      rate(t + 0.5 * h, g + 0.5 * h * g1, g2, j2);
      rate(t + 0.5 * h, g + 0.5 * h * g2, g3, j3);
      rate(t + h, g + h * g3, g4, j4);
      g += (h / 6.0) * (g1 + 2.0 * g2 + 2.0 * g3 + g4);
      j += (h / 6.0) * (j1 + 2.0 * j2 + 2.0 * j3 + j4);
    }
  }
  return j;
}

}  // namespace

DualVector horizontal_transport(const MagneticCotangent& model, const PhasePath& x) {
  const Eigen::VectorXd coarse = transport_with(model, x, kCoarseSteps);
  const Eigen::VectorXd fine = transport_with(model, x, kFineSteps);
  const double gap = (coarse - fine).cwiseAbs().maxCoeff();
  if (gap > kRichardsonTolerance) {
    std::ostringstream msg;
    msg << "horizontal transport: step-halving discrepancy " << gap << " exceeds " << kRichardsonTolerance;
    throw NumericalError(msg.str());
  }
  return DualVector(fine);
}

DualVector sigma_J(const MagneticCotangent& model, const GroupPath& g) {
  const std::size_t n = model.dim();
  const GroupModel cover = model.group().universal_cover();
  const Eigen::MatrixXd psi0 = model.chu_map({cover.identity(), DualVector(n)});
  DualVector total(n);
  for (std::size_t k = 0; k < g.segments().size(); ++k) {
    const auto& seg = g.segments()[k];
    const GroupElement& g0 = g.nodes()[k];
    const Eigen::VectorXd psi_eta = psi0 * seg.direction.vec();
    auto f = [&](double s) {
      const GroupElement gs = cover.multiply(g0, cover.exp(seg.direction, s));
      return Eigen::VectorXd(cover.adjoint(cover.inverse(gs)).transpose() * psi_eta);
    };
    total.vec() += integrate_adaptive(f, 0.0, seg.duration);
  }
  return total;
}

PhasePath lifted_action_on_path(const GroupPath& g, const PhasePath& x) {
  GroupPath product = path_product(g, x.base());
  std::vector<DualVector> nodes;
  for (double t : product.breakpoints()) nodes.push_back(x.momentum(t));
  return PhasePath(std::move(product), std::move(nodes));
}

PhasePath deck_transform(const GroupPath& gamma, const PhasePath& x) {
  const std::size_t n = gamma.model().dim();
  PhasePath loop(gamma, std::vector<DualVector>(gamma.segments().size() + 1, DualVector(n)));
  return concatenate(loop, x);
}

DualVector affine_action(const MagneticCotangent& model, const GroupPath& g, const DualVector& mu) {
  const GroupModel cover = model.group().universal_cover();
  return cover.coadjoint_inverse(g.lifted_endpoint(), mu) + sigma_J(model, g);
}

double verify_momentum_condition(const MagneticCotangent& model, const PhasePoint& z, const AlgebraVector& xi) {
  model.check(z);
  const std::size_t n = model.dim();
  const double h = kFiniteDifferenceStep;
  const PhasePath trunk = PhasePath::straight_to(model.group(), z.g, z.mu);
  const PhaseTangent gen = model.generator(xi, z);

  Eigen::VectorXd exact(static_cast<Eigen::Index>(2 * n));
  Eigen::VectorXd fd_quadrature(exact.size()), fd_closed(exact.size());
  for (std::size_t a = 0; a < 2 * n; ++a) {
    PhaseTangent dir{AlgebraVector(n), DualVector(n)};
    if (a < n) dir.xi[a] = 1.0;
    else dir.nu[a - n] = 1.0;
    exact[static_cast<Eigen::Index>(a)] = model.omega(z, gen, dir);

    double quad[2], closed[2];
    for (int side = 0; side < 2; ++side) {
      const double step = side == 0 ? h : -h;
      const PhasePath path = trunk.extended(step * dir.xi, z.mu + step * dir.nu);
      quad[side] = pairing(momentum_of_path(model, path), xi);
      closed[side] = pairing(momentum_closed_form(model, path.base(), path.momentum_nodes().back()), xi);
    }
    fd_quadrature[static_cast<Eigen::Index>(a)] = (quad[0] - quad[1]) / (2.0 * h);
    fd_closed[static_cast<Eigen::Index>(a)] = (closed[0] - closed[1]) / (2.0 * h);
  }
  const double scale = std::max(exact.cwiseAbs().maxCoeff(), kDenominatorClamp);
  return std::max((fd_quadrature - exact).cwiseAbs().maxCoeff(), (fd_closed - exact).cwiseAbs().maxCoeff()) / scale;
}

}  // namespace momenta
