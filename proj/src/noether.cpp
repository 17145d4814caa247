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

#include "momenta/noether.hpp"

#include <cmath>
#include <sstream>

namespace momenta {

namespace {

constexpr double kStepHalvingTolerance = 1e-6;

struct State {
  Eigen::VectorXd g;
  Eigen::VectorXd mu;
};

State rate(const MagneticCotangent& model, const GroupModel& cover, const State& s) {
  const PhasePoint z{GroupElement{s.g}, DualVector(s.mu)};
  const PhaseTangent x = kinetic_vector_field(model, z);
  return {cover.chart_velocity(z.g, x.xi), x.nu.vec()};
}

State rk4_step(const MagneticCotangent& model, const GroupModel& cover, const State& s, double h) {
  auto shifted = [](const State& a, const State& d, double w) { return State{a.g + w * d.g, a.mu + w * d.mu}; };
  const State k1 = rate(model, cover, s);
  const State k2 = rate(model, cover, shifted(s, k1, 0.5 * h));
  const State k3 = rate(model, cover, shifted(s, k2, 0.5 * h));
  const State k4 = rate(model, cover, shifted(s, k3, h));
  return {s.g + (h / 6.0) * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g),
          s.mu + (h / 6.0) * (k1.mu + 2.0 * k2.mu + 2.0 * k3.mu + k4.mu)};
}

}  // namespace

PhaseTangent kinetic_vector_field(const MagneticCotangent& model, const PhasePoint& z) {
  const auto n = static_cast<Eigen::Index>(model.dim());
  const Eigen::MatrixXd w = model.omega_matrix(z);
  Eigen::VectorXd dh = Eigen::VectorXd::Zero(2 * n);
  dh.tail(n) = z.mu.vec();
  const Eigen::VectorXd x = w.transpose().partialPivLu().solve(dh);
  return {AlgebraVector(Eigen::VectorXd(x.head(n))), DualVector(Eigen::VectorXd(x.tail(n)))};
}

NoetherResult noether_check(const MagneticCotangent& model, const std::shared_ptr<const CylinderGeometry>& cylinder,
                            const PhasePath& start, double T, double step) {
  if (T < 0.0 || !(step > 0.0)) throw std::invalid_argument("noether_check: need T >= 0 and a positive step");
  const GroupModel cover = model.group().universal_cover();
  const PhasePoint z0 = start.lifted_endpoint();
  NoetherResult result;
  result.final_point = z0;
  if (T == 0.0) return result;

  const auto steps = static_cast<std::size_t>(std::ceil(T / step - 1e-9));
  const double h = T / static_cast<double>(steps);

  DualVector j = momentum_of_path(model, start);
  const CylinderPoint k0 = cylinder_project(j, cylinder);
  State s{z0.g.coords, z0.mu.vec()};
  for (std::size_t i = 0; i < steps; ++i) {
    const State next = rk4_step(model, cover, s, h);
    const GroupElement g0{s.g}, g1{next.g};
    const AlgebraVector eta = cover.log_cover(cover.multiply(cover.inverse(g0), g1));
    j += segment_momentum(model, g0, DualVector(s.mu), eta, DualVector(next.mu), 1.0);
    result.max_drift = std::max(result.max_drift, cylinder_project(j, cylinder).distance(k0));
    s = next;
  }
  result.steps = steps;
  result.final_point = {GroupElement{s.g}, DualVector(s.mu)};

  State half{z0.g.coords, z0.mu.vec()};
  for (std::size_t i = 0; i < 2 * steps; ++i) half = rk4_step(model, cover, half, 0.5 * h);
  const double gap = std::max((half.g - s.g).cwiseAbs().maxCoeff(), (half.mu - s.mu).cwiseAbs().maxCoeff());
  if (gap > kStepHalvingTolerance) {
    std::ostringstream msg;
    msg << "noether_check: step halving moved the final point by " << gap;
    throw NumericalError(msg.str());
  }
  return result;
}

}  // namespace momenta
