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

#include "momenta/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "momenta/lie_model.hpp"

namespace momenta {

namespace {

constexpr double kConvergence = 1e-10;
constexpr int kMaxDoublings = 12;

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

GaussLegendre8 build_rule() {
  GaussLegendre8 rule{};
  constexpr int n = 8;
  for (int i = 0; i < n / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i), hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = x;
    rule.nodes[hi] = -x;
    rule.weights[lo] = rule.weights[hi] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendre8& gauss_legendre8() {
  static const GaussLegendre8 rule = build_rule();
  return rule;
}

Eigen::VectorXd gauss_legendre(const std::function<Eigen::VectorXd(double)>& f, double a, double b, int panels) {
  const auto& rule = gauss_legendre8();
  const double h = (b - a) / panels;
  Eigen::VectorXd sum;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      Eigen::VectorXd v = f(mid + 0.5 * h * rule.nodes[k]) * (0.5 * h * rule.weights[k]);
      if (sum.size() == 0) sum = std::move(v);
      else sum += v;
    }
  }
  return sum;
}

Eigen::VectorXd integrate_adaptive(const std::function<Eigen::VectorXd(double)>& f, double a, double b) {
  Eigen::VectorXd prev = gauss_legendre(f, a, b, 1);
  int panels = 1;
  double diff = 0.0;
  for (int d = 0; d < kMaxDoublings; ++d) {
    panels *= 2;
    Eigen::VectorXd next = gauss_legendre(f, a, b, panels);
    diff = (next - prev).cwiseAbs().maxCoeff();
    if (diff < kConvergence * std::max(1.0, next.cwiseAbs().maxCoeff())) return next;
    prev = std::move(next);
  }
  std::ostringstream msg;
  msg << "quadrature on [" << a << ", " << b << "] did not converge: last change " << diff << " after "
      << kMaxDoublings << " doublings";
  throw NumericalError(msg.str());
}

}  // namespace momenta
