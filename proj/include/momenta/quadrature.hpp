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
#include <functional>

#include <Eigen/Dense>

namespace momenta {

/// Nodes and weights of the 8-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre8 {
  std::array<double, 8> nodes;
  std::array<double, 8> weights;
};

const GaussLegendre8& gauss_legendre8();

/// Order-8 Gauss-Legendre on `panels` equal panels of [a, b].
Eigen::VectorXd gauss_legendre(const std::function<Eigen::VectorXd(double)>& f, double a, double b, int panels);

/// Doubles the panel count until successive estimates differ by less than
/// 1e-10 (scaled by max(1, |estimate|)). Throws NumericalError after 12
/// doublings without convergence.
Eigen::VectorXd integrate_adaptive(const std::function<Eigen::VectorXd(double)>& f, double a, double b);

}  // namespace momenta
