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

#include "momenta/cylinder.hpp"
#include "momenta/momentum.hpp"

namespace momenta {

/// Hamiltonian vector field of h(g, mu) = |mu|^2 / 2: solves
/// omega(X, v) = dh(v) for every v, with dh = (0, mu).
PhaseTangent kinetic_vector_field(const MagneticCotangent& model, const PhasePoint& z);

struct NoetherResult {
  double max_drift = 0.0;
  std::size_t steps = 0;
  PhasePoint final_point;
};

/// Flows the kinetic Hamiltonian with RK4 from the end of `start` for time
/// T, tracking J through the flow, and returns the largest cylinder
/// distance of K(z(t)) from K(z(0)) over all steps. Throws NumericalError
/// when halving the step moves the final point by more than 1e-6.
NoetherResult noether_check(const MagneticCotangent& model, const std::shared_ptr<const CylinderGeometry>& cylinder,
                            const PhasePath& start, double T, double step = 1e-3);

}  // namespace momenta
