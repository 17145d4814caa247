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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "momenta/checks.hpp"
#include "momenta/momentum.hpp"
#include "momenta/quadrature.hpp"
#include "momenta/random.hpp"
#include "test_util.hpp"

namespace momenta {
namespace {

using testing::load_scenario;

MagneticCotangent heisenberg(long s1, long s2) {
  return MagneticCotangent(GroupModel::central_extension(), CocycleTheta::heisenberg(ExactScalar(s1), ExactScalar(s2)));
}

MagneticCotangent planar_torus(long c) {
  return MagneticCotangent(GroupModel::torus(2), CocycleTheta::from_matrix(testing::rational_matrix({{0, c}, {-c, 0}})));
}

// J at lifted endpoint (a, u) with body momentum (psi, nu), derived by hand:
// (psi + s.u, nu - a s - (psi + s.u / 2) (-u2, u1)).
Eigen::Vector3d heisenberg_J(const Eigen::Vector2d& s, const Eigen::Vector3d& g, const Eigen::Vector3d& mu) {
  const double a = g[0], u1 = g[1], u2 = g[2], psi = mu[0];
  const double su = s[0] * u1 + s[1] * u2;
  const double c = psi + 0.5 * su;
  return {psi + su, mu[1] - a * s[0] + c * u2, mu[2] - a * s[1] - c * u1};
}

TEST(Quadrature, EightPointRuleIsExactToDegreeFifteen) {
  const auto f = [](double x) { return Eigen::VectorXd::Constant(1, std::pow(x, 14) + std::pow(x, 15)); };
  EXPECT_NEAR(gauss_legendre(f, 0.0, 1.0, 1)[0], 1.0 / 15 + 1.0 / 16, 1e-15);
  // Tabulated to 20 digits.
  const double nodes[] = {0.96028985649753623168, 0.79666647741362673959, 0.52553240991632898582,
                          0.18343464249564980494};
  const double weights[] = {0.10122853629037625915, 0.22238103445337447054, 0.31370664587788728734,
                            0.36268378337836198297};
  const auto& rule = gauss_legendre8();
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(rule.nodes[i], nodes[i], 2e-16);
    EXPECT_NEAR(rule.nodes[7 - i], -nodes[i], 2e-16);
    EXPECT_NEAR(rule.weights[i], weights[i], 2e-16);
    EXPECT_EQ(rule.weights[7 - i], rule.weights[i]);
  }
}

TEST(Quadrature, AdaptiveIntegratesOscillatoryFunction) {
  const auto f = [](double x) {
    Eigen::VectorXd v(2);
    v << std::sin(x), std::cos(40 * x);
    return v;
  };
  const Eigen::VectorXd r = integrate_adaptive(f, 0.0, std::numbers::pi);
  EXPECT_NEAR(r[0], 2.0, 1e-12);
  EXPECT_NEAR(r[1], std::sin(40 * std::numbers::pi) / 40, 1e-12);
}

TEST(Symplectic, ThetaMustBeAntisymmetric) {
  try {
    CocycleTheta::from_matrix(testing::rational_matrix({{0, 1}, {1, 0}}));
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("theta not antisymmetric"), std::string::npos);
  }
}

TEST(Symplectic, TorusOmegaMatchesHandFormula) {
  const MagneticCotangent m = planar_torus(3);
  const PhasePoint z{GroupElement{Eigen::Vector2d(0.2, 0.7)}, DualVector{1.0, -2.0}};
  const PhaseTangent v1{AlgebraVector{1.0, 2.0}, DualVector{0.5, -1.0}};
  const PhaseTangent v2{AlgebraVector{-0.5, 1.5}, DualVector{2.0, 0.25}};
  // <nu2, xi1> - <nu1, xi2> - <theta xi1, xi2> with theta = [[0,3],[-3,0]]
  const double canon = (2.0 * 1.0 + 0.25 * 2.0) - (0.5 * -0.5 + -1.0 * 1.5);
  const double magnetic = (3.0 * 2.0) * -0.5 + (-3.0 * 1.0) * 1.5;
  EXPECT_NEAR(m.omega(z, v1, v2), canon - magnetic, 1e-14);
  Eigen::VectorXd a(4), b(4);
  a << v1.xi.vec(), v1.nu.vec();
  b << v2.xi.vec(), v2.nu.vec();
  EXPECT_NEAR(a.dot(m.omega_matrix(z) * b), m.omega(z, v1, v2), 1e-14);
}

TEST(Symplectic, ChuMapAtBaseIsMinusSigma) {
  const MagneticCotangent m = heisenberg(1, -2);
  const Eigen::MatrixXd psi = m.chu_map({m.group().identity(), DualVector(3)});
  const AlgebraVector x{0.3, 1.0, 2.0}, y{-1.0, 0.5, 0.7};
  EXPECT_NEAR(x.vec().dot(psi * y.vec()), -m.theta().sigma_form(x, y), 1e-14);
}

TEST(Symplectic, GeneratorIsLeftTrivializedActionDerivative) {
  const MagneticCotangent m = heisenberg(1, 0);
  const GroupModel g = m.group().universal_cover();
  const PhasePoint z{GroupElement{Eigen::Vector3d(0.4, 1.0, -0.5)}, DualVector{0.2, 0.3, 0.4}};
  const AlgebraVector xi{0.5, -1.0, 2.0};
  const double h = 1e-6;
  auto moved = [&](double t) { return g.log_cover(g.multiply(g.inverse(z.g), g.multiply(g.exp(xi, t), z.g))).vec(); };
  const Eigen::VectorXd fd = (moved(h) - moved(-h)) / (2 * h);
  const PhaseTangent gen = m.generator(xi, z);
  EXPECT_LT((fd - gen.xi.vec()).norm(), 1e-8);
  EXPECT_LT(gen.nu.norm(), 1e-15);
}

TEST(Momentum, PhasePathValidatesNodeCount) {
  const GroupModel g = GroupModel::torus(2);
  EXPECT_THROW(PhasePath(GroupPath::straight(g, AlgebraVector{1, 0}), {DualVector(2)}), std::invalid_argument);
}

TEST(Momentum, TorusJIsMuPlusThetaU) {
  const MagneticCotangent m = planar_torus(1);
  auto rng = sample_rng(3, 3, 0);
  for (int i = 0; i < 20; ++i) {
    const PhasePath x = random_phase_path(m.group(), rng, 3, 2.0);
    const Eigen::Vector2d u = x.base().lifted_endpoint().coords;
    const Eigen::Vector2d mu = x.momentum_nodes().back().vec();
    const Eigen::Vector2d expected = mu + Eigen::Vector2d(u[1], -u[0]);
    EXPECT_LT((momentum_of_path(m, x).vec() - expected).norm(), 1e-11);
  }
}

TEST(Momentum, HeisenbergJMatchesHandFormula) {
  const MagneticCotangent m = heisenberg(1, 0);
  auto rng = sample_rng(5, 3, 0);
  for (int i = 0; i < 30; ++i) {
    const PhasePath x = random_phase_path(m.group(), rng, 1 + i % 3, 1.5);
    const Eigen::Vector3d expected =
        heisenberg_J({1.0, 0.0}, x.base().lifted_endpoint().coords, x.momentum_nodes().back().vec());
    EXPECT_LT((momentum_of_path(m, x).vec() - expected).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT((momentum_closed_form(m, x.base(), x.momentum_nodes().back()).vec() - expected).cwiseAbs().maxCoeff(),
              1e-12);
    EXPECT_LT((horizontal_transport(m, x).vec() - expected).cwiseAbs().maxCoeff(), 1e-7);
  }
}

TEST(Momentum, ConditionHoldsAndDetectsSignFlip) {
  for (const MagneticCotangent& m : {planar_torus(0), planar_torus(1), heisenberg(1, 0)}) {
    auto rng = sample_rng(9, 4, 0);
    double good = 0.0, flipped = 0.0;
    const MagneticCotangent bad = m.with_canonical_sign(-1.0);
    for (int i = 0; i < 10; ++i) {
      const PhasePoint z{GroupElement{uniform_vector(rng, m.dim(), -1, 1)}, DualVector(uniform_vector(rng, m.dim(), -1, 1))};
      const AlgebraVector xi(uniform_vector(rng, m.dim(), -1, 1));
      good = std::max(good, verify_momentum_condition(m, z, xi));
      flipped = std::max(flipped, verify_momentum_condition(bad, z, xi));
    }
    EXPECT_LT(good, 1e-5);
    EXPECT_GT(flipped, 1e-2);
  }
}

TEST(Momentum, SigmaVanishesForZeroCocycle) {
  const MagneticCotangent m = planar_torus(0);
  auto rng = sample_rng(1, 5, 0);
  EXPECT_LT(sigma_J(m, random_group_path(m.group(), rng, 3, 2.0)).norm(), 1e-14);
}

TEST(Momentum, DeckTransformShiftsJByHolonomy) {
  const Scenario s = load_scenario("heisenberg.json");
  const PhasePath x = PhasePath::straight_to(s.model->group(), GroupElement{Eigen::Vector3d(0.3, 1.0, -2.0)},
                                             DualVector{0.5, 1.0, 0.0});
  for (long k : {-2L, 1L, 3L}) {
    const PhasePath y = deck_transform(s.loop({k}), x);
    EXPECT_LT(s.model->group().distance(y.endpoint().g, x.endpoint().g), 1e-12);
    const Eigen::Vector3d shift = (momentum_of_path(*s.model, y) - momentum_of_path(*s.model, x)).vec();
    // theta(k e_0) = (0, -k s1, -k s2) with s = (1, 0)
    EXPECT_LT((shift - Eigen::Vector3d(0.0, -static_cast<double>(k), 0.0)).norm(), 1e-9) << k;
  }
}

TEST(Momentum, AffineActionAtIdentityIsTrivial) {
  const MagneticCotangent m = heisenberg(2, 1);
  const DualVector mu{1.0, 2.0, 3.0};
  EXPECT_LT((affine_action(m, GroupPath::trivial(m.group()), mu) - mu).norm(), 1e-15);
}

}  // namespace
}  // namespace momenta
