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

#include <gtest/gtest.h>

#include "momenta/lie_model.hpp"
#include "momenta/random.hpp"

namespace momenta {
namespace {

GroupElement el(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return {v};
}

// (a, u)(b, v) = (a + b + (u1 v2 - u2 v1) / 2, u + v), written out by hand.
Eigen::Vector3d heisenberg_product(const Eigen::Vector3d& g, const Eigen::Vector3d& h) {
  return {g[0] + h[0] + 0.5 * (g[1] * h[2] - g[2] * h[1]), g[1] + h[1], g[2] + h[2]};
}

TEST(GroupModel, HeisenbergProductInverseAndExp) {
  const GroupModel h = GroupModel::heisenberg();
  auto rng = sample_rng(7, 1, 0);
  for (int i = 0; i < 50; ++i) {
    const GroupElement a{uniform_vector(rng, 3, -2, 2)}, b{uniform_vector(rng, 3, -2, 2)};
    const Eigen::Vector3d expected = heisenberg_product(a.coords, b.coords);
    EXPECT_LT((h.multiply(a, b).coords - expected).norm(), 1e-14);
    EXPECT_LT(h.multiply(a, h.inverse(a)).coords.norm(), 1e-14);
  }
  const AlgebraVector xi{0.3, -1.0, 2.0};
  EXPECT_LT((h.exp(xi, 2.0).coords - 2.0 * xi.vec()).norm(), 1e-15);
  EXPECT_LT((h.log_cover(h.exp(xi)).vec() - xi.vec()).norm(), 1e-15);
}

TEST(GroupModel, TorusWrapsCoordinates) {
  const GroupModel t = GroupModel::torus(2);
  const GroupElement p = t.multiply(el({0.7, 0.25}), el({0.6, -0.5}));
  EXPECT_NEAR(p.coords[0], 0.3, 1e-15);
  EXPECT_NEAR(p.coords[1], 0.75, 1e-15);
  EXPECT_NEAR(t.distance(el({0.99, 0.0}), el({0.01, 0.0})), 0.02, 1e-12);
  const GroupModel cover = t.universal_cover();
  EXPECT_EQ(cover.kind(), GroupKind::UniversalTorus);
  EXPECT_NEAR(cover.multiply(el({0.7, 0.0}), el({0.6, 0.0})).coords[0], 1.3, 1e-15);
}

TEST(GroupModel, CentralExtensionWrapsCentre) {
  const GroupModel c = GroupModel::central_extension();
  const GroupElement g = c.multiply(el({0.9, 1.0, 0.0}), el({0.0, 0.0, 1.0}));
  EXPECT_NEAR(g.coords[0], 0.4, 1e-15);
  EXPECT_TRUE(GroupPath::straight(c, AlgebraVector{1.0, 0.0, 0.0}).is_loop());
  EXPECT_FALSE(GroupPath::straight(c, AlgebraVector{0.5, 0.0, 0.0}).is_loop());
  EXPECT_FALSE(GroupPath::straight(c, AlgebraVector{1.0, 1.0, 0.0}).is_loop());
}

TEST(GroupModel, AdjointMatchesConjugationDerivative) {
  for (const GroupModel& g : {GroupModel::heisenberg(), GroupModel::universal_torus(3)}) {
    auto rng = sample_rng(11, 2, 0);
    for (int i = 0; i < 20; ++i) {
      const GroupElement x{uniform_vector(rng, 3, -2, 2)};
      const AlgebraVector z(uniform_vector(rng, 3, -1, 1));
      const double h = 1e-6;
      auto conj = [&](double t) { return g.multiply(g.multiply(x, g.exp(z, t)), g.inverse(x)).coords; };
      const Eigen::VectorXd fd = (conj(h) - conj(-h)) / (2 * h);
      EXPECT_LT((fd - g.adjoint(x) * z.vec()).norm(), 1e-8);
    }
  }
}

TEST(GroupModel, BracketIsDerivativeOfAdjoint) {
  const GroupModel g = GroupModel::heisenberg();
  const AlgebraVector x{0.2, 1.5, -0.7}, y{-1.0, 0.4, 2.0};
  const double h = 1e-6;
  const Eigen::VectorXd fd =
      (g.adjoint(g.exp(x, h)) * y.vec() - g.adjoint(g.exp(x, -h)) * y.vec()) / (2 * h);
  EXPECT_LT((fd - g.bracket(x, y).vec()).norm(), 1e-8);
  EXPECT_NEAR(g.bracket(x, y)[0], 1.5 * 2.0 - (-0.7) * 0.4, 1e-15);
  EXPECT_LT(GroupModel::torus(2).bracket(AlgebraVector{1, 2}, AlgebraVector{3, 4}).norm(), 1e-15);
}

TEST(GroupModel, CoadjointIsTransposeOfInverseAdjoint) {
  const GroupModel g = GroupModel::heisenberg();
  const GroupElement x = el({0.3, -1.2, 0.8});
  const DualVector mu{1.0, 2.0, -3.0};
  const AlgebraVector xi{0.5, 0.25, -1.0};
  // <Ad*_{g^-1} mu, xi> = <mu, Ad_{g^-1} xi>
  EXPECT_NEAR(pairing(g.coadjoint_inverse(x, mu), xi), pairing(mu, AlgebraVector(g.adjoint(g.inverse(x)) * xi.vec())),
              1e-14);
}

TEST(GroupPath, RejectsBadDurations) {
  const GroupModel g = GroupModel::heisenberg();
  EXPECT_THROW(GroupPath(g, {{AlgebraVector{1, 0, 0}, 0.5}}), std::invalid_argument);
  EXPECT_THROW(GroupPath(g, {{AlgebraVector{1, 0, 0}, 1.5}, {AlgebraVector{1, 0, 0}, -0.5}}), std::invalid_argument);
  EXPECT_THROW(GroupPath(g, {{AlgebraVector{1, 0}, 1.0}}), std::invalid_argument);
}

TEST(GroupPath, EvaluatesPiecewiseExponential) {
  const GroupModel g = GroupModel::heisenberg();
  const AlgebraVector a{0.0, 1.0, 0.0}, b{0.0, 0.0, 1.0};
  const GroupPath p(g, {{2.0 * a, 0.5}, {2.0 * b, 0.5}});
  EXPECT_EQ(p.segment_index(0.25), 0u);
  EXPECT_EQ(p.segment_index(0.75), 1u);
  EXPECT_LT((p.evaluate(0.5).coords - Eigen::Vector3d(0, 1, 0)).norm(), 1e-15);
  // exp(a) exp(b) = (1/2, 1, 1)
  EXPECT_LT((p.endpoint().coords - Eigen::Vector3d(0.5, 1, 1)).norm(), 1e-15);
  EXPECT_LT((p.left_velocity(0.75).vec() - 2.0 * b.vec()).norm(), 1e-15);
}

TEST(GroupPath, ProductAndConcatenationEndpoints) {
  const GroupModel g = GroupModel::heisenberg();
  const GroupPath p(g, {{AlgebraVector{0.1, 1.0, 0.0}, 0.3}, {AlgebraVector{0.0, -0.5, 2.0}, 0.7}});
  const GroupPath q = GroupPath::straight(g, AlgebraVector{1.0, 0.3, -0.4});
  const GroupElement pq = g.multiply(p.endpoint(), q.endpoint());
  EXPECT_LT(g.distance(path_product(p, q).endpoint(), pq), 1e-12);
  EXPECT_LT(g.distance(concatenate(p, q).endpoint(), pq), 1e-12);
  const GroupPath pqt = path_product(p, q);
  for (double t : pqt.breakpoints()) {
    EXPECT_LT(g.distance(pqt.evaluate(t), g.multiply(p.evaluate(t), q.evaluate(t))), 1e-12) << t;
  }
}

TEST(GroupPath, LeftTranslateMovesEveryPoint) {
  const GroupModel g = GroupModel::heisenberg();
  const GroupPath p = GroupPath::straight(g, AlgebraVector{0.4, 1.0, -1.0});
  const GroupElement h = el({1.0, 2.0, 3.0});
  const GroupPath hp = left_translate(h, p);
  for (double t : {0.0, 0.5, 1.0}) EXPECT_LT(g.distance(hp.evaluate(t), g.multiply(h, p.evaluate(t))), 1e-12);
}

}  // namespace
}  // namespace momenta
