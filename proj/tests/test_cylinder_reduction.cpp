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

#include "momenta/checks.hpp"
#include "momenta/noether.hpp"
#include "momenta/random.hpp"
#include "momenta/reduction.hpp"
#include "test_util.hpp"

namespace momenta {
namespace {

using testing::load_scenario;

TEST(Cylinder, HolonomyProjectsToZero) {
  const Scenario s = load_scenario("torus_invertible.json");
  EXPECT_EQ(s.cylinder->lattice_rank(), 2u);
  for (const DualVector& h : {DualVector{0.0, -1.0}, DualVector{1.0, 0.0}, DualVector{3.0, -7.0}}) {
    EXPECT_TRUE(cylinder_project(h, s.cylinder).is_zero()) << h.vec().transpose();
  }
  EXPECT_FALSE(cylinder_project(DualVector{0.5, 0.0}, s.cylinder).is_zero());
  EXPECT_NEAR(cylinder_project(DualVector{0.9, 0.0}, s.cylinder).distance(cylinder_project(DualVector{0.1, 0.0}, s.cylinder)),
              0.2, 1e-12);
}

TEST(Cylinder, DenseClosureKillsItsSubspace) {
  const Scenario s = load_scenario("torus_dense.json");
  ASSERT_FALSE(s.holonomy_closed());
  EXPECT_EQ(s.cylinder->subspace_dim(), 1u);
  EXPECT_TRUE(cylinder_project(DualVector{0.37, 0.0, 0.0}, s.cylinder).is_zero());
  EXPECT_TRUE(cylinder_project(DualVector{0.0, 1.0, std::sqrt(2.0)}, s.cylinder).is_zero());
  EXPECT_FALSE(cylinder_project(DualVector{0.0, 0.0, 0.5}, s.cylinder).is_zero());
}

TEST(Cylinder, TrivialGeometryIsIdentity) {
  const auto geom = CylinderGeometry::trivial(3);
  const DualVector mu{1.0, -2.0, 0.5};
  EXPECT_LT((cylinder_project(mu, geom).representative() - mu).norm(), 1e-15);
}

TEST(Reduction, DeckGroupsAreTrivialForCotangentBundles) {
  for (const char* name : {"torus_invertible.json", "torus_zero.json", "torus_partial_kernel.json", "heisenberg.json",
                           "central_extension_zero.json"}) {
    const Scenario s = load_scenario(name);
    for (const DualVector& mu : s.mus()) {
      EXPECT_EQ(gamma_mu(s, mu), LatticeSubgroup::full(s.loop_rank()));
      for (const LatticeSubgroup& gn : {LatticeSubgroup::zero(s.loop_rank()), s.gamma0}) {
        const DeckGroup d = deck_group_of_reduced_cover(s, mu, gn);
        EXPECT_TRUE(d.symplectomorphism()) << name;
        EXPECT_EQ(d.to_string(), "symplectomorphism");
      }
    }
  }
}

TEST(Reduction, SyntheticTripleHasDeckGroupZ2) {
  const DeckGroup d = deck_group(LatticeSubgroup::full(2), LatticeSubgroup::generated_by(IntMatrix{{2, 0}, {0, 1}}),
                                 LatticeSubgroup::zero(2));
  EXPECT_FALSE(d.symplectomorphism());
  EXPECT_EQ(d.to_string(), "Z/2");
}

TEST(Reduction, RejectsNonHamiltonianAndNonClosed) {
  const Scenario inv = load_scenario("torus_invertible.json");
  EXPECT_THROW(deck_group_of_reduced_cover(inv, inv.mus()[0], LatticeSubgroup::full(2)), std::invalid_argument);
  const Scenario dense = load_scenario("torus_dense.json");
  EXPECT_THROW(deck_group_of_reduced_cover(dense, dense.mus()[0], LatticeSubgroup::zero(3)), CapabilityError);
}

TEST(Reduction, CasimirIsConstantOnOrbitsAndOppositeSignIsNot) {
  const Scenario s = load_scenario("heisenberg.json");
  const Eigen::Vector2d sigma = s.model->theta().sigma_real();
  for (const DualVector& mu : s.mus()) {
    const double f0 = heisenberg_casimir(sigma, mu[0], {mu[1], mu[2]});
    double drift = 0.0, flipped_drift = 0.0;
    auto flipped = [&](const DualVector& p) { return 0.5 * p[0] * p[0] + (sigma[1] * p[1] - sigma[0] * p[2]); };
    for (const OrbitSample& o : sample_orbit(s, mu, 100, 17)) {
      drift = std::max(drift, std::abs(heisenberg_casimir(sigma, o.image[0], {o.image[1], o.image[2]}) - f0));
      flipped_drift = std::max(flipped_drift, std::abs(flipped(o.image) - flipped(mu)));
    }
    EXPECT_LE(drift, 1e-8);
    EXPECT_GT(flipped_drift, 1e-3);
  }
}

TEST(Reduction, OrbitDescriptorKinds) {
  EXPECT_EQ(orbit_descriptor(load_scenario("torus_invertible.json"), DualVector(2), 1).kind, OrbitKind::AffineSubspace);
  EXPECT_EQ(orbit_descriptor(load_scenario("heisenberg.json"), DualVector(3), 1).kind, OrbitKind::CasimirLevelSet);
  EXPECT_EQ(orbit_descriptor(load_scenario("central_extension_zero.json"), DualVector(3), 1).kind,
            OrbitKind::SampledCloud);
}

TEST(Reduction, ZeroCocycleTorusOrbitsArePoints) {
  const Scenario s = load_scenario("torus_zero.json");
  const DualVector mu = s.mus()[0];
  for (const OrbitSample& o : sample_orbit(s, mu, 50, 3)) EXPECT_LT((o.image - mu).norm(), 1e-15);
}

TEST(Reduction, InvertibleTorusOrbitsSpanTheDual) {
  const Scenario s = load_scenario("torus_invertible.json");
  const DualVector mu = s.mus()[1];
  const auto samples = sample_orbit(s, mu, 20, 5);
  Eigen::MatrixXd diffs(2, static_cast<Eigen::Index>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) diffs.col(static_cast<Eigen::Index>(i)) = (samples[i].image - mu).vec();
  EXPECT_EQ(diffs.fullPivLu().rank(), 2);
}

TEST(Reduction, FiberCheckPasses) {
  for (const char* name : {"torus_partial_kernel.json", "heisenberg.json"}) {
    const Scenario s = load_scenario(name);
    const CheckReport r = reduction_fiber_check(s, s.mus().back(), 20, 4, 1e-8);
    EXPECT_TRUE(r.passed) << name << " " << r.max_error;
  }
}

TEST(Noether, CylinderMomentumIsConservedAlongKineticFlow) {
  for (const char* name : {"torus_invertible.json", "heisenberg.json"}) {
    const Scenario s = load_scenario(name);
    auto rng = sample_rng(8, 8, 0);
    const PhasePath start = random_phase_path(s.model->group(), rng, 2);
    const NoetherResult r = noether_check(*s.model, s.cylinder, start, 1.0);
    EXPECT_LE(r.max_drift, 1e-6) << name;
    EXPECT_EQ(r.steps, 1000u);
  }
}

TEST(Noether, KineticFieldSolvesHamiltonEquation) {
  const Scenario s = load_scenario("heisenberg.json");
  const PhasePoint z{GroupElement{Eigen::Vector3d(0.1, 0.2, 0.3)}, DualVector{1.0, -1.0, 0.5}};
  const PhaseTangent x = kinetic_vector_field(*s.model, z);
  auto rng = sample_rng(2, 2, 0);
  for (int i = 0; i < 5; ++i) {
    const PhaseTangent v{AlgebraVector(uniform_vector(rng, 3, -1, 1)), DualVector(uniform_vector(rng, 3, -1, 1))};
    EXPECT_NEAR(s.model->omega(z, x, v), pairing(z.mu, AlgebraVector(v.nu.vec())), 1e-12);
  }
}

}  // namespace
}  // namespace momenta
