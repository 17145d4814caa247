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

#include "momenta/checks.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include <spdlog/spdlog.h>

#include "momenta/noether.hpp"
#include "momenta/random.hpp"
#include "momenta/reduction.hpp"

namespace momenta {

namespace {

std::uint64_t stream_id(const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Sampler {
  std::uint64_t seed;
  std::uint64_t stream;
  std::mt19937_64 operator()(std::size_t i) const { return sample_rng(seed, stream, i); }
};

Sampler sampler(const CheckContext& c, const std::string& name) { return {c.seed, stream_id(name)}; }

GroupElement random_element(const GroupModel& model, std::mt19937_64& rng, double scale = 2.0) {
  return model.normalize({uniform_vector(rng, model.dim(), -scale, scale)});
}

AlgebraVector random_algebra(std::size_t n, std::mt19937_64& rng, double scale = 1.0) {
  return AlgebraVector(uniform_vector(rng, n, -scale, scale));
}

DualVector random_dual(std::size_t n, std::mt19937_64& rng, double scale = 1.0) {
  return DualVector(uniform_vector(rng, n, -scale, scale));
}

std::vector<long> random_loop(const Scenario& s, std::mt19937_64& rng) {
  std::vector<long> k(s.loop_rank());
  for (auto& e : k) e = uniform_int(rng, -3, 3);
  return k;
}

double rel(double err, double scale) { return err / std::max(1.0, scale); }

// lie_model

CheckReport check_associativity(const Scenario& s, const CheckContext& c) {
  const GroupModel& g = s.model->group();
  const auto rng_for = sampler(c, "group_associativity");
  constexpr std::size_t n = 1000;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = rng_for(i);
    const auto a = random_element(g, rng), b = random_element(g, rng), d = random_element(g, rng);
    worst = std::max(worst, g.distance(g.multiply(g.multiply(a, b), d), g.multiply(a, g.multiply(b, d))));
  }
  return CheckReport::make("group_associativity", worst, 1e-12, n);
}

CheckReport check_adjoint_homomorphism(const Scenario& s, const CheckContext& c) {
  const GroupModel& g = s.model->group();
  const auto rng_for = sampler(c, "adjoint_homomorphism");
  constexpr std::size_t n = 100;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = rng_for(i);
    const auto a = random_element(g, rng), b = random_element(g, rng);
    worst = std::max(worst, (g.adjoint(g.multiply(a, b)) - g.adjoint(a) * g.adjoint(b)).norm());
  }
  const auto n_dim = static_cast<Eigen::Index>(g.dim());
  worst = std::max(worst, (g.adjoint(g.identity()) - Eigen::MatrixXd::Identity(n_dim, n_dim)).norm());
  return CheckReport::make("adjoint_homomorphism", worst, 1e-10, n);
}

CheckReport check_adjoint_finite_difference(const Scenario& s, const CheckContext& c) {
  const GroupModel cover = s.model->group().universal_cover();
  const auto rng_for = sampler(c, "adjoint_finite_difference");
  constexpr double h = 1e-5;
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    const GroupElement g = random_element(cover, rng);
    const AlgebraVector zeta = random_algebra(cover.dim(), rng);
    auto conj = [&](double t) { return cover.multiply(cover.multiply(g, cover.exp(zeta, t)), cover.inverse(g)).coords; };
    const Eigen::VectorXd fd = (conj(h) - conj(-h)) / (2.0 * h);
    const Eigen::VectorXd exact = cover.adjoint(g) * zeta.vec();
    worst = std::max(worst, (fd - exact).norm() / std::max(exact.norm(), 1e-8));
  }
  return CheckReport::make("adjoint_finite_difference", worst, 1e-6, c.samples, "central differences, step 1e-5");
}

CheckReport check_jacobi(const Scenario& s, const CheckContext&) {
  const auto& k = s.model->group().structure_constants();
  const std::size_t n = s.dim();
  std::size_t violations = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l)
        if (k[l][i][j] != -k[l][j][i]) ++violations;
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t out = 0; out < n; ++out) {
          // [[e_i, e_j], e_m] + cyclic, component `out`
          mpq_class sum = 0;
          for (std::size_t p = 0; p < n; ++p) {
            sum += k[p][i][j] * k[out][p][m] + k[p][j][m] * k[out][p][i] + k[p][m][i] * k[out][p][j];
          }
          if (sum != 0) ++violations;
        }
    }
  return CheckReport::make("structure_constants_jacobi", static_cast<double>(violations), 0.0, n * n * n,
                           "exact rational arithmetic; error counts violations");
}

// symplectic_model

CheckReport check_cocycle_identity(const Scenario& s, const CheckContext&) {
  const bool ok = satisfies_cocycle_identity(s.model->group(), s.model->theta());
  return CheckReport::make("theta_cocycle_identity", ok ? 0.0 : 1.0, 0.0, 1, "exact arithmetic in Q(al)");
}

PhasePoint random_point(const MagneticCotangent& m, std::mt19937_64& rng) {
  return {random_element(m.group(), rng), random_dual(m.dim(), rng, 2.0)};
}

PhaseTangent random_tangent(const MagneticCotangent& m, std::mt19937_64& rng) {
  return {random_algebra(m.dim(), rng), random_dual(m.dim(), rng)};
}

CheckReport check_omega_bilinear(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "omega_antisymmetry");
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    const PhasePoint z = random_point(m, rng);
    const PhaseTangent a = random_tangent(m, rng), b = random_tangent(m, rng), d = random_tangent(m, rng);
    const double lambda = uniform(rng, -2.0, 2.0);
    const double wab = m.omega(z, a, b);
    worst = std::max(worst, rel(std::abs(wab + m.omega(z, b, a)), std::abs(wab)));
    worst = std::max(worst, rel(std::abs(m.omega(z, a, a)), 1.0));
    const PhaseTangent comb{a.xi + lambda * d.xi, a.nu + lambda * d.nu};
    const double lhs = m.omega(z, comb, b), rhs = wab + lambda * m.omega(z, d, b);
    worst = std::max(worst, rel(std::abs(lhs - rhs), std::abs(lhs)));
  }
  return CheckReport::make("omega_antisymmetry", worst, 1e-12, c.samples, "antisymmetry and linearity, relative");
}

CheckReport check_omega_nondegenerate(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "omega_nondegeneracy");
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    smallest = std::min(smallest, std::abs(m.omega_matrix(random_point(m, rng)).determinant()));
  }
  std::ostringstream notes;
  notes << "error is 1/min|det|; min|det| = " << smallest;
  return CheckReport::make("omega_nondegeneracy", 1.0 / smallest, 1e8, c.samples, notes.str());
}

CheckReport check_omega_closed(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const GroupModel cover = m.group().universal_cover();
  const auto rng_for = sampler(c, "omega_closedness");
  constexpr std::size_t n = 20;
  constexpr double h = 1e-5;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = rng_for(i);
    PhasePoint z = random_point(m, rng);
    z.g = cover.normalize(z.g);
    const PhaseTangent x = random_tangent(m, rng), y = random_tangent(m, rng), w = random_tangent(m, rng);
    // Derivative of z -> omega(z)(a, b) along the left-invariant field v.
    auto deriv = [&](const PhaseTangent& v, const PhaseTangent& a, const PhaseTangent& b) {
      auto at = [&](double t) {
        return m.omega({cover.multiply(z.g, cover.exp(v.xi, t)), z.mu + t * v.nu}, a, b);
      };
      return (at(h) - at(-h)) / (2.0 * h);
    };
    auto bracket = [&](const PhaseTangent& a, const PhaseTangent& b) {
      return PhaseTangent{cover.bracket(a.xi, b.xi), DualVector(m.dim())};
    };
    const double d = deriv(x, y, w) - deriv(y, x, w) + deriv(w, x, y) - m.omega(z, bracket(x, y), w) +
                     m.omega(z, bracket(x, w), y) - m.omega(z, bracket(y, w), x);
    worst = std::max(worst, std::abs(d));
  }
  return CheckReport::make("omega_closedness", worst, 1e-5, n, "finite-difference exterior derivative");
}

CheckReport check_omega_invariance(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "omega_invariance");
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    const PhasePoint z = random_point(m, rng);
    const GroupElement g0 = random_element(m.group(), rng);
    const PhaseTangent a = random_tangent(m, rng), b = random_tangent(m, rng);
    worst = std::max(worst, std::abs(m.omega(z, a, b) - m.omega(m.act(g0, z), a, b)));
  }
  return CheckReport::make("omega_invariance", worst, 1e-10, c.samples);
}

CheckReport check_chu_at_base(const Scenario& s, const CheckContext&) {
  const MagneticCotangent& m = *s.model;
  const PhasePoint z0{m.group().identity(), DualVector(m.dim())};
  const double err = (m.chu_map(z0) + m.sigma_matrix()).cwiseAbs().maxCoeff();
  return CheckReport::make("chu_map_at_base", err, 1e-14, 1, "Psi(z0) = -Sigma");
}

// momentum

CheckReport check_momentum_condition(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "momentum_condition");
  constexpr std::size_t n = 50;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = rng_for(i);
    const PhasePoint z{GroupElement{uniform_vector(rng, m.dim(), -1.5, 1.5)}, random_dual(m.dim(), rng, 2.0)};
    worst = std::max(worst, verify_momentum_condition(m, z, random_algebra(m.dim(), rng)));
  }
  return CheckReport::make("momentum_condition", worst, 1e-5, n,
                           "relative error of finite-difference dJ^xi against omega(xi_M, .)");
}

CheckReport check_closed_form_agreement(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "closed_form_agreement");
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    const PhasePath x = random_phase_path(m.group(), rng, 1 + i % 3);
    const DualVector quad = momentum_of_path(m, x);
    const DualVector closed = momentum_closed_form(m, x.base(), x.momentum_nodes().back());
    worst = std::max(worst, (quad - closed).vec().cwiseAbs().maxCoeff());
    const DualVector formula = m.group().universal_cover().coadjoint_inverse(x.base().lifted_endpoint(),
                                                                             x.momentum_nodes().back()) +
                               theta_closed_form(m.group(), m.theta(), x.base().lifted_endpoint());
    worst = std::max(worst, (quad - formula).vec().cwiseAbs().maxCoeff());
  }
  return CheckReport::make("closed_form_agreement", worst, 1e-9, c.samples,
                           "path quadrature vs Ad*_{g^-1} mu + Theta (quadrature and explicit formula)");
}

CheckReport check_transport_agreement(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "transport_agreement");
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    const PhasePath x = random_phase_path(m.group(), rng, 1 + i % 3);
    worst = std::max(worst, (momentum_of_path(m, x) - horizontal_transport(m, x)).vec().cwiseAbs().maxCoeff());
  }
  return CheckReport::make("transport_agreement", worst, 1e-7, c.samples, "quadrature J vs flat-connection transport");
}

CheckReport check_homotopy_invariance(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const GroupModel cover = m.group().universal_cover();
  const auto rng_for = sampler(c, "homotopy_invariance");
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    const PhasePath x = random_phase_path(m.group(), rng, 3);
    const PhasePoint end = x.lifted_endpoint();
    const PhasePath y = PhasePath::straight_to(m.group(), end.g, end.mu);
    worst = std::max(worst, (momentum_of_path(m, x) - momentum_of_path(m, y)).vec().cwiseAbs().maxCoeff());
  }
  return CheckReport::make("homotopy_invariance", worst, 1e-9, c.samples, "three-segment path vs straight path");
}

CheckReport check_sigma_equals_theta(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "sigma_equals_theta");
  constexpr std::size_t n = 50;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = rng_for(i);
    const GroupPath g = random_group_path(m.group(), rng, 1 + i % 3);
    worst = std::max(worst, (sigma_J(m, g) - theta_integral(m.group(), m.theta(), g)).vec().cwiseAbs().maxCoeff());
  }
  return CheckReport::make("sigma_equals_theta", worst, 1e-9, n);
}

CheckReport check_sigma_cocycle(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const GroupModel cover = m.group().universal_cover();
  const auto rng_for = sampler(c, "sigma_cocycle");
  constexpr std::size_t n = 50;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = rng_for(i);
    const GroupPath g1 = random_group_path(m.group(), rng, 2), g2 = random_group_path(m.group(), rng, 2);
    const DualVector lhs = sigma_J(m, path_product(g1, g2));
    const DualVector rhs = sigma_J(m, g1) + cover.coadjoint_inverse(g1.lifted_endpoint(), sigma_J(m, g2));
    worst = std::max(worst, (lhs - rhs).vec().cwiseAbs().maxCoeff());
  }
  return CheckReport::make("sigma_cocycle", worst, 1e-9, n, "sigma_J(g1 g2) = sigma_J(g1) + Ad*_{g1^-1} sigma_J(g2)");
}

CheckReport check_additivity(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "additivity");
  constexpr std::size_t n = 50;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = rng_for(i);
    const GroupPath gamma = s.loop(random_loop(s, rng));
    const PhasePath x = random_phase_path(m.group(), rng, 2);
    const PhasePath loop_path(gamma, std::vector<DualVector>(gamma.segments().size() + 1, DualVector(m.dim())));
    const DualVector lhs = momentum_of_path(m, deck_transform(gamma, x));
    const DualVector rhs = momentum_of_path(m, loop_path) + momentum_of_path(m, x);
    worst = std::max(worst, (lhs - rhs).vec().cwiseAbs().maxCoeff());
  }
  return CheckReport::make("additivity", worst, 1e-9, n, "J(gamma * x) = J(gamma) + J(x) for deck loops");
}

CheckReport check_loop_delta_mu(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const GroupModel cover = m.group().universal_cover();
  const auto rng_for = sampler(c, "loop_sigma_mu");
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    const GroupPath gamma = s.loop(random_loop(s, rng));
    const DualVector mu = random_dual(m.dim(), rng, 2.0);
    const DualVector delta = cover.coadjoint_inverse(gamma.lifted_endpoint(), mu) - mu;
    worst = std::max(worst, delta.vec().cwiseAbs().maxCoeff());
  }
  return CheckReport::make("loop_sigma_mu", worst, 0.0, c.samples, "delta mu vanishes on pi_1(G), so sigma_mu = sigma_J");
}

CheckReport check_sigma_isotropic(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "sigma_zero_isotropic");
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    worst = std::max(worst, sigma_J(m, random_group_path(m.group(), rng, 2)).vec().cwiseAbs().maxCoeff());
  }
  return CheckReport::make("sigma_zero_isotropic", worst, 1e-12, c.samples, "Sigma = 0 implies sigma_J = 0");
}

// cylinder_reduction

CheckReport check_projection(const Scenario& s, const CheckContext& c) {
  const auto rng_for = sampler(c, "projection_homomorphism");
  constexpr std::size_t n = 1000;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = rng_for(i);
    const DualVector a = random_dual(s.dim(), rng, 5.0), b = random_dual(s.dim(), rng, 5.0);
    const CylinderPoint pa = cylinder_project(a, s.cylinder), pb = cylinder_project(b, s.cylinder);
    worst = std::max(worst, cylinder_project(a + b, s.cylinder).distance(pa + pb));
    worst = std::max(worst, cylinder_project(pa.representative(), s.cylinder).distance(pa));
  }
  return CheckReport::make("projection_homomorphism", worst, 1e-10, n, "homomorphism and idempotent canonical form");
}

CheckReport check_k_path_independence(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const GroupModel cover = m.group().universal_cover();
  const auto rng_for = sampler(c, "k_path_independence");
  constexpr std::size_t n = 50;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = rng_for(i);
    const PhasePath y = random_phase_path(m.group(), rng, 3);
    const PhasePoint end = y.lifted_endpoint();
    const PhasePath x1 = PhasePath::straight_to(m.group(), end.g, end.mu);
    const PhasePath x2 = deck_transform(s.loop(random_loop(s, rng)), y);
    worst = std::max(worst, m.group().distance(x1.endpoint().g, x2.endpoint().g));
    worst = std::max(worst, cylinder_momentum(m, x1, s.cylinder).distance(cylinder_momentum(m, x2, s.cylinder)));
  }
  return CheckReport::make("k_path_independence", worst, c.tolerance, n,
                           "paths to the same point of M in different homotopy classes");
}

CheckReport check_equivariance(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "k_equivariance");
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    const GroupPath g = random_group_path(m.group(), rng, 1 + i % 2);
    const PhasePath x = random_phase_path(m.group(), rng, 2);
    const CylinderPoint lhs = cylinder_momentum(m, lifted_action_on_path(g, x), s.cylinder);
    const CylinderPoint rhs = affine_cylinder_action(m, g, cylinder_momentum(m, x, s.cylinder));
    worst = std::max(worst, lhs.distance(rhs));
  }
  return CheckReport::make("k_equivariance", worst, c.tolerance, c.samples, "K(g z) = Phi(g, K(z))");
}

CheckReport check_sigma_k_lift(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "sigma_k_lift_independence");
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    const GroupPath g = random_group_path(m.group(), rng, 2);
    const GroupPath other = concatenate(s.loop(random_loop(s, rng)), g);
    worst = std::max(worst, m.group().distance(other.endpoint(), g.endpoint()));
    worst = std::max(worst, sigma_K(m, g, s.cylinder).distance(sigma_K(m, other, s.cylinder)));
  }
  return CheckReport::make("sigma_k_lift_independence", worst, c.tolerance, c.samples);
}

CheckReport check_sigma_k_cocycle(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "sigma_k_cocycle");
  constexpr std::size_t n = 50;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = rng_for(i);
    const GroupPath g = random_group_path(m.group(), rng, 2), h = random_group_path(m.group(), rng, 2);
    const CylinderPoint lhs = sigma_K(m, path_product(g, h), s.cylinder);
    const CylinderPoint shk = sigma_K(m, h, s.cylinder);
    const DualVector moved =
        m.group().universal_cover().coadjoint_inverse(g.lifted_endpoint(), shk.representative());
    const CylinderPoint rhs = sigma_K(m, g, s.cylinder) + cylinder_project(moved, s.cylinder);
    worst = std::max(worst, lhs.distance(rhs));
  }
  return CheckReport::make("sigma_k_cocycle", worst, c.tolerance, n);
}

CheckReport check_infinitesimal(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "infinitesimal_generator");
  constexpr double h = 1e-4;
  double worst = 0.0;
  for (std::size_t i = 0; i < c.samples; ++i) {
    auto rng = rng_for(i);
    const AlgebraVector xi = random_algebra(m.dim(), rng);
    const DualVector mu = random_dual(m.dim(), rng, 2.0);
    const CylinderPoint p = cylinder_project(mu, s.cylinder);
    const CylinderPoint plus = affine_cylinder_action(m, GroupPath::straight(m.group(), h * xi), p);
    const CylinderPoint minus = affine_cylinder_action(m, GroupPath::straight(m.group(), -h * xi), p);
    const Eigen::VectorXd fd = plus.difference(minus) / (2.0 * h);
    const Eigen::MatrixXd psi = m.chu_map({m.group().identity(), mu});
    const Eigen::VectorXd exact = s.cylinder->tangent_projection(-(psi.transpose() * xi.vec()));
    worst = std::max(worst, (fd - exact).norm() / std::max(exact.norm(), 1e-8));
  }
  return CheckReport::make("infinitesimal_generator", worst, 1e-5, c.samples,
                           "d/dt Phi(exp t xi, [mu]) = -T pi_C(Psi(z)(xi, .)), relative");
}

CheckReport check_casimir(const Scenario& s, const CheckContext& c) {
  const Eigen::Vector2d sigma = s.model->theta().sigma_real();
  const auto rng_for = sampler(c, "casimir_invariance");
  double worst = 0.0;
  std::size_t count = 0;
  for (const DualVector& mu : s.mus()) {
    const double f0 = heisenberg_casimir(sigma, mu[0], {mu[1], mu[2]});
    for (const auto& sample : sample_orbit(s, mu, c.samples, rng_for(count++)()))
      worst = std::max(worst, std::abs(*sample.casimir - f0));
  }
  return CheckReport::make("casimir_invariance", worst, c.tolerance, count * c.samples);
}

CheckReport check_casimir_sign(const Scenario& s, const CheckContext& c) {
  const Eigen::Vector2d sigma = s.model->theta().sigma_real();
  const auto rng_for = sampler(c, "casimir_sign_convention");
  auto flipped = [&](const DualVector& p) { return 0.5 * p[0] * p[0] + (sigma[1] * p[1] - sigma[0] * p[2]); };
  double drift = 0.0;
  const DualVector mu = s.mus().front();
  for (const auto& sample : sample_orbit(s, mu, c.samples, rng_for(0)()))
    drift = std::max(drift, std::abs(flipped(sample.image) - flipped(mu)));
  std::ostringstream notes;
  notes << "the opposite sign drifts by " << drift << " on the same orbit; error is 1 if it would also pass";
  return CheckReport::make("casimir_sign_convention", drift > 1e-6 ? 0.0 : 1.0, 0.0, c.samples, notes.str());
}

CheckReport check_orbit_membership(const Scenario& s, const CheckContext& c) {
  const auto rng_for = sampler(c, "orbit_membership");
  double worst = 0.0;
  std::size_t k = 0;
  for (const DualVector& mu : s.mus()) worst = std::max(worst, orbit_descriptor(s, mu, rng_for(k++)(), 200).max_membership_error);
  return CheckReport::make("orbit_membership", worst, c.tolerance, 200 * k, "sampled affine-action images vs analytic orbit");
}

CheckReport check_deck_trivial(const Scenario& s, const CheckContext&) {
  std::size_t nontrivial = 0, count = 0;
  for (const DualVector& mu : s.mus()) {
    for (const auto& gn : {LatticeSubgroup::zero(s.loop_rank()), s.gamma0}) {
      if (!deck_group_of_reduced_cover(s, mu, gn).symplectomorphism()) ++nontrivial;
      ++count;
    }
  }
  return CheckReport::make("deck_group_trivial", static_cast<double>(nontrivial), 0.0, count,
                           "Gamma_mu / (Gamma_N + Gamma') for Gamma_N in {0, Gamma_0}; exact");
}

CheckReport check_noether(const Scenario& s, const CheckContext& c) {
  const MagneticCotangent& m = *s.model;
  const auto rng_for = sampler(c, "noether");
  constexpr std::size_t n = 3;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = rng_for(i);
    const PhasePath start = random_phase_path(m.group(), rng, 2);
    worst = std::max(worst, noether_check(m, s.cylinder, start, 1.0, 1e-3).max_drift);
  }
  return CheckReport::make("noether", worst, 1e-6, n, "K drift along the kinetic flow, T = 1, step 1e-3");
}

CheckReport check_fiber(const Scenario& s, const CheckContext& c) {
  double worst = 0.0;
  std::size_t count = 0;
  const std::size_t per_mu = std::min<std::size_t>(c.samples, 25);
  for (const DualVector& mu : s.mus()) {
    worst = std::max(worst, reduction_fiber_check(s, mu, per_mu, c.seed + count, c.tolerance).max_error);
    count += per_mu;
  }
  return CheckReport::make("reduction_fiber", worst, c.tolerance, count,
                           "deck loops shift J by their holonomy and fix the base point");
}

}  // namespace

GroupPath random_group_path(const GroupModel& model, std::mt19937_64& rng, std::size_t segments, double scale) {
  std::vector<double> w(segments);
  double total = 0.0;
  for (auto& x : w) total += (x = uniform(rng, 0.5, 1.5));
  std::vector<PathSegment> segs;
  double used = 0.0;
  for (std::size_t k = 0; k < segments; ++k) {
    const double dur = k + 1 == segments ? 1.0 - used : w[k] / total;
    used += dur;
    segs.push_back({random_algebra(model.dim(), rng, scale), dur});
  }
  return GroupPath(model, std::move(segs));
}

PhasePath random_phase_path(const GroupModel& model, std::mt19937_64& rng, std::size_t segments, double scale) {
  GroupPath g = random_group_path(model, rng, segments, scale);
  std::vector<DualVector> nodes{DualVector(model.dim())};
  for (std::size_t k = 0; k < segments; ++k) nodes.push_back(random_dual(model.dim(), rng));
  return PhasePath(std::move(g), std::move(nodes));
}

std::vector<CheckEntry> applicable_checks(const Scenario& s) {
  std::vector<CheckEntry> out{
      {"group_associativity", check_associativity},
      {"adjoint_homomorphism", check_adjoint_homomorphism},
      {"adjoint_finite_difference", check_adjoint_finite_difference},
      {"structure_constants_jacobi", check_jacobi},
      {"theta_cocycle_identity", check_cocycle_identity},
      {"omega_antisymmetry", check_omega_bilinear},
      {"omega_nondegeneracy", check_omega_nondegenerate},
      {"omega_closedness", check_omega_closed},
      {"omega_invariance", check_omega_invariance},
      {"chu_map_at_base", check_chu_at_base},
      {"momentum_condition", check_momentum_condition},
      {"closed_form_agreement", check_closed_form_agreement},
      {"transport_agreement", check_transport_agreement},
      {"homotopy_invariance", check_homotopy_invariance},
      {"sigma_equals_theta", check_sigma_equals_theta},
      {"sigma_cocycle", check_sigma_cocycle},
      {"additivity", check_additivity},
      {"loop_sigma_mu", check_loop_delta_mu},
  };
  if (s.model->theta().is_zero()) out.push_back({"sigma_zero_isotropic", check_sigma_isotropic});
  out.insert(out.end(), {
                            {"projection_homomorphism", check_projection},
                            {"k_path_independence", check_k_path_independence},
                            {"k_equivariance", check_equivariance},
                            {"sigma_k_lift_independence", check_sigma_k_lift},
                            {"sigma_k_cocycle", check_sigma_k_cocycle},
                            {"infinitesimal_generator", check_infinitesimal},
                        });
  if (!s.is_torus()) {
    out.push_back({"casimir_invariance", check_casimir});
    if (!s.model->theta().is_zero()) out.push_back({"casimir_sign_convention", check_casimir_sign});
  }
  out.push_back({"orbit_membership", check_orbit_membership});
  if (s.holonomy_closed()) out.push_back({"deck_group_trivial", check_deck_trivial});
  out.push_back({"noether", check_noether});
  out.push_back({"reduction_fiber", check_fiber});
  return out;
}

namespace {

CheckReport guarded(const CheckEntry& entry, const Scenario& s, const CheckContext& c) {
  spdlog::debug("check {} started", entry.name);
  try {
    CheckReport r = entry.run(s, c);
    spdlog::debug("check {} finished: max error {}", entry.name, r.max_error);
    return r;
  } catch (const std::exception& e) {
    spdlog::info("check {} failed with an exception: {}", entry.name, e.what());
    return CheckReport{entry.name, std::numeric_limits<double>::infinity(), 0.0, false, 0,
                       std::string("error: ") + e.what()};
  }
}

}  // namespace

CheckReport run_check(const Scenario& s, const std::string& name, const CheckContext& c) {
  for (const auto& entry : applicable_checks(s)) {
    if (entry.name == name) return guarded(entry, s, c);
  }
  throw std::invalid_argument("no applicable check named '" + name + "'");
}

std::vector<CheckReport> run_checks(const Scenario& s, const CheckContext& c, bool parallel) {
  const auto entries = applicable_checks(s);
  std::vector<CheckReport> out;
  if (!parallel) {
    for (const auto& entry : entries) out.push_back(guarded(entry, s, c));
    return out;
  }
  std::vector<std::future<CheckReport>> futures;
  for (const auto& entry : entries) {
    futures.push_back(std::async(std::launch::async, [&s, &c, entry] { return guarded(entry, s, c); }));
  }
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

std::vector<CheckReport> verify(const ScenarioConfig& config, const VerifyOptions& options) {
  const Scenario s = build_scenario(config, options.canonical_sign);
  CheckContext c;
  c.samples = config.verify.sample_count;
  c.seed = options.seed.value_or(config.verify.seed);
  c.tolerance = config.verify.tolerance;
  return run_checks(s, c, options.parallel);
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace momenta
