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

#include "momenta/reduction.hpp"

#include <cmath>
#include <sstream>

#include "momenta/random.hpp"

namespace momenta {

namespace {

constexpr std::uint64_t kOrbitStream = 0x6f72626974ULL;
constexpr std::uint64_t kFiberStream = 0x6669626572ULL;

ExactMatrix append_column(const ExactMatrix& m, const ExactVector& c) {
  ExactMatrix out(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    out(i, m.cols()) = c[i];
  }
  return out;
}

Eigen::MatrixXd to_real(const std::vector<std::vector<double>>& cols, std::size_t n) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cols[j][i];
  return m;
}

Eigen::Vector2d nu_part(const DualVector& mu) { return {mu[1], mu[2]}; }

}  // namespace

LatticeSubgroup gamma_prime(const Scenario& scenario) { return LatticeSubgroup::full(scenario.loop_rank()); }

LatticeSubgroup gamma_mu(const Scenario& scenario, const DualVector& mu) {
  if (mu.size() != scenario.dim()) throw std::invalid_argument("gamma_mu: dimension mismatch");
  const std::size_t r = scenario.loop_rank();
  if (!scenario.is_torus()) return LatticeSubgroup::full(r);

  const ExactMatrix& theta = scenario.model->theta().matrix();
  const std::size_t base_rank = rank(theta);
  std::vector<IntVector> members;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<long> e(r, 0);
    e[i] = 1;
    if (rank(append_column(theta, scenario.holonomy_of(e))) != base_rank) {
      throw CapabilityError("gamma_mu: loop " + std::to_string(i) + " leaves image(theta)");
    }
    IntVector v(r, 0);
    v[i] = 1;
    members.push_back(std::move(v));
  }
  return LatticeSubgroup::generated_by(members, r);
}

std::string DeckGroup::to_string() const {
  return symplectomorphism() ? "symplectomorphism" : invariants.to_string();
}

DeckGroup deck_group(const LatticeSubgroup& gamma_mu, const LatticeSubgroup& gamma_prime,
                     const LatticeSubgroup& gamma_n) {
  return DeckGroup{quotient_invariants(gamma_mu, lattice_sum(gamma_n, gamma_prime))};
}

DeckGroup deck_group_of_reduced_cover(const Scenario& scenario, const DualVector& mu, const LatticeSubgroup& gamma_n) {
  if (!subgroup_is_hamiltonian(gamma_n, scenario.gamma0)) {
    throw std::invalid_argument("not a Hamiltonian cover: Gamma_N is not contained in Gamma_0");
  }
  if (!scenario.holonomy_closed()) {
    throw CapabilityError("non-closed holonomy: reduced spaces are not covered");
  }
  return deck_group(gamma_mu(scenario, mu), gamma_prime(scenario), gamma_n);
}

double heisenberg_casimir(const Eigen::Vector2d& sigma, double psi, const Eigen::Vector2d& nu) {
  return 0.5 * psi * psi - (sigma[1] * nu[0] - sigma[0] * nu[1]);
}

std::string to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::AffineSubspace: return "affineSubspace";
    case OrbitKind::CasimirLevelSet: return "casimirLevelSet";
    case OrbitKind::SampledCloud: return "sampledCloud";
  }
  return "unknown";
}

std::string OrbitDescriptor::to_string() const {
  std::ostringstream os;
  os.precision(12);
  switch (kind) {
    case OrbitKind::AffineSubspace:
      os << "affineSubspace dim=" << directions.size() << " through (";
      for (std::size_t i = 0; i < basepoint.size(); ++i) os << (i ? "," : "") << basepoint[i];
      os << ")";
      break;
    case OrbitKind::CasimirLevelSet:
      os << "casimirLevelSet f=" << casimir;
      break;
    case OrbitKind::SampledCloud:
      os << "sampledCloud points=" << points.size();
      break;
  }
  return os.str();
}

std::vector<OrbitSample> sample_orbit(const Scenario& scenario, const DualVector& mu, std::size_t count,
                                      std::uint64_t seed) {
  const MagneticCotangent& model = *scenario.model;
  const GroupModel cover = model.group().universal_cover();
  std::vector<OrbitSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = sample_rng(seed, kOrbitStream, i);
    GroupElement g{uniform_vector(rng, model.dim(), -2.0, 2.0)};
    const GroupPath lift = GroupPath::straight(model.group(), cover.log_cover(g));
    OrbitSample s{g, affine_action(model, lift, mu), std::nullopt};
    if (!scenario.is_torus()) {
      s.casimir = heisenberg_casimir(model.theta().sigma_real(), s.image[0], nu_part(s.image));
    }
    out.push_back(std::move(s));
  }
  return out;
}

double orbit_membership_error(const Scenario& scenario, const OrbitDescriptor& d, const DualVector& p) {
  switch (d.kind) {
    case OrbitKind::AffineSubspace: {
      const std::size_t n = d.basepoint.size();
      Eigen::VectorXd rel = p.vec() - Eigen::Map<const Eigen::VectorXd>(d.basepoint.data(), static_cast<Eigen::Index>(n));
      if (d.directions.empty()) return rel.norm();
      const Eigen::MatrixXd dirs = to_real(d.directions, n);
      const Eigen::VectorXd coef = dirs.colPivHouseholderQr().solve(rel);
      return (dirs * coef - rel).norm();
    }
    case OrbitKind::CasimirLevelSet:
      return std::abs(heisenberg_casimir(scenario.model->theta().sigma_real(), p[0], nu_part(p)) - d.casimir);
    case OrbitKind::SampledCloud:
      return 0.0;
  }
  return 0.0;
}

OrbitDescriptor orbit_descriptor(const Scenario& scenario, const DualVector& mu, std::uint64_t seed,
                                 std::size_t samples) {
  OrbitDescriptor d;
  d.basepoint.assign(mu.vec().data(), mu.vec().data() + mu.size());
  const CocycleTheta& theta = scenario.model->theta();
  if (scenario.is_torus()) {
    d.kind = OrbitKind::AffineSubspace;
    const RowEchelon ech = row_reduce(theta.matrix());
    for (std::size_t j : ech.pivot_columns) d.directions.push_back(to_double(theta.matrix().column(j)));
  } else if (!theta.is_zero()) {
    d.kind = OrbitKind::CasimirLevelSet;
    d.casimir = heisenberg_casimir(theta.sigma_real(), mu[0], nu_part(mu));
  } else {
    d.kind = OrbitKind::SampledCloud;
  }
  d.samples = samples;
  for (const auto& s : sample_orbit(scenario, mu, samples, seed)) {
    if (d.kind == OrbitKind::SampledCloud) {
      d.points.emplace_back(s.image.vec().data(), s.image.vec().data() + s.image.size());
    }
    d.max_membership_error = std::max(d.max_membership_error, orbit_membership_error(scenario, d, s.image));
  }
  return d;
}

CheckReport reduction_fiber_check(const Scenario& scenario, const DualVector& mu, std::size_t samples,
                                  std::uint64_t seed, double tolerance) {
  const MagneticCotangent& model = *scenario.model;
  const GroupModel& group = model.group();
  const GroupModel cover = group.universal_cover();
  const std::size_t r = scenario.loop_rank();
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(seed, kFiberStream, i);
    const GroupElement g{uniform_vector(rng, model.dim(), -1.5, 1.5)};
    const GroupPath lift = GroupPath::straight(group, cover.log_cover(g));
    // Solve Ad*_{g^-1} nu + Theta(g~) = mu for the body momentum nu.
    const DualVector theta_g = theta_integral(group, model.theta(), lift);
    const DualVector nu = cover.coadjoint_inverse(cover.inverse(g), mu - theta_g);
    const PhasePath x = PhasePath::with_linear_momentum(lift, nu);
    const DualVector j = momentum_of_path(model, x);
    if ((j - mu).norm() > 1e-6) {
      throw NumericalError("reduction_fiber_check: could not construct a sample with J = mu");
    }
    worst = std::max(worst, (j - mu).norm());

    std::vector<long> k(r);
    for (auto& e : k) e = uniform_int(rng, -3, 3);
    const PhasePath moved = deck_transform(scenario.loop(k), x);
    const DualVector shift = momentum_of_path(model, moved) - j;
    const std::vector<double> h = to_double(scenario.holonomy_of(k));
    const Eigen::Map<const Eigen::VectorXd> expected(h.data(), static_cast<Eigen::Index>(h.size()));
    worst = std::max(worst, (shift.vec() - expected).norm());
    worst = std::max(worst, group.distance(moved.endpoint().g, x.endpoint().g));
  }
  return CheckReport::make("reduction_fiber", worst, tolerance, samples,
                           "J(gamma * x) - J(x) equals the holonomy of gamma and the base point is unchanged");
}

}  // namespace momenta
