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

#include "momenta/exact_lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace momenta {

namespace {

mpz_class lcm_of_denominators(const ExactMatrix& m) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& a = m(i, j).rational_part();
      const auto& b = m(i, j).irrational_part();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_den_mpz_t());
    }
  return l;
}

// Integer matrix D * m for a rational matrix m (irrational parts must vanish).
IntMatrix clear_denominators(const ExactMatrix& m) {
  mpz_class d = lcm_of_denominators(m);
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_rational()) throw std::logic_error("clear_denominators on irrational entry");
      mpq_class v = m(i, j).rational_part() * d;
      v.canonicalize();
      out(i, j) = v.get_num();
    }
  return out;
}

// Field of the entries: a radicand, or zero when everything is rational.
std::optional<QuadraticField> field_of(const std::vector<ExactVector>& vs) {
  for (const auto& v : vs)
    for (const auto& x : v)
      if (!x.is_rational()) return QuadraticField(x.radicand());
  return std::nullopt;
}

ExactVector combine(const std::vector<ExactVector>& cols, const IntVector& coeffs, std::size_t dim) {
  ExactVector out(dim);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (coeffs[j] == 0) continue;
    ExactScalar c{mpq_class(coeffs[j])};
    for (std::size_t i = 0; i < dim; ++i) out[i] += c * cols[j][i];
  }
  return out;
}

}  // namespace

LatticeSubgroup LatticeSubgroup::generated_by(const IntMatrix& generators) {
  HermiteForm h = hermite_normal_form(generators);
  LatticeSubgroup l;
  l.dim_ = generators.rows();
  l.basis_ = IntMatrix(l.dim_, h.rank);
  for (std::size_t i = 0; i < l.dim_; ++i)
    for (std::size_t j = 0; j < h.rank; ++j) l.basis_(i, j) = h.hnf(i, j);
  l.pivot_rows_ = h.pivot_rows;
  return l;
}

LatticeSubgroup LatticeSubgroup::generated_by(const std::vector<IntVector>& generators, std::size_t dim) {
  return generated_by(IntMatrix::from_columns(generators, dim));
}

LatticeSubgroup LatticeSubgroup::full(std::size_t dim) { return generated_by(IntMatrix::identity(dim)); }

LatticeSubgroup LatticeSubgroup::zero(std::size_t dim) { return generated_by(IntMatrix(dim, 0)); }

std::optional<IntVector> LatticeSubgroup::coordinates(const IntVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("lattice membership: dimension mismatch");
  IntVector r = v;
  IntVector x(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::size_t p = pivot_rows_[j];
    if (r[p] % basis_(p, j) != 0) return std::nullopt;
    x[j] = r[p] / basis_(p, j);
    for (std::size_t i = p; i < dim_; ++i) r[i] -= x[j] * basis_(i, j);
  }
  for (const auto& e : r) {
    if (e != 0) return std::nullopt;
  }
  return x;
}

bool LatticeSubgroup::contains(const LatticeSubgroup& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("lattice inclusion: dimension mismatch");
  for (std::size_t j = 0; j < other.rank(); ++j) {
    if (!contains(other.basis_.column(j))) return false;
  }
  return true;
}

LatticeSubgroup lattice_sum(const LatticeSubgroup& a, const LatticeSubgroup& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("lattice sum: dimension mismatch");
  auto cols = a.basis().columns();
  for (auto& c : b.basis().columns()) cols.push_back(std::move(c));
  return LatticeSubgroup::generated_by(cols, a.ambient_dim());
}

LatticeSubgroup integer_kernel(const IntMatrix& m) {
  HermiteForm h = hermite_normal_form(m);
  std::vector<IntVector> kernel;
  for (std::size_t j = h.rank; j < m.cols(); ++j) kernel.push_back(h.transform.column(j));
  return LatticeSubgroup::generated_by(kernel, m.cols());
}

std::optional<mpz_class> AbelianInvariants::order() const {
  if (free_rank > 0) return std::nullopt;
  mpz_class o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "trivial";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " x ") << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

AbelianInvariants quotient_invariants(const LatticeSubgroup& big, const LatticeSubgroup& small) {
  if (!big.contains(small)) {
    throw std::invalid_argument("quotient_invariants: subgroup is not contained in the ambient lattice");
  }
  IntMatrix coords(big.rank(), small.rank());
  for (std::size_t j = 0; j < small.rank(); ++j) {
    IntVector x = *big.coordinates(small.basis().column(j));
    for (std::size_t i = 0; i < big.rank(); ++i) coords(i, j) = x[i];
  }
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  if (coords.rows() > 0 && coords.cols() > 0) {
    for (const auto& d : smith_normal_form(coords).invariant_factors()) {
      if (d == 0) continue;
      ++nonzero;
      if (d > 1) inv.torsion.push_back(d);
    }
  }
  inv.free_rank = big.rank() - nonzero;
  return inv;
}

GeneratedSubgroup::GeneratedSubgroup(std::vector<ExactVector> generators, std::size_t dim) : dim_(dim) {
  for (auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("generator length does not match ambient dimension");
    bool zero = true;
    for (const auto& x : g) zero = zero && x.is_zero();
    if (!zero) generators_.push_back(std::move(g));
  }
}

std::vector<ExactVector> subgroup_basis(const GeneratedSubgroup& h) {
  const std::size_t n = h.ambient_dim();
  const auto& gens = h.generators();
  if (gens.empty()) return {};
  auto field = field_of(gens);

  ExactMatrix lift(2 * n, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      lift(i, j) = ExactScalar(gens[j][i].rational_part());
      lift(n + i, j) = ExactScalar(gens[j][i].irrational_part());
    }
  const mpz_class denom = lcm_of_denominators(lift);
  HermiteForm hnf = hermite_normal_form(clear_denominators(lift));

  std::vector<ExactVector> basis;
  for (std::size_t j = 0; j < hnf.rank; ++j) {
    ExactVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class a(hnf.hnf(i, j), denom), b(hnf.hnf(n + i, j), denom);
      a.canonicalize();
      b.canonicalize();
      v[i] = field ? ExactScalar(a, b, *field) : ExactScalar(a);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

ClosedSubgroupDecomp is_closed(const GeneratedSubgroup& h) {
  ClosedSubgroupDecomp out;
  out.ambient_dim = h.ambient_dim();
  const std::size_t n = h.ambient_dim();
  std::vector<ExactVector> basis = subgroup_basis(h);
  const std::size_t m = basis.size();
  out.rational_rank = m;
  if (m == 0) return out;

  ExactMatrix a = ExactMatrix::from_columns(basis, n);
  out.real_rank = rank(a);
  out.closed = out.rational_rank == out.real_rank;
  if (out.closed) {
    out.lattice_basis = std::move(basis);
    return out;
  }

  // Dual description: characters of H are y with <y, h_i> in Z. The
  // coordinate image of the real span is (ker a)^perp; its rational points
  // are the z with z . c = 0 for the rational and irrational parts of
  // every kernel vector c. The dense directions are the a-image of the
  // rational complement of those points.
  std::vector<ExactVector> ker = kernel_basis(a);
  ExactMatrix constraints(2 * ker.size(), m);
  for (std::size_t k = 0; k < ker.size(); ++k)
    for (std::size_t j = 0; j < m; ++j) {
      constraints(2 * k, j) = ExactScalar(ker[k][j].rational_part());
      constraints(2 * k + 1, j) = ExactScalar(ker[k][j].irrational_part());
    }
  LatticeSubgroup rational_points = integer_kernel(clear_denominators(constraints));
  const std::size_t t = rational_points.rank();

  // Unimodular completion of the rational points: trailing transform
  // columns span the dense part, leading ones a lattice complement.
  HermiteForm completion = hermite_normal_form(rational_points.basis().transpose());
  if (completion.rank != t) throw std::logic_error("closure decomposition: rank defect");

  std::vector<ExactVector> dense;
  for (std::size_t j = t; j < m; ++j) dense.push_back(combine(basis, completion.transform.column(j), n));
  for (std::size_t j = 0; j < t; ++j)
    out.lattice_basis.push_back(combine(basis, completion.transform.column(j), n));

  // Keep an independent subset of the dense spanning set.
  if (!dense.empty()) {
    RowEchelon e = row_reduce(ExactMatrix::from_columns(dense, n));
    for (auto c : e.pivot_columns) out.subspace_basis.push_back(dense[c]);
  }
  if (out.subspace_basis.size() + out.lattice_basis.size() != out.real_rank) {
    throw std::logic_error("closure decomposition: dimension count mismatch");
  }
  return out;
}

std::vector<std::vector<double>> ClosedSubgroupDecomp::subspace_basis_real() const {
  std::vector<std::vector<double>> out;
  for (const auto& v : subspace_basis) out.push_back(to_double(v));
  return out;
}

std::vector<std::vector<double>> ClosedSubgroupDecomp::lattice_basis_real() const {
  std::vector<std::vector<double>> out;
  for (const auto& v : lattice_basis) out.push_back(to_double(v));
  return out;
}

LatticeSubgroup kernel_lattice(const ExactMatrix& m) {
  if (m.rows() == 0) return LatticeSubgroup::full(m.cols());
  return integer_kernel(clear_denominators(split_rational_rows(m)));
}

bool subgroup_is_hamiltonian(const LatticeSubgroup& gamma_n, const LatticeSubgroup& gamma_0) {
  return gamma_0.contains(gamma_n);
}

std::string CoverClassification::descriptor() const {
  return "T^" + std::to_string(torus_rank) + " × ℝ^" + std::to_string(line_rank);
}

std::string CoverClassification::simplified() const {
  if (torus_rank == 0 && line_rank == 0) return "point";
  if (torus_rank == 0) return "ℝ^" + std::to_string(line_rank);
  if (line_rank == 0) return "T^" + std::to_string(torus_rank);
  return descriptor();
}

CoverClassification classify_cover(const LatticeSubgroup& gamma_0, std::size_t dim) {
  if (gamma_0.ambient_dim() != dim) throw std::invalid_argument("classify_cover: dimension mismatch");
  CoverClassification c;
  c.torus_rank = gamma_0.rank();
  c.line_rank = dim - c.torus_rank;
  c.basis = gamma_0.basis();
  return c;
}

std::vector<double> to_double(const ExactVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

}  // namespace momenta
