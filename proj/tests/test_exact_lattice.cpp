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

#include "momenta/exact_lattice.hpp"
#include "momenta/integer_matrix.hpp"
#include "test_util.hpp"

namespace momenta {
namespace {

using testing::rational_matrix;

const QuadraticField kQ2{2};

TEST(ExactScalar, ParsesRationalAndIrrationalParts) {
  const ExactScalar x = parse_exact_scalar("1/2+1/3*al", kQ2);
  EXPECT_EQ(x.rational_part(), mpq_class(1, 2));
  EXPECT_EQ(x.irrational_part(), mpq_class(1, 3));
  EXPECT_EQ(parse_exact_scalar("-3/4", kQ2), ExactScalar(mpq_class(-3, 4)));
  EXPECT_EQ(parse_exact_scalar("al", kQ2).irrational_part(), 1);
  EXPECT_EQ(parse_exact_scalar("-al", kQ2).irrational_part(), -1);
  EXPECT_EQ(parse_exact_scalar("2-5*al", kQ2).irrational_part(), -5);
}

TEST(ExactScalar, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "x", "1 + al", "2al", "1/2+1/3*be", "al*2", "--1"}) {
    EXPECT_THROW(parse_exact_scalar(bad, kQ2), std::invalid_argument) << bad;
  }
}

TEST(ExactScalar, RejectsSquareOrNonPositiveRadicand) {
  EXPECT_THROW(QuadraticField(4), std::invalid_argument);
  EXPECT_THROW(QuadraticField(mpq_class(9, 16)), std::invalid_argument);
  EXPECT_THROW(QuadraticField(-2), std::invalid_argument);
  EXPECT_NO_THROW(QuadraticField(mpq_class(3, 4)));
}

TEST(ExactScalar, FieldArithmeticMatchesDoubles) {
  const ExactScalar al(0, 1, kQ2);
  EXPECT_EQ(al * al, ExactScalar(2));
  EXPECT_EQ((ExactScalar(1) + al) * (ExactScalar(1) - al), ExactScalar(-1));
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      const ExactScalar x(mpq_class(a, 2), mpq_class(b, 3), kQ2);
      const double xd = a / 2.0 + b / 3.0 * std::sqrt(2.0);
      EXPECT_NEAR(x.to_double(), xd, 1e-15);
      if (x.is_zero()) continue;
      EXPECT_EQ(x * x.inverse(), ExactScalar(1));
      EXPECT_NEAR((x * x).to_double(), xd * xd, 1e-12);
    }
  }
}

TEST(ExactScalar, RankSeesIrrationalDependence) {
  const ExactScalar al(0, 1, kQ2);
  ExactMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = al;
  m(1, 0) = al;
  m(1, 1) = 2;
  EXPECT_EQ(rank(m), 1u);
  m(1, 1) = 3;
  EXPECT_EQ(rank(m), 2u);
}

TEST(IntegerMatrix, HermiteFormIsUnimodularTransform) {
  const IntMatrix m{{4, 6, 2}, {2, 3, 8}, {0, 5, 7}};
  const HermiteForm h = hermite_normal_form(m);
  EXPECT_EQ(m * h.transform, h.hnf);
  EXPECT_EQ(abs(determinant(h.transform)), 1);
  EXPECT_EQ(h.rank, 3u);
  for (std::size_t j = 0; j < h.rank; ++j) EXPECT_GT(h.hnf(h.pivot_rows[j], j), 0);
}

TEST(IntegerMatrix, SmithFormOfDiagTwoThree) {
  const IntMatrix m{{2, 0}, {0, 3}};
  const SmithForm s = smith_normal_form(m);
  EXPECT_EQ(s.diagonal, (IntMatrix{{1, 0}, {0, 6}}));
  EXPECT_EQ(s.left * m * s.right, s.diagonal);
}

TEST(IntegerMatrix, SmithInvariantsMultiplyToDeterminant) {
  const std::vector<IntMatrix> cases{
      {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, {{1, 2}, {3, 4}}, {{6, 0, 0}, {0, 10, 0}, {0, 0, 15}}};
  for (const IntMatrix& m : cases) {
    const SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.left * m * s.right, s.diagonal);
    EXPECT_EQ(abs(determinant(s.left)), 1);
    EXPECT_EQ(abs(determinant(s.right)), 1);
    const auto f = s.invariant_factors();
    mpz_class product = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      product *= f[i];
      if (i > 0 && f[i - 1] != 0) {
        EXPECT_EQ(f[i] % f[i - 1], 0);
      }
    }
    EXPECT_EQ(product, abs(determinant(m)));
  }
}

TEST(Lattice, KernelMatchesBoxEnumeration) {
  const ExactMatrix theta = rational_matrix({{0, 3, -2}, {-3, 0, 1}, {2, -1, 0}});
  const LatticeSubgroup k = kernel_lattice(theta);
  ASSERT_EQ(k.rank(), 1u);
  for (long a = -5; a <= 5; ++a)
    for (long b = -5; b <= 5; ++b)
      for (long c = -5; c <= 5; ++c) {
        const bool in_kernel = 3 * b - 2 * c == 0 && -3 * a + c == 0 && 2 * a - b == 0;
        EXPECT_EQ(k.contains(IntVector{a, b, c}), in_kernel) << a << " " << b << " " << c;
      }
}

TEST(Lattice, QuotientOfSyntheticTripleIsZ2) {
  const LatticeSubgroup big = LatticeSubgroup::full(2);
  const LatticeSubgroup small = LatticeSubgroup::generated_by(IntMatrix{{2, 0}, {0, 1}});
  const AbelianInvariants q = quotient_invariants(big, lattice_sum(LatticeSubgroup::zero(2), small));
  EXPECT_EQ(q.free_rank, 0u);
  ASSERT_EQ(q.torsion.size(), 1u);
  EXPECT_EQ(q.torsion[0], 2);
  EXPECT_EQ(q.to_string(), "Z/2");
  EXPECT_TRUE(quotient_invariants(big, big).is_trivial());
  EXPECT_EQ(quotient_invariants(big, LatticeSubgroup::zero(2)).free_rank, 2u);
}

TEST(Lattice, CoverClassification) {
  const LatticeSubgroup k = LatticeSubgroup::generated_by(IntMatrix{{1}, {2}, {3}});
  const CoverClassification c = classify_cover(k, 3);
  EXPECT_EQ(c.descriptor(), "T^1 × ℝ^2");
  EXPECT_EQ(c.simplified(), "T^1 × ℝ^2");
  EXPECT_EQ(classify_cover(LatticeSubgroup::zero(2), 2).simplified(), "ℝ^2");
  EXPECT_EQ(classify_cover(LatticeSubgroup::full(2), 2).simplified(), "T^2");
  EXPECT_TRUE(subgroup_is_hamiltonian(LatticeSubgroup::zero(3), k));
  EXPECT_FALSE(subgroup_is_hamiltonian(LatticeSubgroup::full(3), k));
}

std::vector<ExactVector> columns(const ExactMatrix& m) {
  std::vector<ExactVector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

// Smallest nonzero |sum k_j h_j| over |k_j| <= bound.
double smallest_combination(const std::vector<std::vector<double>>& h, long bound) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = h.front().size();
  std::vector<long> k(h.size(), -bound);
  while (true) {
    bool nonzero = false;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < h.size(); ++j) s += static_cast<double>(k[j]) * h[j][i];
      norm2 += s * s;
    }
    for (long x : k) nonzero = nonzero || x != 0;
    if (nonzero) best = std::min(best, std::sqrt(norm2));
    std::size_t j = 0;
    while (j < k.size() && k[j] == bound) k[j++] = -bound;
    if (j == k.size()) break;
    ++k[j];
  }
  return best;
}

TEST(Lattice, ClosedHolonomyIsDiscrete) {
  const ExactMatrix theta = rational_matrix({{0, 1}, {-1, 0}});
  const ClosedSubgroupDecomp d = is_closed(GeneratedSubgroup(columns(theta), 2));
  EXPECT_TRUE(d.closed);
  EXPECT_EQ(d.rational_rank, 2u);
  EXPECT_EQ(d.real_rank, 2u);
  std::vector<std::vector<double>> h;
  for (const auto& c : columns(theta)) h.push_back(to_double(c));
  EXPECT_GE(smallest_combination(h, 20), 1.0 - 1e-12);
}

TEST(Lattice, DenseHolonomyIsNotClosed) {
  const ExactScalar al(0, 1, kQ2);
  ExactMatrix theta(3, 3);
  theta(0, 1) = 1;
  theta(1, 0) = -1;
  theta(0, 2) = al;
  theta(2, 0) = -al;
  const ClosedSubgroupDecomp d = is_closed(GeneratedSubgroup(columns(theta), 3));
  EXPECT_FALSE(d.closed);
  EXPECT_EQ(d.rational_rank, 3u);
  EXPECT_EQ(d.real_rank, 2u);
  EXPECT_EQ(d.subspace_basis.size(), 1u);
  std::vector<std::vector<double>> h;
  for (const auto& c : columns(theta)) h.push_back(to_double(c));
  EXPECT_LT(smallest_combination(h, 50), 0.02);
}

}  // namespace
}  // namespace momenta
