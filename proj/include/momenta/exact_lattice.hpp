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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "momenta/exact_scalar.hpp"
#include "momenta/integer_matrix.hpp"

namespace momenta {

/// Subgroup of Z^d, stored as the nonzero columns of its column HNF.
/// Two lattices are equal iff their stored bases are equal.
class LatticeSubgroup {
 public:
  LatticeSubgroup() = default;

  /// Subgroup generated by the columns of `generators` (d rows).
  static LatticeSubgroup generated_by(const IntMatrix& generators);
  static LatticeSubgroup generated_by(const std::vector<IntVector>& generators, std::size_t dim);
  static LatticeSubgroup full(std::size_t dim);
  static LatticeSubgroup zero(std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  /// Integer coordinates of v in the stored basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
  bool contains(const LatticeSubgroup& other) const;

  friend bool operator==(const LatticeSubgroup& a, const LatticeSubgroup& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
};

LatticeSubgroup lattice_sum(const LatticeSubgroup& a, const LatticeSubgroup& b);

/// Saturated integer kernel {x in Z^cols : m x = 0}.
LatticeSubgroup integer_kernel(const IntMatrix& m);

/// Finitely generated abelian group Z^freeRank x Z/t_1 x ... with t_i | t_{i+1}.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Finite order, or nullopt when free_rank > 0.
  std::optional<mpz_class> order() const;
  /// "trivial", "Z/2", "Z^2 x Z/6", ...
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

/// Invariants of big / small. Throws std::invalid_argument unless small <= big.
AbelianInvariants quotient_invariants(const LatticeSubgroup& big, const LatticeSubgroup& small);

/// Finitely generated subgroup of R^n with generators in a quadratic field.
/// Zero generators are dropped on construction.
class GeneratedSubgroup {
 public:
  GeneratedSubgroup(std::vector<ExactVector> generators, std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<ExactVector>& generators() const { return generators_; }

 private:
  std::size_t dim_;
  std::vector<ExactVector> generators_;
};

/// Closure of a subgroup H of R^n written as V + Z-span(lattice_basis),
/// with V a vector subspace and the lattice vectors independent modulo V.
/// When `closed` is true, V = {0} and the lattice basis is a Z-basis of H.
struct ClosedSubgroupDecomp {
  std::size_t ambient_dim = 0;
  std::vector<ExactVector> subspace_basis;
  std::vector<ExactVector> lattice_basis;
  bool closed = true;
  /// Rank of H as an abelian group and dimension of its real span.
  std::size_t rational_rank = 0;
  std::size_t real_rank = 0;

  std::vector<std::vector<double>> subspace_basis_real() const;
  std::vector<std::vector<double>> lattice_basis_real() const;
};

/// Closedness decision and closure decomposition. H is discrete iff its
/// rank as a group equals the dimension of its real span.
ClosedSubgroupDecomp is_closed(const GeneratedSubgroup& h);

/// Z-basis of H: HNF of a common-denominator lift of the generators to
/// Q^{2n} via the basis {1, al}, mapped back to the field.
std::vector<ExactVector> subgroup_basis(const GeneratedSubgroup& h);

/// {x in Z^k : m x = 0} for an exact n x k matrix m (the rational kernel
/// intersected with Z^k).
LatticeSubgroup kernel_lattice(const ExactMatrix& m);

/// A cover is Hamiltonian iff its subgroup lies inside the kernel lattice.
bool subgroup_is_hamiltonian(const LatticeSubgroup& gamma_n, const LatticeSubgroup& gamma_0);

/// Shape T^r x R^{d-r} of R^d / gamma_0.
struct CoverClassification {
  std::size_t torus_rank = 0;
  std::size_t line_rank = 0;
  IntMatrix basis;
  /// Always of the form "T^r × ℝ^s".
  std::string descriptor() const;
  /// Drops trivial factors: "ℝ^2", "T^2", "T^1 × ℝ^2".
  std::string simplified() const;
};

CoverClassification classify_cover(const LatticeSubgroup& gamma_0, std::size_t dim);

/// Converts an exact vector to doubles.
std::vector<double> to_double(const ExactVector& v);

}  // namespace momenta
