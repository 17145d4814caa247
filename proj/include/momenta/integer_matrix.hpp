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
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace momenta {

using IntVector = std::vector<mpz_class>;

/// Dense row-major big-integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  std::vector<IntVector> columns() const;
  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Exact determinant of a square matrix (fraction-free elimination).
mpz_class determinant(const IntMatrix& m);

/// Column Hermite normal form: hnf = input * transform with transform
/// unimodular. Nonzero columns come first; each has a strictly lower pivot
/// row than the previous one, a positive pivot, zeros above the pivot, and
/// entries of earlier columns in that pivot row reduced into [0, pivot).
struct HermiteForm {
  IntMatrix hnf;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

/// Smith normal form: diagonal = left * input * right, left and right
/// unimodular, diagonal entries nonnegative with d_i | d_{i+1}.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::vector<mpz_class> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace momenta
