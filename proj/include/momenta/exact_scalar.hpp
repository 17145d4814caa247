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
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace momenta {

/// Real quadratic field Q(al) with al^2 = radicand.
///
/// The radicand must be a positive rational that is not the square of a
/// rational, so that al is a real irrational number and {1, al} is a
/// Q-basis of the field.
class QuadraticField {
 public:
  explicit QuadraticField(mpq_class radicand);

  const mpq_class& radicand() const { return radicand_; }
  double generator_value() const;

  friend bool operator==(const QuadraticField& a, const QuadraticField& b) {
    return a.radicand_ == b.radicand_;
  }

 private:
  mpq_class radicand_;
};

/// True when q is the square of a rational number.
bool is_rational_square(const mpq_class& q);

/// Exact element a + b*al of a real quadratic field.
///
/// A scalar with b == 0 is a plain rational and combines with elements of
/// any field. Mixing two genuinely irrational scalars from different fields
/// throws std::invalid_argument.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  ExactScalar(mpq_class a, mpq_class b, const QuadraticField& field);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& irrational_part() const { return b_; }
  /// Radicand of the attached field; zero for plain rationals.
  const mpq_class& radicand() const { return radicand_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  double to_double() const;

  ExactScalar inverse() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return (x - y).is_zero();
  }

  /// Text form "a/b", "a/b+c/d*al" or "c/d*al".
  std::string to_string() const;

 private:
  static mpq_class common_radicand(const ExactScalar& x, const ExactScalar& y);

  mpq_class a_{0};
  mpq_class b_{0};
  mpq_class radicand_{0};
};

/// Parses the text form of an exact scalar. Integers and fractions are
/// accepted for each coefficient; "al" denotes the field generator.
/// Throws std::invalid_argument on malformed input.
ExactScalar parse_exact_scalar(std::string_view text, const QuadraticField& field);

/// Parses a plain rational "p" or "p/q".
mpq_class parse_rational(std::string_view text);

using ExactVector = std::vector<ExactScalar>;

/// Dense row-major matrix over a quadratic field.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix from_columns(const std::vector<ExactVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ExactScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ExactScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactVector column(std::size_t j) const;
  ExactMatrix transpose() const;
  ExactVector apply(const ExactVector& x) const;

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

/// Result of Gauss-Jordan elimination: reduced row echelon form and the
/// pivot column of each nonzero row.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

RowEchelon row_reduce(ExactMatrix m);
std::size_t rank(const ExactMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);

/// Rational matrix with two rows per input row: the rational and the
/// irrational coefficient. For a rational vector x, m x = 0 iff split(m) x = 0.
ExactMatrix split_rational_rows(const ExactMatrix& m);

}  // namespace momenta
