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

#include "momenta/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace momenta {

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// col_dst -= q * col_src
void axpy_column(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

// row_dst -= q * row_src
void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void negate_column(IntMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged integer matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("integer matrix product dimension mismatch");
  IntMatrix p(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += x(i, k) * y(k, j);
    }
  return p;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

mpz_class determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

HermiteForm hermite_normal_form(const IntMatrix& input) {
  HermiteForm out;
  IntMatrix h = input;
  IntMatrix u = IntMatrix::identity(input.cols());
  const std::size_t k = h.cols();
  std::size_t c = 0;
  for (std::size_t i = 0; i < h.rows() && c < k; ++i) {
    // Euclid across columns c..k-1 until only column c is nonzero in row i.
    while (true) {
      std::size_t best = k;
      for (std::size_t j = c; j < k; ++j) {
        if (h(i, j) == 0) continue;
        if (best == k || abs(h(i, j)) < abs(h(i, best))) best = j;
      }
      if (best == k) break;
      swap_columns(h, c, best);
      swap_columns(u, c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < k; ++j) {
        if (h(i, j) == 0) continue;
        mpz_class q = floor_div(h(i, j), h(i, c));
        axpy_column(h, j, c, q);
        axpy_column(u, j, c, q);
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(i, c) == 0) continue;
    if (h(i, c) < 0) {
      negate_column(h, c);
      negate_column(u, c);
    }
    for (std::size_t l = 0; l < c; ++l) {
      mpz_class q = floor_div(h(i, l), h(i, c));
      axpy_column(h, l, c, q);
      axpy_column(u, l, c, q);
    }
    out.pivot_rows.push_back(i);
    ++c;
  }
  out.rank = c;
  out.hnf = std::move(h);
  out.transform = std::move(u);
  return out;
}

std::vector<mpz_class> SmithForm::invariant_factors() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < diagonal.rows() && i < diagonal.cols(); ++i) d.push_back(diagonal(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  IntMatrix left = IntMatrix::identity(a.rows());
  IntMatrix right = IntMatrix::identity(a.cols());
  const std::size_t m = a.rows(), n = a.cols();

  for (std::size_t t = 0; t < m && t < n; ++t) {
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a(i, j) == 0) continue;
          if (bi == m || abs(a(i, j)) < abs(a(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) break;
      swap_rows(a, t, bi);
      swap_rows(left, t, bi);
      swap_columns(a, t, bj);
      swap_columns(right, t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        mpz_class q = floor_div(a(i, t), a(t, t));
        axpy_row(a, i, t, q);
        axpy_row(left, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        mpz_class q = floor_div(a(t, j), a(t, t));
        axpy_column(a, j, t, q);
        axpy_column(right, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a row with a non-multiple entry into row t.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
        }
      if (bad == m) break;
      axpy_row(a, t, bad, mpz_class(-1));
      axpy_row(left, t, bad, mpz_class(-1));
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(left, t);
    }
  }
  return SmithForm{std::move(a), std::move(left), std::move(right)};
}

}  // namespace momenta
