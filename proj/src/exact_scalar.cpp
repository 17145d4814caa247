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

#include "momenta/exact_scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace momenta {

namespace {

bool is_integer_square(const mpz_class& z) {
  if (sgn(z) < 0) return false;
  return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

bool is_decimal_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

bool is_rational_square(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return is_integer_square(c.get_num()) && is_integer_square(c.get_den());
}

QuadraticField::QuadraticField(mpq_class radicand) : radicand_(std::move(radicand)) {
  radicand_.canonicalize();
  if (sgn(radicand_) <= 0) {
    throw std::invalid_argument("field radicand must be positive, got " + radicand_.get_str());
  }
  if (is_rational_square(radicand_)) {
    throw std::invalid_argument("field radicand " + radicand_.get_str() +
                                " is a rational square; al would be rational");
  }
}

double QuadraticField::generator_value() const { return std::sqrt(radicand_.get_d()); }

ExactScalar::ExactScalar(mpq_class a, mpq_class b, const QuadraticField& field)
    : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0) radicand_ = field.radicand();
}

mpq_class ExactScalar::common_radicand(const ExactScalar& x, const ExactScalar& y) {
  if (x.is_rational()) return y.radicand_;
  if (y.is_rational()) return x.radicand_;
  if (x.radicand_ != y.radicand_) {
    throw std::invalid_argument("cannot combine elements of Q(sqrt(" + x.radicand_.get_str() +
                                ")) and Q(sqrt(" + y.radicand_.get_str() + "))");
  }
  return x.radicand_;
}

double ExactScalar::to_double() const {
  if (is_rational()) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(radicand_.get_d());
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in exact arithmetic");
  ExactScalar out;
  if (is_rational()) {
    out.a_ = 1 / a_;
    out.a_.canonicalize();
    return out;
  }
  // (a + b al)^-1 = (a - b al) / (a^2 - r b^2); the norm is nonzero since al is irrational.
  mpq_class norm = a_ * a_ - radicand_ * b_ * b_;
  out.a_ = a_ / norm;
  out.b_ = -b_ / norm;
  out.a_.canonicalize();
  out.b_.canonicalize();
  out.radicand_ = radicand_;
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  radicand_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  if (sgn(b_) == 0) radicand_ = 0;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  radicand_ = common_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (sgn(b_) == 0) radicand_ = 0;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  mpq_class r = common_radicand(*this, o);
  mpq_class a = a_ * o.a_ + r * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  radicand_ = sgn(b_) == 0 ? mpq_class(0) : r;
  return *this;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

std::string ExactScalar::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string b = b_.get_str() + "*al";
  if (sgn(a_) == 0) return b;
  if (sgn(b_) < 0) return a_.get_str() + b;
  return a_.get_str() + "+" + b;
}

mpq_class parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_decimal_digits(num) || !is_decimal_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

ExactScalar parse_exact_scalar(std::string_view text, const QuadraticField& field) {
  if (text.empty()) throw std::invalid_argument("empty exact scalar");
  if (text.find(' ') != std::string_view::npos) {
    throw std::invalid_argument("exact scalar '" + std::string(text) + "' must not contain spaces");
  }
  // A bare "al" has unit coefficient: "al", "-al", "1/2+al".
  std::string unit;
  if (text.size() >= 2 && text.substr(text.size() - 2) == "al" &&
      (text.size() == 2 || text[text.size() - 3] == '+' || text[text.size() - 3] == '-')) {
    unit = std::string(text.substr(0, text.size() - 2)) + "1*al";
    text = unit;
  }
  const std::string_view suffix = "*al";
  auto ends_with_al = [&](std::string_view s) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
  };
  if (!ends_with_al(text)) {
    if (text.find("al") != std::string_view::npos) {
      throw std::invalid_argument("malformed exact scalar '" + std::string(text) + "'");
    }
    return ExactScalar(parse_rational(text));
  }
  std::string_view head = text.substr(0, text.size() - suffix.size());
  // Split at the last sign that is not the leading one: "a/b+c/d", "a/b-c/d", "a/b+-c/d".
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '+' && head[i - 1] != '-') {
      split = i;
      break;
    }
  }
  mpq_class a = 0;
  std::string_view coeff = head;
  if (split != std::string_view::npos) {
    a = parse_rational(head.substr(0, split));
    coeff = head.substr(split);
    if (coeff.size() > 1 && coeff[0] == '+' && (coeff[1] == '-' || coeff[1] == '+')) coeff.remove_prefix(1);
  }
  mpq_class b = parse_rational(coeff);
  return ExactScalar(a, b, field);
}

ExactMatrix ExactMatrix::from_columns(const std::vector<ExactVector>& columns, std::size_t rows) {
  ExactMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

ExactVector ExactMatrix::column(std::size_t j) const {
  ExactVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactVector ExactMatrix::apply(const ExactVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  ExactVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
  for (std::size_t k = 0; k < x.data_.size(); ++k) {
    if (!(x.data_[k] == y.data_[k])) return false;
  }
  return true;
}

RowEchelon row_reduce(ExactMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    ExactScalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      ExactScalar f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix& m) { return row_reduce(m).rank(); }

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix split_rational_rows(const ExactMatrix& m) {
  ExactMatrix s(2 * m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      s(2 * i, j) = ExactScalar(m(i, j).rational_part());
      s(2 * i + 1, j) = ExactScalar(m(i, j).irrational_part());
    }
  }
  return s;
}

}  // namespace momenta
