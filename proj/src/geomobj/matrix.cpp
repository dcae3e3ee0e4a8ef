/**
 * Copyright 2026 The Poisson Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "poisson/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "poisson/errors.hpp"
#include "poisson/simplify.hpp"

namespace poisson {

ExprMatrix ExprMatrix::identity(std::size_t n) {
  ExprMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Expr(1);
  return out;
}

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix shapes do not match");
  ExprMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero_constant() || b(k, j).is_zero_constant()) continue;
        terms.push_back(a(i, k) * b(k, j));
      }
      out(i, j) = add(std::move(terms));
    }
  }
  return out;
}

ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix shapes do not match");
  ExprMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
  return out;
}

ExprMatrix ExprMatrix::without_columns(const std::vector<std::size_t>& columns) const {
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (std::find(columns.begin(), columns.end(), j) == columns.end()) kept.push_back(j);
  }
  ExprMatrix out(rows_, kept.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < kept.size(); ++j) out(i, j) = (*this)(i, kept[j]);
  }
  return out;
}

ExprMatrix ExprMatrix::without_row_and_column(std::size_t row, std::size_t col) const {
  ExprMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == col) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

ExprMatrix ExprMatrix::simplified() const {
  ExprMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = simplify(entries_[i]);
  return out;
}

namespace {

// det of the submatrix made of rows [row, n) and the columns in `mask`.
class Laplace {
 public:
  explicit Laplace(const ExprMatrix& m) : m_(m) {}

  Expr minor(std::size_t row, std::uint64_t mask) {
    if (row == m_.rows()) return Expr(1);
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    std::vector<Expr> terms;
    int sign = 1;
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      if ((mask & (std::uint64_t{1} << j)) == 0) continue;
      const Expr& entry = m_(row, j);
      if (!entry.is_zero_constant()) {
        Expr rest = minor(row + 1, mask & ~(std::uint64_t{1} << j));
        if (!rest.is_zero_constant()) terms.push_back(sign > 0 ? entry * rest : -(entry * rest));
      }
      sign = -sign;
    }
    Expr value = add(std::move(terms));
    memo_.emplace(mask, value);
    return value;
  }

 private:
  const ExprMatrix& m_;
  // The row is implied by the number of columns left.
  std::unordered_map<std::uint64_t, Expr> memo_;
};

ExprMatrix to_matrix(int m, const std::map<IndexKey, Expr>& coefficients, int degree) {
  if (degree != 2) throw PreconditionError("expected a degree-2 field, got degree " + std::to_string(degree));
  ExprMatrix out(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (const auto& [key, value] : coefficients) {
    const auto i = static_cast<std::size_t>(key[0] - 1);
    const auto j = static_cast<std::size_t>(key[1] - 1);
    out(i, j) = value;
    out(j, i) = -value;
  }
  return out;
}

}  // namespace

Expr determinant(const ExprMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() > 63) throw PreconditionError("matrix too large for cofactor expansion");
  if (m.rows() == 0) return Expr(1);
  Laplace laplace(m);
  return simplify(laplace.minor(0, (std::uint64_t{1} << m.cols()) - 1));
}

ExprMatrix adjugate(const ExprMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  ExprMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = Expr(1);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Expr minor = determinant(m.without_row_and_column(i, j));
      out(j, i) = (i + j) % 2 == 0 ? minor : simplify(-minor);
    }
  }
  return out;
}

ExprMatrix bivector_to_matrix(const Multivector& p) {
  return to_matrix(p.dimension(), p.coefficients(), p.degree());
}

ExprMatrix bivector_to_matrix(const DiffForm& p) { return to_matrix(p.dimension(), p.coefficients(), p.degree()); }

}  // namespace poisson
