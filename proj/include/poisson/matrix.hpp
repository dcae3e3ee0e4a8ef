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

#ifndef POISSON_MATRIX_HPP
#define POISSON_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "poisson/alternating.hpp"
#include "poisson/expr.hpp"

namespace poisson {

// Dense matrix of expressions, 0-based, row-major.
class ExprMatrix {
 public:
  ExprMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static ExprMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Expr& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Expr& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);
  friend ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b);

  [[nodiscard]] ExprMatrix without_columns(const std::vector<std::size_t>& columns) const;
  [[nodiscard]] ExprMatrix without_row_and_column(std::size_t row, std::size_t col) const;
  [[nodiscard]] ExprMatrix simplified() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Expr> entries_;
};

// Cofactor expansion with memoized minors; division free. The result is
// simplified. Square matrices only.
Expr determinant(const ExprMatrix& m);
// Transposed cofactor matrix, so that m * adjugate(m) = det(m) * I.
ExprMatrix adjugate(const ExprMatrix& m);

// The antisymmetric m x m matrix with (i,j) = P^{ij} for i < j.
ExprMatrix bivector_to_matrix(const Multivector& p);
ExprMatrix bivector_to_matrix(const DiffForm& p);

}  // namespace poisson

#endif  // POISSON_MATRIX_HPP
