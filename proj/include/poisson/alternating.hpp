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

#ifndef POISSON_ALTERNATING_HPP
#define POISSON_ALTERNATING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "poisson/chart.hpp"
#include "poisson/expr.hpp"

namespace poisson {

// 1-based coordinate indices; strictly increasing inside a stored field.
using IndexKey = std::vector<int>;

enum class Variance : std::uint8_t { kContravariant, kCovariant };

// A multivector field (contravariant) or differential form (covariant) of a
// fixed degree on a chart, stored as a map from strictly increasing index
// keys to coefficients. Zero coefficients are never stored: the zero field of
// any degree is the empty map. Degree 0 uses the single empty key.
template <Variance V>
class AlternatingField {
 public:
  using Coefficients = std::map<IndexKey, Expr>;

  // The zero field.
  AlternatingField(Chart chart, int degree);
  // Validates every key, simplifies every coefficient and drops the zeros.
  AlternatingField(Chart chart, int degree, Coefficients coefficients);

  // Coefficients that are already simplified and known to be nonzero.
  struct Normalized {};
  AlternatingField(Normalized, Chart chart, int degree, Coefficients coefficients);

  static AlternatingField scalar(Chart chart, const Expr& value);

  [[nodiscard]] const Chart& chart() const { return chart_; }
  [[nodiscard]] int dimension() const { return chart_.dimension(); }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const Coefficients& coefficients() const { return coefficients_; }
  [[nodiscard]] bool is_zero() const { return coefficients_.empty(); }
  // Zero when the key is absent. The key must be strictly increasing.
  [[nodiscard]] Expr coefficient(const IndexKey& key) const;
  // Any ordering of distinct indices; the permutation sign is applied.
  [[nodiscard]] Expr signed_coefficient(const IndexKey& key) const;

  AlternatingField operator-() const;
  friend AlternatingField operator+(const AlternatingField& a, const AlternatingField& b) {
    return combine(a, b, Expr(1));
  }
  friend AlternatingField operator-(const AlternatingField& a, const AlternatingField& b) {
    return combine(a, b, Expr(-1));
  }
  friend AlternatingField operator*(const Expr& f, const AlternatingField& a) { return a.scaled(f); }
  [[nodiscard]] AlternatingField scaled(const Expr& f) const;

  // Structural equality of charts, degrees and simplified coefficients.
  friend bool operator==(const AlternatingField& a, const AlternatingField& b) {
    return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.coefficients_ == b.coefficients_;
  }

 private:
  static AlternatingField combine(const AlternatingField& a, const AlternatingField& b, const Expr& sign);

  Chart chart_;
  int degree_;
  Coefficients coefficients_;
};

using Multivector = AlternatingField<Variance::kContravariant>;
using DiffForm = AlternatingField<Variance::kCovariant>;

// Sorts `key` in place and returns the sign of the sorting permutation, or 0
// when an index repeats.
int sort_with_sign(IndexKey& key);

// All strictly increasing keys of length `degree` over 1..m, lexicographic.
std::vector<IndexKey> increasing_keys(int m, int degree);

// Builds a field from keys in any order and coefficient text. Unordered keys
// are sorted with the permutation sign; entries landing on the same key are
// summed. Throws SchemaError on a repeated index, an index outside 1..m, a
// key whose length differs from the degree or a degree outside 0..m.
template <Variance V>
AlternatingField<V> canonicalize(const std::vector<std::pair<IndexKey, std::string>>& raw, int degree,
                                 const ChartContext& ctx);
template <Variance V>
AlternatingField<V> canonicalize(const std::vector<std::pair<IndexKey, Expr>>& raw, int degree,
                                 const Chart& chart);

// sum over shared keys of L_K * A^K. Degrees must agree.
Expr pairing(const DiffForm& form, const Multivector& field);

std::string key_to_string(const IndexKey& key);  // "1,2"

}  // namespace poisson

#endif  // POISSON_ALTERNATING_HPP
