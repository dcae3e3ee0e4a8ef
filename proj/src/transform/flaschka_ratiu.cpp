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

#include "poisson/errors.hpp"
#include "poisson/matrix.hpp"
#include "poisson/simplify.hpp"
#include "poisson/transform.hpp"

namespace poisson {

FlaschkaRatiuResult flaschka_ratiu_bivector(const Chart& chart, const std::vector<Expr>& casimirs,
                                            bool with_symplectic, Execution exec) {
  const int m = chart.dimension();
  if (m < 3) throw PreconditionError("Flaschka-Ratiu bivectors need dimension at least 3");
  if (static_cast<int>(casimirs.size()) != m - 2) {
    throw PreconditionError("expected " + std::to_string(m - 2) + " functions, got " +
                            std::to_string(casimirs.size()));
  }
  ExprMatrix gradient(casimirs.size(), static_cast<std::size_t>(m));
  for (std::size_t r = 0; r < casimirs.size(); ++r) {
    for (int c = 1; c <= m; ++c) gradient(r, static_cast<std::size_t>(c - 1)) = diff(casimirs[r], chart.name(c));
  }
  const std::vector<IndexKey> keys = increasing_keys(m, 2);
  // minors[n] = det of the gradient matrix without columns keys[n].
  const auto minors = normalize_each(
      keys.size(),
      [&](std::size_t n) {
        return determinant(gradient.without_columns(
            {static_cast<std::size_t>(keys[n][0] - 1), static_cast<std::size_t>(keys[n][1] - 1)}));
      },
      exec);

  Multivector::Coefficients pi;
  std::vector<Expr> squares;
  for (std::size_t n = 0; n < keys.size(); ++n) {
    if (!minors[n]) continue;
    const bool even = (keys[n][0] + keys[n][1]) % 2 == 0;
    pi.emplace(keys[n], even ? *minors[n] : simplify(-*minors[n]));
    squares.push_back(pow(*minors[n], Expr(2)));
  }
  FlaschkaRatiuResult result{Multivector(Multivector::Normalized{}, chart, 2, std::move(pi)), std::nullopt};
  if (!with_symplectic) return result;
  if (result.bivector.is_zero()) {
    result.symplectic = DiffForm(chart, 2);
    return result;
  }
  const Expr norm = simplify(add(std::move(squares)));
  result.symplectic = build_field<Variance::kCovariant>(
      chart, 2, keys,
      [&](const IndexKey& key) {
        // (-1)^{i+j+1} det P_[i,j] / |P|^2 = -P^{ij} / |P|^2
        return -result.bivector.coefficient(key) / norm;
      },
      exec);
  return result;
}

}  // namespace poisson
