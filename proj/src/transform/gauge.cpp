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

GaugeResult gauge_transformation(const Multivector& p, const DiffForm& lambda, Execution exec) {
  if (p.degree() != 2) throw PreconditionError("gauge needs a bivector");
  if (lambda.degree() != 2) throw PreconditionError("gauge needs a 2-form");
  if (!(p.chart() == lambda.chart())) throw PreconditionError("dimension mismatch");
  const int m = p.dimension();
  const ExprMatrix mp = bivector_to_matrix(p);
  const ExprMatrix d = (ExprMatrix::identity(static_cast<std::size_t>(m)) - bivector_to_matrix(lambda) * mp).simplified();
  Expr det = determinant(d);
  if (is_zero(det)) throw NonInvertibleGauge("I - L P is not invertible: its determinant vanishes identically");
  const ExprMatrix adj = adjugate(d);
  // Upper triangle of P (I - L P)^{-1} = P adj / det.
  Multivector bivector = build_field<Variance::kContravariant>(
      p.chart(), 2, increasing_keys(m, 2),
      [&](const IndexKey& key) {
        const auto i = static_cast<std::size_t>(key[0] - 1);
        const auto j = static_cast<std::size_t>(key[1] - 1);
        std::vector<Expr> terms;
        for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
          if (mp(i, k).is_zero_constant() || adj(k, j).is_zero_constant()) continue;
          terms.push_back(mp(i, k) * adj(k, j));
        }
        return add(std::move(terms)) / det;
      },
      exec);
  return GaugeResult{std::move(bivector), std::move(det)};
}

}  // namespace poisson
