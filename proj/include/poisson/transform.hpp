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

#ifndef POISSON_TRANSFORM_HPP
#define POISSON_TRANSFORM_HPP

#include <optional>
#include <vector>

#include "poisson/alternating.hpp"
#include "poisson/expr.hpp"
#include "poisson/kernels.hpp"

namespace poisson {

struct GaugeResult {
  Multivector bivector;
  // det(I - L P), not inverted. The bivector is defined where it is nonzero.
  Expr determinant;
};

// The lambda-gauge transformation of a bivector. Throws NonInvertibleGauge
// when the determinant vanishes identically.
GaugeResult gauge_transformation(const Multivector& p, const DiffForm& lambda,
                                 Execution exec = Execution::kParallel);

struct FlaschkaRatiuResult {
  Multivector bivector;
  std::optional<DiffForm> symplectic;  // set when requested
};

// The bivector with i_P (dx1 ^ ... ^ dxm) = dK1 ^ ... ^ dK(m-2). Needs exactly
// m-2 functions and m >= 3. Functionally dependent input gives zero fields.
FlaschkaRatiuResult flaschka_ratiu_bivector(const Chart& chart, const std::vector<Expr>& casimirs,
                                            bool with_symplectic, Execution exec = Execution::kParallel);

}  // namespace poisson

#endif  // POISSON_TRANSFORM_HPP
