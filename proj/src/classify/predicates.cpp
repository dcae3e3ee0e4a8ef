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

#include "poisson/calculus.hpp"
#include "poisson/classify.hpp"
#include "poisson/errors.hpp"

namespace poisson {

bool is_poisson_tensor(const Multivector& p, Execution exec) { return jacobiator(p, exec).is_zero(); }

bool is_in_kernel(const Multivector& p, const DiffForm& alpha, Execution exec) {
  return sharp_morphism(p, alpha, exec).is_zero();
}

bool is_casimir(const Multivector& p, const Expr& k, Execution exec) { return hamiltonian_vf(p, k, exec).is_zero(); }

bool is_poisson_vf(const Multivector& p, const Multivector& w, Execution exec) {
  if (w.degree() != 1) throw PreconditionError("expected a vector field");
  return lichnerowicz_poisson_operator(p, w, exec).is_zero();
}

bool is_poisson_pair(const Multivector& p1, const Multivector& p2, Execution exec) {
  if (p2.degree() != 2) throw PreconditionError("expected a bivector");
  return lichnerowicz_poisson_operator(p1, p2, exec).is_zero();
}

}  // namespace poisson
