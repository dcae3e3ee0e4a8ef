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

#ifndef POISSON_CALCULUS_HPP
#define POISSON_CALCULUS_HPP

#include "poisson/alternating.hpp"
#include "poisson/expr.hpp"
#include "poisson/kernels.hpp"

namespace poisson {

// df as a degree-1 form of partial derivatives.
DiffForm exterior_derivative(const Chart& chart, const Expr& f, Execution exec = Execution::kParallel);

// The vector field i_alpha P.
Multivector sharp_morphism(const Multivector& p, const DiffForm& alpha, Execution exec = Execution::kParallel);

// {f,g} = <dg, P#(df)>. Zero when f and g are structurally equal.
Expr poisson_bracket(const Multivector& p, const Expr& f, const Expr& g);

// X_h = P#(dh).
Multivector hamiltonian_vf(const Multivector& p, const Expr& h, Execution exec = Execution::kParallel);

// The coboundary A -> [[P, A]]. The zero field of degree deg(A)+1 when that
// exceeds the dimension.
Multivector lichnerowicz_poisson_operator(const Multivector& p, const Multivector& a,
                                          Execution exec = Execution::kParallel);
// Scalar argument: the Hamiltonian vector field of -f.
Multivector lichnerowicz_poisson_operator(const Multivector& p, const Expr& f,
                                          Execution exec = Execution::kParallel);

// Divergence of A with respect to the volume f0 dx1 ^ ... ^ dxm. Degree-0
// input gives the zero scalar. Throws PreconditionError when f0 is zero.
Multivector curl_operator(const Multivector& a, const Expr& f0, Execution exec = Execution::kParallel);

// [[P, P]].
Multivector jacobiator(const Multivector& p, Execution exec = Execution::kParallel);

// Z = curl(-P, f0).
Multivector modular_vf(const Multivector& p, const Expr& f0, Execution exec = Execution::kParallel);

// {alpha, beta} = i_{P#alpha} d beta - i_{P#beta} d alpha + d<beta, P#alpha>.
DiffForm one_forms_bracket(const Multivector& p, const DiffForm& alpha, const DiffForm& beta,
                           Execution exec = Execution::kParallel);

}  // namespace poisson

#endif  // POISSON_CALCULUS_HPP
