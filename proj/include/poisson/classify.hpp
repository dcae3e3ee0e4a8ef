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

#ifndef POISSON_CLASSIFY_HPP
#define POISSON_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "poisson/alternating.hpp"
#include "poisson/expr.hpp"
#include "poisson/kernels.hpp"

namespace poisson {

// Degree in the coordinates when e is a polynomial in them whose monomials
// all share that degree (parameters may appear in the coefficients).
// nullopt otherwise, and also for the zero expression.
std::optional<int> homogeneous_degree(const Expr& e, const Chart& chart);

// True iff modular_vf(p, 1) vanishes. Every coefficient must be a
// homogeneous polynomial, otherwise PreconditionError.
bool is_homogeneous_unimodular(const Multivector& p, Execution exec = Execution::kParallel);

// The ten possible outcomes of the linear classification on R^3.
enum class NormalFormBranch : std::uint8_t {
  kZero,
  kUnimodularRank1,
  kUnimodularRank2Index2,
  kUnimodularRank2,
  kUnimodularRank3Index3,
  kUnimodularRank3,
  kNonUnimodularRank0,
  kNonUnimodularRank1,
  kNonUnimodularIndex2,
  kNonUnimodular,
};

std::string_view branch_name(NormalFormBranch b);

struct NormalFormR3 {
  NormalFormBranch branch;
  Multivector bivector;
  // The non-unimodular rank >= 2 branches carry the unresolved symbol "a".
  bool parametric;
};

// Normal form of a Lie-Poisson bivector on R^3. Needs m = 3 and linear
// coefficients with rational (parameter-free) coefficients.
NormalFormR3 linear_normal_form_R3(const Multivector& p, Execution exec = Execution::kParallel);

// The bivector returned for a branch; exposed for tests and documentation.
Multivector normal_form_bivector(NormalFormBranch b, const Chart& chart);

struct IsomorphismVerdict {
  bool isomorphic;
  // Both inputs fell in a branch carrying "a", which is compared as one shared
  // opaque symbol; a true verdict then holds only for equal values of a.
  bool parametric;
};

IsomorphismVerdict isomorphic_lie_poisson_R3(const Multivector& p1, const Multivector& p2,
                                             Execution exec = Execution::kParallel);

bool is_poisson_tensor(const Multivector& p, Execution exec = Execution::kParallel);
bool is_in_kernel(const Multivector& p, const DiffForm& alpha, Execution exec = Execution::kParallel);
bool is_casimir(const Multivector& p, const Expr& k, Execution exec = Execution::kParallel);
bool is_poisson_vf(const Multivector& p, const Multivector& w, Execution exec = Execution::kParallel);
// Neither input is checked to be Poisson.
bool is_poisson_pair(const Multivector& p1, const Multivector& p2, Execution exec = Execution::kParallel);

}  // namespace poisson

#endif  // POISSON_CLASSIFY_HPP
