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

#ifndef POISSON_SIMPLIFY_HPP
#define POISSON_SIMPLIFY_HPP

#include <cstdint>
#include <vector>

#include "poisson/expr.hpp"
#include "poisson/polynomial.hpp"

namespace poisson {

// An expression viewed as a quotient of polynomials in "atoms": symbols and
// opaque kernels (function applications, powers with symbolic exponents,
// q-th roots). Kernel arguments are themselves simplified, so equal kernels
// share one atom.
struct RationalForm {
  std::vector<Expr> atoms;
  RationalFunction value;
};

RationalForm to_rational_form(const Expr& e);
Expr from_rational_form(const RationalForm& form);
Expr polynomial_to_expr(const Polynomial& p, const std::vector<Expr>& atoms);

// Expands, collects and cancels common polynomial factors. The result is
// num/den with den primitive and integral and with positive leading
// coefficient, and its text form is a pure function of the input's value as a
// rational function of its atoms.
Expr simplify(const Expr& e);

enum class ZeroMethod : std::uint8_t { kExact, kSampled };

struct ZeroVerdict {
  bool zero = false;
  ZeroMethod method = ZeroMethod::kExact;
  // Sampled verdicts only: no sample point lay in the domain, so `zero` is
  // false without evidence either way.
  bool undecided = false;
};

struct ZeroTestConfig {
  int samples = 20;
  double relative_tolerance = 1e-9;
  std::uint64_t seed = 0x5eed'cafe'f00dULL;

  // Default configuration, with POISSON_ZERO_SAMPLES overriding `samples`.
  static const ZeroTestConfig& global();
};

ZeroVerdict zero_test(const Expr& e, const ZeroTestConfig& config = ZeroTestConfig::global());
bool is_zero(const Expr& e);
bool equals(const Expr& a, const Expr& b);

}  // namespace poisson

#endif  // POISSON_SIMPLIFY_HPP
