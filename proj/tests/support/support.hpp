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

#ifndef POISSON_TESTS_SUPPORT_HPP
#define POISSON_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "poisson/alternating.hpp"
#include "poisson/expr.hpp"
#include "poisson/rational.hpp"

namespace poisson::testing {

using RawEntries = std::vector<std::pair<IndexKey, std::string>>;

Expr ex(const std::string& text, int dim = 4);
Multivector mv(int dim, int degree, const RawEntries& entries);
DiffForm form(int dim, int degree, const RawEntries& entries);

// Coefficientwise equals() over the union of keys; charts and degrees must
// agree.
bool same(const Multivector& a, const Multivector& b);
bool same(const DiffForm& a, const DiffForm& b);

Multivector so3();
Multivector pi4();  // the four-parameter bivector on R^4
Multivector pi4_family_a4_zero();
Multivector pi4_family_a2_minus_a1();

struct Fixture {
  std::string name;
  Multivector bivector;
};
// Bivectors known to be Poisson: constant symplectic R^4, so(3), the two
// parameter families, and five Flaschka-Ratiu bivectors.
std::vector<Fixture> poisson_fixtures();

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  // Random polynomial in the chart coordinates: up to `terms` monomials of
  // total degree at most `degree`, nonzero integer coefficients in [-c, c].
  Expr polynomial(const Chart& chart, int degree, int terms, int c = 5);
  Multivector multivector(const Chart& chart, int degree, int poly_degree = 2, int terms = 2);
  DiffForm diff_form(const Chart& chart, int degree, int poly_degree = 2, int terms = 2);

 private:
  std::mt19937_64 rng_;
};

// Independent oracles.

// [[A, B]] of two bivectors from the cyclic formula
// sum over cyclic (i,j,k) of A^{il} dB^{jk}/dx^l + B^{il} dA^{jk}/dx^l.
Multivector oracle_schouten_bivectors(const Multivector& a, const Multivector& b);

// Euclidean divergence of a bivector: (D P)^i = sum_j dP^{ji}/dx^j.
Multivector oracle_divergence(const Multivector& p);

// Push-forward of a bivector by the linear map y = T x.
Multivector push_forward_linear(const Multivector& p, const std::vector<std::vector<Rational>>& t);

}  // namespace poisson::testing

#endif  // POISSON_TESTS_SUPPORT_HPP
