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

#include <doctest.h>

#include "poisson/calculus.hpp"
#include "poisson/errors.hpp"
#include "poisson/simplify.hpp"
#include "support.hpp"

using namespace poisson;
using poisson::testing::ex;
using poisson::testing::form;
using poisson::testing::mv;
using poisson::testing::same;

namespace {

Multivector symplectic_plane() { return mv(2, 2, {{{1, 2}, "1"}}); }

}  // namespace

TEST_CASE("exterior derivative of a scalar") {
  const DiffForm d = exterior_derivative(Chart(3), ex("x1**2*x3 + a*x2"));
  CHECK(same(d, form(3, 1, {{{1}, "2*x1*x3"}, {{2}, "a"}, {{3}, "x1**2"}})));
  CHECK(exterior_derivative(Chart(3), ex("a + 7")).is_zero());
}

TEST_CASE("sharp morphism examples") {
  const Multivector p = testing::so3();
  CHECK(same(sharp_morphism(p, form(3, 1, {{{1}, "1"}})), mv(3, 1, {{{2}, "x3"}, {{3}, "-x2"}})));
  CHECK(sharp_morphism(p, DiffForm(Chart(3), 1)).is_zero());
  CHECK(sharp_morphism(p, form(3, 1, {{{1}, "x1"}, {{2}, "x2"}, {{3}, "x3"}})).is_zero());
  CHECK_THROWS_AS(sharp_morphism(p, DiffForm(Chart(3), 2)), PreconditionError);
}

TEST_CASE("Poisson bracket examples") {
  const Multivector p = testing::so3();
  CHECK(is_zero(poisson_bracket(p, ex("x1*x2"), ex("x1*x2"))));
  CHECK(equals(poisson_bracket(p, ex("x1"), ex("x2")), ex("x3")));
  CHECK(equals(poisson_bracket(p, ex("x2"), ex("x1")), ex("-x3")));
  CHECK(is_zero(poisson_bracket(p, ex("x1"), ex("x1**2 + x2**2 + x3**2"))));
}

TEST_CASE("Hamiltonian vector field examples") {
  CHECK(same(hamiltonian_vf(symplectic_plane(), ex("x1")), mv(2, 1, {{{2}, "1"}})));
  CHECK(hamiltonian_vf(testing::so3(), ex("x1**2 + x2**2 + x3**2")).is_zero());
  CHECK(hamiltonian_vf(testing::so3(), ex("a + 3")).is_zero());
}

TEST_CASE("Lichnerowicz-Poisson operator examples") {
  const Multivector p = testing::pi4();
  const Multivector expected = mv(4, 3, {{{1, 2, 3}, "-2*a4*x1*(a1 + a2)"}, {{2, 3, 4}, "-2*a3*a4*x4"}});
  CHECK(same(lichnerowicz_poisson_operator(p, p), expected));

  const Multivector top = mv(4, 4, {{{1, 2, 3, 4}, "x1"}});
  const Multivector over = lichnerowicz_poisson_operator(p, top);
  CHECK(over.is_zero());
  CHECK(over.degree() == 5);

  CHECK(same(lichnerowicz_poisson_operator(symplectic_plane(), ex("x1")), mv(2, 1, {{{2}, "-1"}})));
}

TEST_CASE("Lichnerowicz-Poisson operator on a vector field is minus the Lie derivative of P") {
  // [[P, W]] = -L_W P; for W = x1 d1 and P = x3 d1^d2 + x1 d2^d3 compare with the coordinate formula.
  const Multivector p = mv(3, 2, {{{1, 2}, "x3"}, {{2, 3}, "x1"}});
  const Multivector w = mv(3, 1, {{{1}, "x1"}});
  // (L_W P)^{ij} = W^k d_k P^{ij} - P^{kj} d_k W^i - P^{ik} d_k W^j.
  const Multivector lie = mv(3, 2, {{{1, 2}, "-x3"}, {{2, 3}, "x1"}});
  CHECK(same(lichnerowicz_poisson_operator(p, w), -lie));
}

TEST_CASE("curl operator examples") {
  CHECK(curl_operator(mv(4, 2, {{{1, 2}, "1"}, {{3, 4}, "1"}}), ex("1")).is_zero());
  const Multivector div = curl_operator(mv(3, 1, {{{1}, "x1"}}), ex("1"));
  CHECK(div.degree() == 0);
  CHECK(equals(div.coefficient({}), ex("1")));
  CHECK(same(curl_operator(mv(3, 2, {{{1, 3}, "x1"}, {{2, 3}, "x2"}}), ex("1")), mv(3, 1, {{{3}, "2"}})));
  CHECK_THROWS_AS(curl_operator(testing::so3(), ex("x1 - x1")), PreconditionError);
  const Multivector scalar = curl_operator(Multivector::scalar(Chart(3), ex("x1")), ex("1"));
  CHECK(scalar.degree() == 0);
  CHECK(scalar.is_zero());
}

TEST_CASE("curl of a bivector matches the coordinate divergence") {
  testing::Generator gen(17);
  for (int m : {3, 4}) {
    const Chart chart(m);
    for (int trial = 0; trial < 8; ++trial) {
      const Multivector p = gen.multivector(chart, 2, 3, 3);
      CHECK(same(curl_operator(p, ex("1")), testing::oracle_divergence(p)));
    }
  }
}

TEST_CASE("curl with a nonconstant density") {
  // D_{f Omega} A = D_Omega A + (1/f) i_{df} A on a vector field reduces to
  // div A + A(f)/f.
  const Multivector a = mv(2, 1, {{{1}, "x2"}, {{2}, "x1*x2"}});
  const Multivector got = curl_operator(a, ex("exp(x1)"));
  CHECK(equals(got.coefficient({}), ex("x1 + x2")));
}

TEST_CASE("jacobiator examples") {
  CHECK(same(jacobiator(testing::pi4()),
             mv(4, 3, {{{1, 2, 3}, "-2*a4*x1*(a1 + a2)"}, {{2, 3, 4}, "-2*a3*a4*x4"}})));
  CHECK(jacobiator(testing::so3()).is_zero());
  CHECK(jacobiator(mv(4, 2, {{{1, 2}, "a"}, {{1, 3}, "3"}, {{2, 4}, "-1/2"}})).is_zero());
  CHECK(jacobiator(testing::pi4_family_a4_zero()).is_zero());
  CHECK(jacobiator(testing::pi4_family_a2_minus_a1()).is_zero());
}

TEST_CASE("jacobiator matches the cyclic Schouten oracle") {
  testing::Generator gen(19);
  for (int m : {3, 4}) {
    const Chart chart(m);
    for (int trial = 0; trial < 6; ++trial) {
      const Multivector p = gen.multivector(chart, 2, 2, 3);
      CHECK(same(jacobiator(p), testing::oracle_schouten_bivectors(p, p)));
    }
  }
}

TEST_CASE("modular vector field examples") {
  CHECK(modular_vf(testing::so3(), ex("1")).is_zero());
  CHECK(same(modular_vf(mv(3, 2, {{{1, 3}, "x1"}, {{2, 3}, "x2"}}), ex("1")), mv(3, 1, {{{3}, "-2"}})));
  CHECK(modular_vf(mv(4, 2, {{{1, 2}, "1"}, {{3, 4}, "1"}}), ex("5")).is_zero());
  CHECK_THROWS_AS(modular_vf(testing::so3(), ex("0")), PreconditionError);
}

TEST_CASE("one-forms bracket examples") {
  const Multivector p = testing::so3();
  const DiffForm dx1 = form(3, 1, {{{1}, "1"}});
  const DiffForm dx2 = form(3, 1, {{{2}, "1"}});
  CHECK(same(one_forms_bracket(p, dx1, dx2), form(3, 1, {{{3}, "1"}})));
  CHECK(one_forms_bracket(p, DiffForm(Chart(3), 1), dx2).is_zero());
  CHECK(one_forms_bracket(p, dx1, DiffForm(Chart(3), 1)).is_zero());
  CHECK(same(one_forms_bracket(symplectic_plane(), form(2, 1, {{{1}, "2*x1"}}), form(2, 1, {{{2}, "1"}})),
             form(2, 1, {{{1}, "2"}})));
}

TEST_CASE("degree and chart checks") {
  CHECK_THROWS_AS(hamiltonian_vf(mv(3, 1, {{{1}, "1"}}), ex("x1")), PreconditionError);
  CHECK_THROWS_AS(jacobiator(mv(3, 3, {{{1, 2, 3}, "1"}})), PreconditionError);
  CHECK_THROWS_AS(lichnerowicz_poisson_operator(testing::so3(), testing::pi4()), PreconditionError);
}
