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

#include <string>
#include <vector>

#include "poisson/calculus.hpp"
#include "poisson/classify.hpp"
#include "poisson/errors.hpp"
#include "poisson/simplify.hpp"
#include "support.hpp"

using namespace poisson;
using poisson::testing::ex;
using poisson::testing::form;
using poisson::testing::mv;
using poisson::testing::same;

namespace {

struct BranchCase {
  NormalFormBranch branch;
  testing::RawEntries entries;
};

// One linear bivector per branch. The unimodular ones are e^{ijk} dQ/dx^k for a
// quadratic Q, so their Hessian is twice that of Q.
std::vector<BranchCase> branch_cases() {
  return {
      {NormalFormBranch::kZero, {}},
      {NormalFormBranch::kUnimodularRank1, {{{2, 3}, "3*x1"}}},
      {NormalFormBranch::kUnimodularRank2Index2, {{{1, 3}, "-x2"}, {{2, 3}, "x1"}}},
      {NormalFormBranch::kUnimodularRank2, {{{1, 3}, "x2"}, {{2, 3}, "x1"}}},
      {NormalFormBranch::kUnimodularRank3Index3, {{{1, 2}, "x3"}, {{1, 3}, "-x2"}, {{2, 3}, "x1"}}},
      {NormalFormBranch::kUnimodularRank3, {{{1, 2}, "-x3"}, {{1, 3}, "-x2"}, {{2, 3}, "x1"}}},
      {NormalFormBranch::kNonUnimodularRank0, {{{1, 3}, "x1"}, {{2, 3}, "x2"}}},
      {NormalFormBranch::kNonUnimodularRank1, {{{1, 3}, "x1"}, {{2, 3}, "4*x1 + x2"}}},
      {NormalFormBranch::kNonUnimodularIndex2, {{{1, 3}, "x1 - 4*x2"}, {{2, 3}, "4*x1 + x2"}}},
      {NormalFormBranch::kNonUnimodular, {{{1, 3}, "x1 + 4*x2"}, {{2, 3}, "4*x1 + x2"}}},
  };
}

const std::vector<NormalFormBranch> kAllBranches = {
    NormalFormBranch::kZero,
    NormalFormBranch::kUnimodularRank1,
    NormalFormBranch::kUnimodularRank2Index2,
    NormalFormBranch::kUnimodularRank2,
    NormalFormBranch::kUnimodularRank3Index3,
    NormalFormBranch::kUnimodularRank3,
    NormalFormBranch::kNonUnimodularRank0,
    NormalFormBranch::kNonUnimodularRank1,
    NormalFormBranch::kNonUnimodularIndex2,
    NormalFormBranch::kNonUnimodular,
};

Multivector with_a(const Multivector& p, const char* value) {
  Multivector::Coefficients c;
  for (const auto& [key, v] : p.coefficients()) c[key] = substitute(v, {{"a", ex(value, 3)}});
  return Multivector(p.chart(), 2, std::move(c));
}

}  // namespace

TEST_CASE("homogeneous degree") {
  const Chart chart(3);
  CHECK(homogeneous_degree(ex("x1*x2", 3), chart) == 2);
  CHECK(homogeneous_degree(ex("a*x1 - b*x3", 3), chart) == 1);
  CHECK(homogeneous_degree(ex("7", 3), chart) == 0);
  CHECK(homogeneous_degree(ex("x1/a", 3), chart) == 1);
  CHECK_FALSE(homogeneous_degree(ex("x1 + 1", 3), chart).has_value());
  CHECK_FALSE(homogeneous_degree(ex("x1/x2", 3), chart).has_value());
  CHECK_FALSE(homogeneous_degree(ex("sin(x1)", 3), chart).has_value());
  CHECK_FALSE(homogeneous_degree(ex("0", 3), chart).has_value());
}

TEST_CASE("homogeneous unimodularity examples") {
  CHECK(is_homogeneous_unimodular(testing::so3()));
  CHECK_FALSE(is_homogeneous_unimodular(mv(3, 2, {{{1, 3}, "x1"}, {{2, 3}, "x2"}})));
  CHECK_THROWS_AS(is_homogeneous_unimodular(mv(3, 2, {{{1, 2}, "x1 + 1"}})), PreconditionError);
  CHECK_FALSE(is_homogeneous_unimodular(testing::pi4_family_a4_zero()));
}

TEST_CASE("normal form examples") {
  const NormalFormR3 so3 = linear_normal_form_R3(testing::so3());
  CHECK(so3.branch == NormalFormBranch::kUnimodularRank3Index3);
  CHECK(same(so3.bivector, testing::so3()));
  CHECK_FALSE(so3.parametric);

  const NormalFormR3 zero = linear_normal_form_R3(Multivector(Chart(3), 2));
  CHECK(zero.branch == NormalFormBranch::kZero);
  CHECK(zero.bivector.is_zero());

  const NormalFormR3 r1 = linear_normal_form_R3(mv(3, 2, {{{2, 3}, "x1"}}));
  CHECK(r1.branch == NormalFormBranch::kUnimodularRank1);
  CHECK(same(r1.bivector, mv(3, 2, {{{2, 3}, "x1"}})));
}

TEST_CASE("every branch is reachable") {
  for (const BranchCase& c : branch_cases()) {
    const NormalFormR3 n = linear_normal_form_R3(mv(3, 2, c.entries));
    CHECK_MESSAGE(n.branch == c.branch, std::string(branch_name(c.branch)));
    CHECK(same(n.bivector, normal_form_bivector(c.branch, Chart(3))));
    const bool parametric =
        c.branch == NormalFormBranch::kNonUnimodularIndex2 || c.branch == NormalFormBranch::kNonUnimodular;
    CHECK(n.parametric == parametric);
  }
}

TEST_CASE("normal forms are Poisson") {
  for (NormalFormBranch b : kAllBranches) CHECK_MESSAGE(is_poisson_tensor(normal_form_bivector(b, Chart(3))), std::string(branch_name(b)));
}

TEST_CASE("normal form is idempotent") {
  for (NormalFormBranch b : kAllBranches) {
    Multivector n = normal_form_bivector(b, Chart(3));
    // The parametric forms are classified at a = 1, where they are rational.
    n = with_a(n, "1");
    CHECK_MESSAGE(linear_normal_form_R3(n).branch == b, std::string(branch_name(b)));
  }
}

TEST_CASE("branch is stable under positive scaling") {
  for (const BranchCase& c : branch_cases()) {
    const Multivector p = mv(3, 2, c.entries);
    for (const char* s : {"2", "1/3", "17/5"}) {
      CHECK(linear_normal_form_R3(ex(s, 3) * p).branch == c.branch);
    }
  }
}

TEST_CASE("normal form input checks") {
  CHECK_THROWS_AS(linear_normal_form_R3(mv(3, 2, {{{1, 2}, "x1*x2"}})), PreconditionError);
  CHECK_THROWS_AS(linear_normal_form_R3(mv(3, 2, {{{1, 2}, "x1 + 1"}})), PreconditionError);
  CHECK_THROWS_AS(linear_normal_form_R3(mv(3, 2, {{{1, 2}, "b*x1"}})), PreconditionError);
  CHECK_THROWS_AS(linear_normal_form_R3(testing::pi4()), PreconditionError);
}

TEST_CASE("isomorphism of Lie-Poisson structures") {
  const Multivector p = testing::so3();
  CHECK(isomorphic_lie_poisson_R3(p, p).isomorphic);
  const std::vector<std::vector<Rational>> swap = {{0, 1, 0}, {1, 0, 0}, {0, 0, -1}};
  const Multivector swapped = testing::push_forward_linear(p, swap);
  CHECK(is_poisson_tensor(swapped));
  CHECK(isomorphic_lie_poisson_R3(p, swapped).isomorphic);
  const std::vector<std::vector<Rational>> stretch = {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(isomorphic_lie_poisson_R3(p, testing::push_forward_linear(p, stretch)).isomorphic);
  CHECK_FALSE(isomorphic_lie_poisson_R3(p, mv(3, 2, {{{2, 3}, "x1"}})).isomorphic);
}

TEST_CASE("isomorphism is reflexive and symmetric") {
  const auto cases = branch_cases();
  for (const BranchCase& a : cases) {
    const Multivector pa = mv(3, 2, a.entries);
    CHECK(isomorphic_lie_poisson_R3(pa, pa).isomorphic);
    for (const BranchCase& b : cases) {
      const Multivector pb = mv(3, 2, b.entries);
      const IsomorphismVerdict ab = isomorphic_lie_poisson_R3(pa, pb);
      const IsomorphismVerdict ba = isomorphic_lie_poisson_R3(pb, pa);
      CHECK(ab.isomorphic == ba.isomorphic);
      CHECK(ab.isomorphic == (a.branch == b.branch));
    }
  }
  const Multivector q = mv(3, 2, {{{1, 3}, "x1 + 4*x2"}, {{2, 3}, "4*x1 + x2"}});
  CHECK(isomorphic_lie_poisson_R3(q, q).parametric);
}

TEST_CASE("is_poisson_tensor examples") {
  CHECK(is_poisson_tensor(testing::pi4_family_a4_zero()));
  CHECK(is_poisson_tensor(testing::pi4_family_a2_minus_a1()));
  CHECK_FALSE(is_poisson_tensor(testing::pi4()));
  for (const auto& f : testing::poisson_fixtures()) CHECK_MESSAGE(is_poisson_tensor(f.bivector), f.name);
}

TEST_CASE("is_in_kernel examples") {
  const Multivector p = testing::so3();
  CHECK(is_in_kernel(p, form(3, 1, {{{1}, "x1"}, {{2}, "x2"}, {{3}, "x3"}})));
  CHECK_FALSE(is_in_kernel(p, form(3, 1, {{{1}, "1"}})));
  CHECK(is_in_kernel(p, DiffForm(Chart(3), 1)));
  CHECK_THROWS_AS(is_in_kernel(p, DiffForm(Chart(3), 2)), PreconditionError);
}

TEST_CASE("is_casimir examples") {
  const Multivector p = testing::so3();
  CHECK(is_casimir(p, ex("x1**2 + x2**2 + x3**2", 3)));
  CHECK(is_casimir(p, ex("a - 2", 3)));
  CHECK_FALSE(is_casimir(p, ex("x1", 3)));
  CHECK(is_casimir(p, ex("exp(x1**2 + x2**2 + x3**2)", 3)));
}

TEST_CASE("Casimir functions are exactly those with differential in the kernel") {
  const Multivector p = testing::so3();
  for (const char* k : {"x1**2 + x2**2 + x3**2", "x1", "(x1**2 + x2**2 + x3**2)**2 + 1", "x1*x2 + x3"}) {
    const Expr e = ex(k, 3);
    CHECK(is_casimir(p, e) == is_in_kernel(p, exterior_derivative(Chart(3), e)));
  }
}

TEST_CASE("is_poisson_vf examples") {
  const Multivector symplectic = mv(4, 2, {{{1, 2}, "1"}, {{3, 4}, "1"}});
  CHECK(is_poisson_vf(symplectic, mv(4, 1, {{{1}, "1"}})));
  for (const auto& f : testing::poisson_fixtures()) {
    const Multivector x = hamiltonian_vf(f.bivector, ex("x1*x2 + x3**2", f.bivector.dimension()));
    CHECK_MESSAGE(is_poisson_vf(f.bivector, x), f.name);
  }
  CHECK_FALSE(is_poisson_vf(testing::so3(), mv(3, 1, {{{1}, "x1"}, {{2}, "x2"}, {{3}, "x3"}})));
  CHECK_THROWS_AS(is_poisson_vf(testing::so3(), testing::so3()), PreconditionError);
}

TEST_CASE("is_poisson_pair examples") {
  CHECK(is_poisson_pair(testing::so3(), Multivector(Chart(3), 2)));
  CHECK(is_poisson_pair(mv(4, 2, {{{1, 2}, "1"}}), mv(4, 2, {{{3, 4}, "1"}})));
  const Multivector other = mv(3, 2, {{{1, 2}, "x1"}});
  // Independent check of the mixed bracket through the cyclic formula.
  const Multivector oracle = testing::oracle_schouten_bivectors(testing::so3(), other);
  CHECK_FALSE(oracle.is_zero());
  CHECK(same(lichnerowicz_poisson_operator(testing::so3(), other), oracle));
  CHECK_FALSE(is_poisson_pair(testing::so3(), other));
}
