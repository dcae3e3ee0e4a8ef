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

#include <array>

#include "poisson/calculus.hpp"
#include "poisson/classify.hpp"
#include "poisson/errors.hpp"
#include "poisson/simplify.hpp"

namespace poisson {
namespace {

bool depends_on_coordinates(const Expr& atom, const Chart& chart) {
  for (const std::string& s : free_symbols(atom)) {
    if (chart.is_coordinate(s)) return true;
  }
  return false;
}

void require_homogeneous(const Multivector& p) {
  for (const auto& [key, value] : p.coefficients()) {
    if (!homogeneous_degree(value, p.chart())) {
      throw PreconditionError("coefficient (" + key_to_string(key) + ") = " + to_string(value) +
                              " is not a homogeneous polynomial");
    }
  }
}

// Number of sign changes in a coefficient sequence, zeros skipped.
int sign_changes(const std::array<Rational, 4>& c) {
  int changes = 0;
  int last = 0;
  for (const Rational& v : c) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::optional<int> homogeneous_degree(const Expr& e, const Chart& chart) {
  const RationalForm form = to_rational_form(e);
  if (form.value.is_zero()) return std::nullopt;
  std::vector<bool> coordinate(form.atoms.size());
  for (std::size_t i = 0; i < form.atoms.size(); ++i) {
    const Expr& a = form.atoms[i];
    coordinate[i] = a.is_symbol() && chart.is_coordinate(a.name());
    if (!a.is_symbol() && depends_on_coordinates(a, chart)) return std::nullopt;
  }
  for (const auto& [m, c] : form.value.denominator().terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (coordinate[i] && m[i] != 0) return std::nullopt;
    }
  }
  std::optional<int> degree;
  for (const auto& [m, c] : form.value.numerator().terms()) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (coordinate[i]) d += m[i];
    }
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

bool is_homogeneous_unimodular(const Multivector& p, Execution exec) {
  if (p.degree() != 2) throw PreconditionError("expected a bivector");
  require_homogeneous(p);
  return modular_vf(p, Expr(1), exec).is_zero();
}

std::string_view branch_name(NormalFormBranch b) {
  switch (b) {
    case NormalFormBranch::kZero:
      return "zero";
    case NormalFormBranch::kUnimodularRank1:
      return "unimodular, rank 1";
    case NormalFormBranch::kUnimodularRank2Index2:
      return "unimodular, rank 2, index 2";
    case NormalFormBranch::kUnimodularRank2:
      return "unimodular, rank 2, index other than 2";
    case NormalFormBranch::kUnimodularRank3Index3:
      return "unimodular, rank 3, index 3";
    case NormalFormBranch::kUnimodularRank3:
      return "unimodular, rank 3, index other than 3";
    case NormalFormBranch::kNonUnimodularRank0:
      return "non-unimodular, rank 0";
    case NormalFormBranch::kNonUnimodularRank1:
      return "non-unimodular, rank 1";
    case NormalFormBranch::kNonUnimodularIndex2:
      return "non-unimodular, rank at least 2, index 2";
    case NormalFormBranch::kNonUnimodular:
      return "non-unimodular, rank at least 2, index other than 2";
  }
  return "";
}

Multivector normal_form_bivector(NormalFormBranch b, const Chart& chart) {
  if (chart.dimension() != 3) throw PreconditionError("normal forms live on a 3-dimensional chart");
  const Expr x1 = chart.symbol(1);
  const Expr x2 = chart.symbol(2);
  const Expr x3 = chart.symbol(3);
  const Expr a = Expr::symbol("a");
  Multivector::Coefficients c;
  switch (b) {
    case NormalFormBranch::kZero:
      break;
    case NormalFormBranch::kUnimodularRank1:
      c = {{{2, 3}, x1}};
      break;
    case NormalFormBranch::kUnimodularRank2Index2:
      c = {{{1, 3}, -x2}, {{2, 3}, x1}};
      break;
    case NormalFormBranch::kUnimodularRank2:
      c = {{{1, 3}, x2}, {{2, 3}, x1}};
      break;
    case NormalFormBranch::kUnimodularRank3Index3:
      c = {{{1, 2}, x3}, {{1, 3}, -x2}, {{2, 3}, x1}};
      break;
    case NormalFormBranch::kUnimodularRank3:
      c = {{{1, 2}, -x3}, {{1, 3}, -x2}, {{2, 3}, x1}};
      break;
    case NormalFormBranch::kNonUnimodularRank0:
      c = {{{1, 3}, x1}, {{2, 3}, x2}};
      break;
    case NormalFormBranch::kNonUnimodularRank1:
      c = {{{1, 3}, x1}, {{2, 3}, Expr(4) * x1 + x2}};
      break;
    case NormalFormBranch::kNonUnimodularIndex2:
      c = {{{1, 3}, x1 - Expr(4) * a * x2}, {{2, 3}, Expr(4) * a * x1 + x2}};
      break;
    case NormalFormBranch::kNonUnimodular:
      c = {{{1, 3}, x1 + Expr(4) * a * x2}, {{2, 3}, Expr(4) * a * x1 + x2}};
      break;
  }
  return Multivector(chart, 2, std::move(c));
}

NormalFormR3 linear_normal_form_R3(const Multivector& p, Execution exec) {
  if (p.degree() != 2) throw PreconditionError("expected a bivector");
  if (p.dimension() != 3) throw PreconditionError("linear normal forms need dimension 3");
  for (const auto& [key, value] : p.coefficients()) {
    if (homogeneous_degree(value, p.chart()) != 1) {
      throw PreconditionError("coefficient (" + key_to_string(key) + ") = " + to_string(value) + " is not linear");
    }
  }
  const Chart& chart = p.chart();
  const Expr k = chart.symbol(1) * p.coefficient({2, 3}) - chart.symbol(2) * p.coefficient({1, 3}) +
                 chart.symbol(3) * p.coefficient({1, 2});
  std::array<std::array<Rational, 3>, 3> h;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Expr entry = simplify(diff(diff(k, chart.name(i + 1)), chart.name(j + 1)));
      if (!entry.is_constant()) {
        throw PreconditionError("linear coefficients must be rational numbers, found " + to_string(entry));
      }
      h[i][j] = entry.value();
    }
  }
  // Characteristic polynomial t^3 - c2 t^2 + c1 t - c0 of the symmetric H.
  const Rational c2 = h[0][0] + h[1][1] + h[2][2];
  const Rational c1 = h[0][0] * h[1][1] - h[0][1] * h[1][0] + h[0][0] * h[2][2] - h[0][2] * h[2][0] +
                      h[1][1] * h[2][2] - h[1][2] * h[2][1];
  const Rational c0 = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                      h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                      h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  const int rank = c0 != 0 ? 3 : c1 != 0 ? 2 : c2 != 0 ? 1 : 0;
  // All eigenvalues are real, so Descartes' rule counts the positive ones.
  const int index = sign_changes({Rational(1), Rational(-c2), c1, Rational(-c0)});

  NormalFormBranch branch;
  if (modular_vf(p, Expr(1), exec).is_zero()) {
    switch (rank) {
      case 0:
        branch = NormalFormBranch::kZero;
        break;
      case 1:
        branch = NormalFormBranch::kUnimodularRank1;
        break;
      case 2:
        branch = index == 2 ? NormalFormBranch::kUnimodularRank2Index2 : NormalFormBranch::kUnimodularRank2;
        break;
      default:
        branch = index == 3 ? NormalFormBranch::kUnimodularRank3Index3 : NormalFormBranch::kUnimodularRank3;
        break;
    }
  } else if (rank == 0) {
    branch = NormalFormBranch::kNonUnimodularRank0;
  } else if (rank == 1) {
    branch = NormalFormBranch::kNonUnimodularRank1;
  } else {
    branch = index == 2 ? NormalFormBranch::kNonUnimodularIndex2 : NormalFormBranch::kNonUnimodular;
  }
  const bool parametric = branch == NormalFormBranch::kNonUnimodularIndex2 || branch == NormalFormBranch::kNonUnimodular;
  return NormalFormR3{branch, normal_form_bivector(branch, chart), parametric};
}

IsomorphismVerdict isomorphic_lie_poisson_R3(const Multivector& p1, const Multivector& p2, Execution exec) {
  const NormalFormR3 n1 = linear_normal_form_R3(p1, exec);
  const NormalFormR3 n2 = linear_normal_form_R3(p2, exec);
  bool same = n1.branch == n2.branch;
  if (same) {
    for (const IndexKey& key : increasing_keys(3, 2)) {
      if (!equals(n1.bivector.coefficient(key), n2.bivector.coefficient(key))) same = false;
    }
  }
  return IsomorphismVerdict{same, n1.parametric && n2.parametric};
}

}  // namespace poisson
