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

#include "support.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "poisson/parser.hpp"
#include "poisson/simplify.hpp"
#include "poisson/transform.hpp"

namespace poisson::testing {
namespace {

template <Variance V>
bool same_field(const AlternatingField<V>& a, const AlternatingField<V>& b) {
  if (!(a.chart() == b.chart()) || a.degree() != b.degree()) return false;
  std::set<IndexKey> keys;
  for (const auto& [k, v] : a.coefficients()) keys.insert(k);
  for (const auto& [k, v] : b.coefficients()) keys.insert(k);
  for (const IndexKey& k : keys) {
    if (!equals(a.coefficient(k), b.coefficient(k))) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> t) {
  const std::size_t n = t.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && t[pivot][c] == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("singular linear map");
    std::swap(t[c], t[pivot]);
    std::swap(inv[c], inv[pivot]);
    const Rational scale = t[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      t[c][j] /= scale;
      inv[c][j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || t[r][c] == 0) continue;
      const Rational f = t[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        t[r][j] -= f * t[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

Expr ex(const std::string& text, int dim) {
  ChartContext ctx(dim);
  return parse_expr(text, ctx);
}

Multivector mv(int dim, int degree, const RawEntries& entries) {
  return canonicalize<Variance::kContravariant>(entries, degree, ChartContext(dim));
}

DiffForm form(int dim, int degree, const RawEntries& entries) {
  return canonicalize<Variance::kCovariant>(entries, degree, ChartContext(dim));
}

bool same(const Multivector& a, const Multivector& b) { return same_field(a, b); }
bool same(const DiffForm& a, const DiffForm& b) { return same_field(a, b); }

Multivector so3() { return mv(3, 2, {{{1, 2}, "x3"}, {{1, 3}, "-x2"}, {{2, 3}, "x1"}}); }

Multivector pi4() {
  return mv(4, 2, {{{1, 2}, "a1*x2"}, {{1, 3}, "a2*x3"}, {{1, 4}, "a3*x4"}, {{2, 3}, "a4*x1"}});
}

Multivector pi4_family_a4_zero() { return mv(4, 2, {{{1, 2}, "a1*x2"}, {{1, 3}, "a2*x3"}, {{1, 4}, "a3*x4"}}); }

Multivector pi4_family_a2_minus_a1() {
  return mv(4, 2, {{{1, 2}, "a1*x2"}, {{1, 3}, "-a1*x3"}, {{2, 3}, "a4*x1"}});
}

std::vector<Fixture> poisson_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"symplectic R4", mv(4, 2, {{{1, 2}, "1"}, {{3, 4}, "1"}})});
  out.push_back({"so(3)", so3()});
  out.push_back({"family a4 = 0", pi4_family_a4_zero()});
  out.push_back({"family a2 = -a1, a3 = 0", pi4_family_a2_minus_a1()});
  const Chart r3(3);
  const Chart r4(4);
  out.push_back({"FR x1^2+x2^2+x3^2", flaschka_ratiu_bivector(r3, {ex("x1**2 + x2**2 + x3**2", 3)}, false).bivector});
  out.push_back({"FR x1*x2*x3", flaschka_ratiu_bivector(r3, {ex("x1*x2*x3", 3)}, false).bivector});
  out.push_back({"FR x1^2 + x2*x3", flaschka_ratiu_bivector(r3, {ex("x1**2 + x2*x3", 3)}, false).bivector});
  out.push_back({"FR (x1*x2, x3 + x4^2)",
                 flaschka_ratiu_bivector(r4, {ex("x1*x2"), ex("x3 + x4**2")}, false).bivector});
  out.push_back({"FR (x1^2 + x2^2, x3*x4)",
                 flaschka_ratiu_bivector(r4, {ex("x1**2 + x2**2"), ex("x3*x4")}, false).bivector});
  return out;
}

int Generator::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Expr Generator::polynomial(const Chart& chart, int degree, int terms, int c) {
  const int m = chart.dimension();
  std::vector<Expr> summands;
  const int count = integer(1, terms);
  for (int t = 0; t < count; ++t) {
    int coefficient = 0;
    while (coefficient == 0) coefficient = integer(-c, c);
    std::vector<Expr> factors{Expr(coefficient)};
    const int d = integer(0, degree);
    for (int k = 0; k < d; ++k) factors.push_back(chart.symbol(integer(1, m)));
    summands.push_back(mul(std::move(factors)));
  }
  return add(std::move(summands));
}

Multivector Generator::multivector(const Chart& chart, int degree, int poly_degree, int terms) {
  Multivector::Coefficients c;
  for (const IndexKey& key : increasing_keys(chart.dimension(), degree)) {
    if (integer(0, 3) == 0) continue;  // leave some keys empty
    c.emplace(key, polynomial(chart, poly_degree, terms));
  }
  return Multivector(chart, degree, std::move(c));
}

DiffForm Generator::diff_form(const Chart& chart, int degree, int poly_degree, int terms) {
  DiffForm::Coefficients c;
  for (const IndexKey& key : increasing_keys(chart.dimension(), degree)) {
    if (integer(0, 3) == 0) continue;
    c.emplace(key, polynomial(chart, poly_degree, terms));
  }
  return DiffForm(chart, degree, std::move(c));
}

Multivector oracle_schouten_bivectors(const Multivector& a, const Multivector& b) {
  const Chart& chart = a.chart();
  const int m = chart.dimension();
  auto entry = [](const Multivector& p, int i, int j) {
    if (i == j) return Expr(0);
    return i < j ? p.coefficient({i, j}) : -p.coefficient({j, i});
  };
  Multivector::Coefficients out;
  for (const IndexKey& key : increasing_keys(m, 3)) {
    const int idx[3] = {key[0], key[1], key[2]};
    Expr sum(0);
    for (int c = 0; c < 3; ++c) {
      const int i = idx[c];
      const int j = idx[(c + 1) % 3];
      const int k = idx[(c + 2) % 3];
      for (int l = 1; l <= m; ++l) {
        sum += entry(a, i, l) * diff(entry(b, j, k), chart.name(l));
        sum += entry(b, i, l) * diff(entry(a, j, k), chart.name(l));
      }
    }
    out.emplace(key, sum);
  }
  return Multivector(chart, 3, std::move(out));
}

Multivector oracle_divergence(const Multivector& p) {
  const Chart& chart = p.chart();
  const int m = chart.dimension();
  Multivector::Coefficients out;
  for (int i = 1; i <= m; ++i) {
    Expr sum(0);
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      const Expr pji = j < i ? p.coefficient({j, i}) : -p.coefficient({i, j});
      sum += diff(pji, chart.name(j));
    }
    out.emplace(IndexKey{i}, sum);
  }
  return Multivector(chart, 1, std::move(out));
}

Multivector push_forward_linear(const Multivector& p, const std::vector<std::vector<Rational>>& t) {
  const Chart& chart = p.chart();
  const int m = chart.dimension();
  const auto tinv = inverse(t);
  std::map<std::string, Expr> back;  // x = T^{-1} y
  for (int k = 0; k < m; ++k) {
    Expr sum(0);
    for (int l = 0; l < m; ++l) sum += Expr(tinv[k][l]) * chart.symbol(l + 1);
    back.emplace(chart.name(k + 1), sum);
  }
  auto entry = [&](int k, int l) {
    if (k == l) return Expr(0);
    return k < l ? p.coefficient({k, l}) : -p.coefficient({l, k});
  };
  Multivector::Coefficients out;
  for (const IndexKey& key : increasing_keys(m, 2)) {
    Expr sum(0);
    for (int k = 1; k <= m; ++k) {
      for (int l = 1; l <= m; ++l) {
        const Rational c = t[key[0] - 1][k - 1] * t[key[1] - 1][l - 1];
        if (c != 0) sum += Expr(c) * substitute(entry(k, l), back);
      }
    }
    out.emplace(key, sum);
  }
  return Multivector(chart, 2, std::move(out));
}

}  // namespace poisson::testing
