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

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "poisson/errors.hpp"
#include "poisson/simplify.hpp"

namespace poisson {
namespace {

void require_degree(const Multivector& p, int degree, const char* what) {
  if (p.degree() != degree) {
    throw PreconditionError(std::string(what) + " must have degree " + std::to_string(degree) + ", got " +
                            std::to_string(p.degree()));
  }
}

void require_degree(const DiffForm& p, int degree, const char* what) {
  if (p.degree() != degree) {
    throw PreconditionError(std::string(what) + " must have degree " + std::to_string(degree) + ", got " +
                            std::to_string(p.degree()));
  }
}

void require_same_chart(const Chart& a, const Chart& b) {
  if (!(a == b)) {
    throw PreconditionError("dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                            std::to_string(b.dimension()));
  }
}

// Partial derivatives of every stored coefficient, indexed by coordinate - 1.
template <Variance V>
std::map<IndexKey, std::vector<Expr>> gradients(const AlternatingField<V>& field) {
  std::map<IndexKey, std::vector<Expr>> out;
  const Chart& chart = field.chart();
  for (const auto& [key, value] : field.coefficients()) {
    std::vector<Expr> grad;
    grad.reserve(static_cast<std::size_t>(chart.dimension()));
    for (int s = 1; s <= chart.dimension(); ++s) grad.push_back(diff(value, chart.name(s)));
    out.emplace(key, std::move(grad));
  }
  return out;
}

// The partial d/dx^s of the coefficient on a key in any order.
Expr signed_partial(const std::map<IndexKey, std::vector<Expr>>& grads, IndexKey key, int s) {
  const int sign = sort_with_sign(key);
  if (sign == 0) return Expr(0);
  auto it = grads.find(key);
  if (it == grads.end()) return Expr(0);
  const Expr& d = it->second[static_cast<std::size_t>(s - 1)];
  return sign > 0 ? d : -d;
}

IndexKey without(const IndexKey& key, std::size_t position) {
  IndexKey out;
  out.reserve(key.size() - 1);
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i != position) out.push_back(key[i]);
  }
  return out;
}

}  // namespace

DiffForm exterior_derivative(const Chart& chart, const Expr& f, Execution exec) {
  return build_field<Variance::kCovariant>(
      chart, 1, increasing_keys(chart.dimension(), 1),
      [&](const IndexKey& key) { return diff(f, chart.name(key[0])); }, exec);
}

Multivector sharp_morphism(const Multivector& p, const DiffForm& alpha, Execution exec) {
  require_degree(p, 2, "bivector");
  require_degree(alpha, 1, "one-form");
  require_same_chart(p.chart(), alpha.chart());
  const int m = p.dimension();
  // (P# alpha)^j = sum_i alpha_i P^{ij}
  return build_field<Variance::kContravariant>(
      p.chart(), 1, increasing_keys(m, 1),
      [&](const IndexKey& key) {
        std::vector<Expr> terms;
        for (const auto& [form_key, a] : alpha.coefficients()) {
          const Expr pij = p.signed_coefficient({form_key[0], key[0]});
          if (!pij.is_zero_constant()) terms.push_back(a * pij);
        }
        return add(std::move(terms));
      },
      exec);
}

Expr poisson_bracket(const Multivector& p, const Expr& f, const Expr& g) {
  require_degree(p, 2, "bivector");
  if (f == g) return Expr(0);
  const Chart& chart = p.chart();
  std::vector<Expr> terms;
  for (const auto& [key, pij] : p.coefficients()) {
    const std::string& xi = chart.name(key[0]);
    const std::string& xj = chart.name(key[1]);
    terms.push_back(pij * (diff(f, xi) * diff(g, xj) - diff(f, xj) * diff(g, xi)));
  }
  return simplify(add(std::move(terms)));
}

Multivector hamiltonian_vf(const Multivector& p, const Expr& h, Execution exec) {
  require_degree(p, 2, "bivector");
  return sharp_morphism(p, exterior_derivative(p.chart(), h, exec), exec);
}

Multivector lichnerowicz_poisson_operator(const Multivector& p, const Expr& f, Execution exec) {
  return hamiltonian_vf(p, -f, exec);
}

Multivector lichnerowicz_poisson_operator(const Multivector& p, const Multivector& a, Execution exec) {
  require_degree(p, 2, "bivector");
  require_same_chart(p.chart(), a.chart());
  const int m = p.dimension();
  const int degree = a.degree() + 1;
  if (degree > m) return Multivector(p.chart(), degree);
  if (a.degree() == 0) return lichnerowicz_poisson_operator(p, a.coefficient({}), exec);

  const auto grad_a = gradients(a);
  const auto grad_p = gradients(p);
  return build_field<Variance::kContravariant>(
      p.chart(), degree, increasing_keys(m, degree),
      [&](const IndexKey& key) {
        std::vector<Expr> terms;
        // sum_k (-1)^(k+1) {x^{i_k}, A^{... ^i_k ...}}, where
        // {x^i, g} = sum_j P^{ij} dg/dx^j.
        for (std::size_t k = 0; k < key.size(); ++k) {
          const IndexKey rest = without(key, k);
          auto grad = grad_a.find(rest);
          if (grad == grad_a.end()) continue;
          for (int j = 1; j <= m; ++j) {
            const Expr pij = p.signed_coefficient({key[k], j});
            const Expr& d = grad->second[static_cast<std::size_t>(j - 1)];
            if (pij.is_zero_constant() || d.is_zero_constant()) continue;
            terms.push_back(k % 2 == 0 ? pij * d : -(pij * d));
          }
        }
        // sum_{k<l} (-1)^(k+l) dP^{i_k i_l}/dx^s A^{s ... ^i_k ... ^i_l ...}
        for (std::size_t k = 0; k < key.size(); ++k) {
          for (std::size_t l = k + 1; l < key.size(); ++l) {
            const IndexKey rest = without(without(key, l), k);
            for (int s = 1; s <= m; ++s) {
              const Expr dp = signed_partial(grad_p, {key[k], key[l]}, s);
              if (dp.is_zero_constant()) continue;
              IndexKey a_key{s};
              a_key.insert(a_key.end(), rest.begin(), rest.end());
              const Expr coefficient = a.signed_coefficient(a_key);
              if (coefficient.is_zero_constant()) continue;
              terms.push_back((k + l) % 2 == 0 ? dp * coefficient : -(dp * coefficient));
            }
          }
        }
        return add(std::move(terms));
      },
      exec);
}

Multivector curl_operator(const Multivector& a, const Expr& f0, Execution exec) {
  if (is_zero(f0)) throw PreconditionError("the volume density f0 must be nonzero");
  if (a.degree() == 0) return Multivector(a.chart(), 0);
  const Chart& chart = a.chart();
  const int m = chart.dimension();
  const auto grad_a = gradients(a);
  std::vector<Expr> log_grad;  // d f0/dx^i / f0
  for (int i = 1; i <= m; ++i) {
    const Expr d = diff(f0, chart.name(i));
    log_grad.push_back(d.is_zero_constant() ? Expr(0) : d / f0);
  }
  // Coefficient on J collects, for each i not in J with K = J + {i} sorted
  // and i in slot k, the term (-1)^(k+1) (dA^K/dx^i + A^K d(log f0)/dx^i).
  return build_field<Variance::kContravariant>(
      chart, a.degree() - 1, increasing_keys(m, a.degree() - 1),
      [&](const IndexKey& key) {
        std::vector<Expr> terms;
        for (int i = 1; i <= m; ++i) {
          IndexKey full = key;
          auto slot = std::lower_bound(full.begin(), full.end(), i);
          if (slot != full.end() && *slot == i) continue;
          const auto k = static_cast<std::size_t>(slot - full.begin());
          full.insert(slot, i);
          auto grad = grad_a.find(full);
          if (grad == grad_a.end()) continue;
          const auto index = static_cast<std::size_t>(i - 1);
          Expr term = grad->second[index];
          if (!log_grad[index].is_zero_constant()) term = term + log_grad[index] * a.coefficient(full);
          terms.push_back(k % 2 == 0 ? term : -term);
        }
        return add(std::move(terms));
      },
      exec);
}

Multivector jacobiator(const Multivector& p, Execution exec) {
  require_degree(p, 2, "bivector");
  return lichnerowicz_poisson_operator(p, p, exec);
}

Multivector modular_vf(const Multivector& p, const Expr& f0, Execution exec) {
  require_degree(p, 2, "bivector");
  return curl_operator(-p, f0, exec);
}

DiffForm one_forms_bracket(const Multivector& p, const DiffForm& alpha, const DiffForm& beta, Execution exec) {
  require_degree(p, 2, "bivector");
  require_degree(alpha, 1, "first one-form");
  require_degree(beta, 1, "second one-form");
  require_same_chart(p.chart(), alpha.chart());
  require_same_chart(p.chart(), beta.chart());
  const Chart& chart = p.chart();
  const int m = chart.dimension();
  const Multivector x = sharp_morphism(p, alpha, exec);
  const Multivector y = sharp_morphism(p, beta, exec);
  const auto grad_alpha = gradients(alpha);
  const auto grad_beta = gradients(beta);
  const Expr inner = pairing(beta, x);  // <beta, P# alpha>

  auto partial = [](const std::map<IndexKey, std::vector<Expr>>& grads, int component, int s) {
    auto it = grads.find({component});
    return it == grads.end() ? Expr(0) : it->second[static_cast<std::size_t>(s - 1)];
  };
  return build_field<Variance::kCovariant>(
      chart, 1, increasing_keys(m, 1),
      [&](const IndexKey& key) {
        const int i = key[0];
        std::vector<Expr> terms{diff(inner, chart.name(i))};
        for (int j = 1; j <= m; ++j) {
          if (j == i) continue;
          const Expr xj = x.coefficient({j});
          const Expr yj = y.coefficient({j});
          if (!xj.is_zero_constant()) terms.push_back(xj * (partial(grad_beta, i, j) - partial(grad_beta, j, i)));
          if (!yj.is_zero_constant()) terms.push_back(-(yj * (partial(grad_alpha, i, j) - partial(grad_alpha, j, i))));
        }
        return add(std::move(terms));
      },
      exec);
}

}  // namespace poisson
