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

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "poisson/simplify.hpp"

namespace poisson {
namespace {

bool is_integer_constant(const Expr& e) { return e.is_constant() && is_integer(e.value()); }

// Kernels are the subexpressions that become atoms.
bool is_kernel(const Expr& e) {
  if (e.is_function()) return true;
  return e.is_pow() && !is_integer_constant(e.exponent());
}

class Converter {
 public:
  explicit Converter(const Expr& e) {
    collect(e);
    std::sort(atoms_.begin(), atoms_.end(), ExprLess{});
    for (std::size_t i = 0; i < atoms_.size(); ++i) index_[atoms_[i]] = i;
  }

  RationalForm convert_root(const Expr& e) { return RationalForm{atoms_, convert(e)}; }

 private:
  void add_atom(const Expr& a) {
    if (index_.emplace(a, 0).second) atoms_.push_back(a);
  }

  // The canonical kernel standing for e (a function application or a
  // non-integer power), or, when canonicalization removes the kernel, the
  // plain expression that replaces it.
  const Expr& kernel_of(const Expr& e) {
    auto it = kernels_.find(e);
    if (it != kernels_.end()) return it->second;
    Expr k;
    if (e.is_function()) {
      k = apply(e.function(), simplify(e.argument()));
    } else if (e.exponent().is_constant()) {
      // b**(p/q) is read as (b**(1/q))**p.
      k = pow(simplify(e.base()), Expr(Rational(Integer(1), e.exponent().value().get_den())));
    } else {
      k = pow(simplify(e.base()), simplify(e.exponent()));
    }
    return kernels_.emplace(e, std::move(k)).first->second;
  }

  static int root_power(const Expr& e) {
    if (e.is_pow() && e.exponent().is_constant()) return static_cast<int>(e.exponent().value().get_num().get_si());
    return 1;
  }

  void collect(const Expr& e) {
    switch (e.kind()) {
      case NodeKind::kConstant:
        return;
      case NodeKind::kSymbol:
        add_atom(e);
        return;
      case NodeKind::kAdd:
      case NodeKind::kMul:
        for (const Expr& o : e.operands()) collect(o);
        return;
      case NodeKind::kPow:
        if (is_integer_constant(e.exponent())) {
          collect(e.base());
          return;
        }
        [[fallthrough]];
      case NodeKind::kFunction: {
        const Expr k = kernel_of(e);
        if (is_kernel(k)) {
          add_atom(k);
        } else {
          collect(k);
        }
        return;
      }
    }
  }

  RationalFunction atom(const Expr& a) const {
    return RationalFunction(Polynomial::variable(atoms_.size(), index_.at(a)));
  }

  RationalFunction convert(const Expr& e) {
    const std::size_t n = atoms_.size();
    switch (e.kind()) {
      case NodeKind::kConstant:
        return RationalFunction(Polynomial::constant(n, e.value()));
      case NodeKind::kSymbol:
        return atom(e);
      case NodeKind::kAdd: {
        RationalFunction sum(n);
        for (const Expr& o : e.operands()) sum = sum + convert(o);
        return sum;
      }
      case NodeKind::kMul: {
        RationalFunction product(Polynomial::constant(n, Rational(1)));
        for (const Expr& o : e.operands()) product = product * convert(o);
        return product;
      }
      case NodeKind::kPow:
        if (is_integer_constant(e.exponent())) {
          return convert(e.base()).pow(static_cast<int>(e.exponent().value().get_num().get_si()));
        }
        [[fallthrough]];
      case NodeKind::kFunction: {
        const Expr k = kernel_of(e);
        const int p = e.is_pow() && e.exponent().is_constant() ? root_power(e) : 1;
        RationalFunction base = is_kernel(k) ? atom(k) : convert(k);
        return p == 1 ? base : base.pow(p);
      }
    }
    return RationalFunction(n);
  }

  std::vector<Expr> atoms_;
  std::unordered_map<Expr, std::size_t> index_;
  std::unordered_map<Expr, Expr> kernels_;
};

}  // namespace

RationalForm to_rational_form(const Expr& e) { return Converter(e).convert_root(e); }

Expr polynomial_to_expr(const Polynomial& p, const std::vector<Expr>& atoms) {
  std::vector<Expr> terms;
  terms.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Expr> factors{Expr(c)};
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) factors.push_back(pow(atoms[i], Expr(static_cast<long>(m[i]))));
    }
    terms.push_back(mul(std::move(factors)));
  }
  return add(std::move(terms));
}

Expr from_rational_form(const RationalForm& form) {
  Expr num = polynomial_to_expr(form.value.numerator(), form.atoms);
  if (form.value.denominator().is_constant()) return num;
  return num / polynomial_to_expr(form.value.denominator(), form.atoms);
}

Expr simplify(const Expr& e) {
  if (e.is_constant() || e.is_symbol()) return e;
  return from_rational_form(to_rational_form(e));
}

}  // namespace poisson
