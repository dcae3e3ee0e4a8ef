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

#include <vector>

#include "poisson/expr.hpp"

namespace poisson {

Expr diff(const Expr& e, const Expr& variable_symbol) { return diff(e, variable_symbol.name()); }

Expr diff(const Expr& e, std::string_view variable) {
  switch (e.kind()) {
    case NodeKind::kConstant:
      return Expr(0);
    case NodeKind::kSymbol:
      return Expr(e.name() == variable ? 1 : 0);
    case NodeKind::kAdd: {
      std::vector<Expr> terms;
      terms.reserve(e.operands().size());
      for (const Expr& t : e.operands()) terms.push_back(diff(t, variable));
      return add(std::move(terms));
    }
    case NodeKind::kMul: {
      const auto& ops = e.operands();
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        Expr d = diff(ops[i], variable);
        if (d.is_zero_constant()) continue;
        std::vector<Expr> factors(ops.begin(), ops.end());
        factors[i] = d;
        terms.push_back(mul(std::move(factors)));
      }
      return add(std::move(terms));
    }
    case NodeKind::kPow: {
      const Expr& b = e.base();
      const Expr& x = e.exponent();
      const Expr db = diff(b, variable);
      if (x.is_constant()) {
        if (db.is_zero_constant()) return Expr(0);
        return mul({x, pow(b, Expr(Rational(x.value() - 1))), db});
      }
      const Expr dx = diff(x, variable);
      if (db.is_zero_constant() && dx.is_zero_constant()) return Expr(0);
      // d(b**x) = b**x * (x' log b + x b'/b)
      return e * (dx * log(b) + x * db / b);
    }
    case NodeKind::kFunction: {
      const Expr& u = e.argument();
      const Expr du = diff(u, variable);
      if (du.is_zero_constant()) return Expr(0);
      switch (e.function()) {
        case Function::kSin:
          return cos(u) * du;
        case Function::kCos:
          return -(sin(u) * du);
        case Function::kTan:
          return (Expr(1) + pow(tan(u), Expr(2))) * du;
        case Function::kExp:
          return e * du;
        case Function::kLog:
          return du / u;
        case Function::kSqrt:
          return du / (Expr(2) * e);
      }
    }
  }
  return Expr(0);
}

}  // namespace poisson
