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

#include "poisson/evaluate.hpp"

#include "poisson/errors.hpp"

namespace poisson {
namespace {

struct OffDomain {};

class Evaluator {
 public:
  explicit Evaluator(const std::map<std::string, HighPrecision>& point) : point_(point) {}

  HighPrecision eval(const Expr& e) {
    HighPrecision v = eval_node(e);
    if (!boost::multiprecision::isfinite(v)) throw OffDomain{};
    return v;
  }

  HighPrecision magnitude() const { return magnitude_; }

 private:
  void note(const HighPrecision& v) {
    const HighPrecision a = abs(v);
    if (a > magnitude_) magnitude_ = a;
  }

  HighPrecision eval_node(const Expr& e) {
    switch (e.kind()) {
      case NodeKind::kConstant:
        return to_high_precision(e.value());
      case NodeKind::kSymbol: {
        auto it = point_.find(e.name());
        if (it == point_.end()) throw PreconditionError("no value for symbol '" + e.name() + "'");
        return it->second;
      }
      case NodeKind::kAdd: {
        HighPrecision sum = 0;
        for (const Expr& t : e.operands()) {
          HighPrecision v = eval(t);
          note(v);
          sum += v;
        }
        return sum;
      }
      case NodeKind::kMul: {
        HighPrecision product = 1;
        for (const Expr& f : e.operands()) product *= eval(f);
        return product;
      }
      case NodeKind::kPow: {
        const HighPrecision b = eval(e.base());
        const Expr& x = e.exponent();
        if (x.is_constant() && is_integer(x.value()) && x.value().get_num().fits_slong_p()) {
          const long n = x.value().get_num().get_si();
          if (b == 0 && n < 0) throw OffDomain{};
          return boost::multiprecision::pow(b, n);
        }
        const HighPrecision p = eval(x);
        if (b < 0) throw OffDomain{};
        if (b == 0) {
          if (p <= 0) throw OffDomain{};
          return 0;
        }
        return boost::multiprecision::exp(p * boost::multiprecision::log(b));
      }
      case NodeKind::kFunction: {
        const HighPrecision u = eval(e.argument());
        switch (e.function()) {
          case Function::kSin:
            return boost::multiprecision::sin(u);
          case Function::kCos:
            return boost::multiprecision::cos(u);
          case Function::kTan: {
            const HighPrecision c = boost::multiprecision::cos(u);
            if (abs(c) < HighPrecision("1e-30")) throw OffDomain{};
            return boost::multiprecision::sin(u) / c;
          }
          case Function::kExp:
            if (u > 10000) throw OffDomain{};
            return boost::multiprecision::exp(u);
          case Function::kLog:
            if (u <= 0) throw OffDomain{};
            return boost::multiprecision::log(u);
          case Function::kSqrt:
            if (u < 0) throw OffDomain{};
            return boost::multiprecision::sqrt(u);
        }
      }
    }
    return 0;
  }

  const std::map<std::string, HighPrecision>& point_;
  HighPrecision magnitude_ = 0;
};

}  // namespace

HighPrecision to_high_precision(const Rational& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    return HighPrecision(q.get_num().get_si()) / HighPrecision(q.get_den().get_si());
  }
  return HighPrecision(q.get_num().get_str()) / HighPrecision(q.get_den().get_str());
}

std::optional<Evaluation> evaluate_high_precision(
    const Expr& e, const std::map<std::string, HighPrecision>& point) {
  Evaluator evaluator(point);
  try {
    HighPrecision v = evaluator.eval(e);
    HighPrecision m = evaluator.magnitude();
    if (abs(v) > m) m = abs(v);
    return Evaluation{v, m};
  } catch (const OffDomain&) {
    return std::nullopt;
  }
}

double evaluate(const Expr& e, const std::map<std::string, double>& point) {
  std::map<std::string, HighPrecision> hp;
  for (const auto& [name, v] : point) hp.emplace(name, HighPrecision(v));
  auto result = evaluate_high_precision(e, hp);
  if (!result) throw PreconditionError("expression is not defined at the given point");
  return static_cast<double>(result->value);
}

}  // namespace poisson
