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

#include "poisson/expr.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <variant>

#include "poisson/errors.hpp"

namespace poisson {

struct ExprNode {
  NodeKind kind;
  std::variant<std::monostate, Rational, std::string> payload;
  Function function = Function::kSin;
  std::vector<Expr> args;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_rational(const Rational& q) {
  const auto limb = [](const mpz_class& z) -> std::size_t {
    return z.get_mpz_t()->_mp_size == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
  };
  return mix(mix(limb(q.get_num()), limb(q.get_den())),
             static_cast<std::size_t>(sgn(q) + 1));
}

}  // namespace

std::string_view function_name(Function f) {
  switch (f) {
    case Function::kSin:
      return "sin";
    case Function::kCos:
      return "cos";
    case Function::kTan:
      return "tan";
    case Function::kExp:
      return "exp";
    case Function::kLog:
      return "log";
    case Function::kSqrt:
      return "sqrt";
  }
  return "?";
}

// Builds nodes without normalizing; callers guarantee the invariants.
struct ExprFactory {
  static Expr constant(Rational value) {
    value.canonicalize();
    auto node = std::make_shared<ExprNode>();
    node->kind = NodeKind::kConstant;
    node->hash = mix(1, hash_rational(value));
    node->payload = std::move(value);
    return Expr(std::move(node));
  }
  static Expr symbol(std::string name) {
    auto node = std::make_shared<ExprNode>();
    node->kind = NodeKind::kSymbol;
    node->hash = mix(2, std::hash<std::string>{}(name));
    node->payload = std::move(name);
    return Expr(std::move(node));
  }
  static Expr compound(NodeKind kind, std::vector<Expr> args,
                       Function f = Function::kSin) {
    auto node = std::make_shared<ExprNode>();
    node->kind = kind;
    node->function = f;
    std::size_t h = mix(static_cast<std::size_t>(kind) + 3, static_cast<std::size_t>(f));
    for (const Expr& a : args) h = mix(h, a.hash());
    node->hash = h;
    node->args = std::move(args);
    return Expr(std::move(node));
  }
};

namespace {

const Expr& zero_expr() {
  static const Expr zero = ExprFactory::constant(Rational(0));
  return zero;
}

const Expr& one_expr() {
  static const Expr one = ExprFactory::constant(Rational(1));
  return one;
}

// Splits c*rest; c == 1 when there is no numeric factor.
std::pair<Rational, Expr> split_coefficient(const Expr& term) {
  if (term.is_mul() && term.operands().front().is_constant()) {
    const auto& ops = term.operands();
    if (ops.size() == 2) return {ops[0].value(), ops[1]};
    std::vector<Expr> rest(ops.begin() + 1, ops.end());
    return {ops[0].value(), ExprFactory::compound(NodeKind::kMul, std::move(rest))};
  }
  return {Rational(1), term};
}

Expr with_coefficient(const Rational& c, const Expr& rest) {
  if (c == 1) return rest;
  std::vector<Expr> ops;
  ops.push_back(ExprFactory::constant(c));
  if (rest.is_mul()) {
    ops.insert(ops.end(), rest.operands().begin(), rest.operands().end());
  } else {
    ops.push_back(rest);
  }
  return ExprFactory::compound(NodeKind::kMul, std::move(ops));
}

// Rational power with integer exponent.
Rational rational_power(const Rational& base, long exponent) {
  if (base == 0) {
    if (exponent < 0) throw PreconditionError("division by zero");
    return exponent == 0 ? Rational(1) : Rational(0);
  }
  const unsigned long n = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), n);
  Rational out = exponent < 0 ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

// Exact r-th root of a non-negative integer, if one exists.
bool exact_root(const Integer& value, unsigned long r, Integer& root) {
  if (value < 0) return false;
  return mpz_root(root.get_mpz_t(), value.get_mpz_t(), r) != 0;
}

}  // namespace

Expr::Expr() : node_(zero_expr().node_) {}
Expr::Expr(const Rational& value) : Expr(ExprFactory::constant(value)) {}
Expr::Expr(long value) : Expr(ExprFactory::constant(Rational(value))) {}

Expr Expr::symbol(std::string name) { return ExprFactory::symbol(std::move(name)); }

NodeKind Expr::kind() const { return node_->kind; }
bool Expr::is_zero_constant() const { return is_constant() && value() == 0; }
bool Expr::is_one_constant() const { return is_constant() && value() == 1; }
const Rational& Expr::value() const { return std::get<Rational>(node_->payload); }
const std::string& Expr::name() const { return std::get<std::string>(node_->payload); }
const std::vector<Expr>& Expr::operands() const { return node_->args; }
const Expr& Expr::base() const { return node_->args[0]; }
const Expr& Expr::exponent() const { return node_->args[1]; }
Function Expr::function() const { return node_->function; }
const Expr& Expr::argument() const { return node_->args[0]; }
std::size_t Expr::hash() const { return node_->hash; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

bool natural_less(std::string_view a, std::string_view b) {
  const auto split = [](std::string_view s) {
    std::size_t cut = s.size();
    while (cut > 0 && s[cut - 1] >= '0' && s[cut - 1] <= '9') --cut;
    return std::pair{s.substr(0, cut), s.substr(cut)};
  };
  const auto [pa, da] = split(a);
  const auto [pb, db] = split(b);
  if (pa != pb) return pa < pb;
  if (da.empty() || db.empty()) return da.size() < db.size();
  // Compare the numeric suffixes by length first, which avoids overflow.
  const auto trim = [](std::string_view d) {
    while (d.size() > 1 && d.front() == '0') d.remove_prefix(1);
    return d;
  };
  const auto ta = trim(da);
  const auto tb = trim(db);
  if (ta.size() != tb.size()) return ta.size() < tb.size();
  if (ta != tb) return ta < tb;
  return da < db;
}

int compare(const Expr& a, const Expr& b) {
  if (&a == &b) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case NodeKind::kConstant:
      return cmp(a.value(), b.value()) < 0 ? -1 : (a.value() == b.value() ? 0 : 1);
    case NodeKind::kSymbol:
      if (a.name() == b.name()) return 0;
      return natural_less(a.name(), b.name()) ? -1 : 1;
    case NodeKind::kFunction:
      if (a.function() != b.function()) return a.function() < b.function() ? -1 : 1;
      return compare(a.argument(), b.argument());
    case NodeKind::kAdd:
    case NodeKind::kMul:
    case NodeKind::kPow: {
      const auto& x = a.operands();
      const auto& y = b.operands();
      const std::size_t n = std::min(x.size(), y.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i].hash() == y[i].hash() && x[i] == y[i]) continue;
        const int c = compare(x[i], y[i]);
        if (c != 0) return c;
      }
      if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

Expr add(std::vector<Expr> terms) {
  Rational constant = 0;
  std::map<Expr, Rational, ExprLess> collected;
  const auto absorb = [&](const Expr& t) {
    if (t.is_constant()) {
      constant += t.value();
      return;
    }
    auto [c, rest] = split_coefficient(t);
    auto [it, inserted] = collected.try_emplace(rest, c);
    if (!inserted) it->second += c;
  };
  for (const Expr& t : terms) {
    if (t.is_add()) {
      for (const Expr& inner : t.operands()) absorb(inner);
    } else {
      absorb(t);
    }
  }
  std::vector<Expr> out;
  out.reserve(collected.size() + 1);
  if (constant != 0) out.push_back(ExprFactory::constant(constant));
  for (const auto& [rest, c] : collected) {
    if (c != 0) out.push_back(with_coefficient(c, rest));
  }
  if (out.empty()) return zero_expr();
  if (out.size() == 1) return out.front();
  std::sort(out.begin(), out.end(), ExprLess{});
  return ExprFactory::compound(NodeKind::kAdd, std::move(out));
}

Expr mul(std::vector<Expr> factors) {
  Rational coefficient = 1;
  std::map<Expr, std::vector<Expr>, ExprLess> exponents;
  const auto absorb = [&](const Expr& f) {
    if (f.is_constant()) {
      coefficient *= f.value();
      return;
    }
    if (f.is_pow()) {
      exponents[f.base()].push_back(f.exponent());
    } else {
      exponents[f].push_back(one_expr());
    }
  };
  for (const Expr& f : factors) {
    if (f.is_mul()) {
      for (const Expr& inner : f.operands()) absorb(inner);
    } else {
      absorb(f);
    }
  }
  if (coefficient == 0) return zero_expr();

  std::vector<Expr> out;
  std::vector<Expr> regroup;
  for (auto& [base, exps] : exponents) {
    const Expr e = exps.size() == 1 ? exps.front() : add(exps);
    const Expr p = pow(base, e);
    if (p.is_constant()) {
      coefficient *= p.value();
    } else if (p.is_mul()) {
      regroup.push_back(p);
    } else {
      out.push_back(p);
    }
  }
  if (coefficient == 0) return zero_expr();
  if (!regroup.empty()) {
    out.push_back(ExprFactory::constant(coefficient));
    out.insert(out.end(), regroup.begin(), regroup.end());
    return mul(std::move(out));
  }
  if (out.empty()) return ExprFactory::constant(coefficient);
  if (out.size() == 1) {
    if (coefficient == 1) return out.front();
    if (out.front().is_add()) {
      std::vector<Expr> distributed;
      distributed.reserve(out.front().operands().size());
      for (const Expr& t : out.front().operands()) {
        auto [c, rest] = split_coefficient(t);
        if (t.is_constant()) {
          distributed.push_back(ExprFactory::constant(coefficient * t.value()));
        } else {
          distributed.push_back(with_coefficient(coefficient * c, rest));
        }
      }
      return add(std::move(distributed));
    }
  }
  std::sort(out.begin(), out.end(), ExprLess{});
  if (coefficient != 1) out.insert(out.begin(), ExprFactory::constant(coefficient));
  return ExprFactory::compound(NodeKind::kMul, std::move(out));
}

Expr pow(const Expr& base, const Expr& exponent) {
  if (exponent.is_constant()) {
    const Rational& q = exponent.value();
    if (q == 0) return one_expr();
    if (q == 1) return base;
    if (base.is_constant()) {
      const Rational& b = base.value();
      if (is_integer(q)) {
        if (!q.get_num().fits_slong_p()) {
          if (b == 0 || b == 1) return rational_power(b, q > 0 ? 1 : -1);
          throw PreconditionError("exponent too large");
        }
        return ExprFactory::constant(rational_power(b, q.get_num().get_si()));
      }
      if (b == 0) {
        if (q < 0) throw PreconditionError("division by zero");
        return zero_expr();
      }
      if (b == 1) return one_expr();
      if (b > 0 && q.get_den().fits_ulong_p() && q.get_num().fits_slong_p()) {
        const unsigned long r = q.get_den().get_ui();
        Integer rn, rd;
        if (exact_root(b.get_num(), r, rn) && exact_root(b.get_den(), r, rd)) {
          Rational root(rn, rd);
          root.canonicalize();
          return ExprFactory::constant(rational_power(root, q.get_num().get_si()));
        }
      }
      return ExprFactory::compound(NodeKind::kPow, {base, exponent});
    }
    if (is_integer(q)) {
      if (base.is_pow()) {
        return pow(base.base(), mul({base.exponent(), exponent}));
      }
      if (base.is_mul()) {
        std::vector<Expr> powered;
        powered.reserve(base.operands().size());
        for (const Expr& f : base.operands()) powered.push_back(pow(f, exponent));
        return mul(std::move(powered));
      }
    }
    return ExprFactory::compound(NodeKind::kPow, {base, exponent});
  }
  if (base.is_one_constant()) return one_expr();
  return ExprFactory::compound(NodeKind::kPow, {base, exponent});
}

Expr apply(Function f, const Expr& argument) {
  if (argument.is_constant()) {
    const Rational& v = argument.value();
    switch (f) {
      case Function::kSin:
      case Function::kTan:
        if (v == 0) return zero_expr();
        break;
      case Function::kCos:
      case Function::kExp:
        if (v == 0) return one_expr();
        break;
      case Function::kLog:
        if (v <= 0) throw PreconditionError("logarithm of a non-positive constant");
        if (v == 1) return zero_expr();
        break;
      case Function::kSqrt: {
        if (v < 0) throw PreconditionError("square root of a negative constant");
        Integer rn, rd;
        if (exact_root(v.get_num(), 2, rn) && exact_root(v.get_den(), 2, rd)) {
          Rational root(rn, rd);
          root.canonicalize();
          return ExprFactory::constant(root);
        }
        break;
      }
    }
  }
  return ExprFactory::compound(NodeKind::kFunction, {argument}, f);
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero_constant()) return b;
  if (b.is_zero_constant()) return a;
  return add({a, b});
}

Expr operator-(const Expr& a, const Expr& b) {
  if (b.is_zero_constant()) return a;
  return add({a, mul({Expr(-1), b})});
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_one_constant()) return b;
  if (b.is_one_constant()) return a;
  return mul({a, b});
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero_constant()) throw PreconditionError("division by zero");
  if (b.is_one_constant()) return a;
  return mul({a, pow(b, Expr(-1))});
}

Expr operator-(const Expr& a) { return mul({Expr(-1), a}); }

Expr& operator+=(Expr& a, const Expr& b) { return a = a + b; }
Expr& operator-=(Expr& a, const Expr& b) { return a = a - b; }
Expr& operator*=(Expr& a, const Expr& b) { return a = a * b; }

Expr substitute(const Expr& e, const std::map<std::string, Expr>& replacements) {
  switch (e.kind()) {
    case NodeKind::kConstant:
      return e;
    case NodeKind::kSymbol: {
      auto it = replacements.find(e.name());
      return it == replacements.end() ? e : it->second;
    }
    case NodeKind::kAdd:
    case NodeKind::kMul: {
      std::vector<Expr> ops;
      ops.reserve(e.operands().size());
      for (const Expr& op : e.operands()) ops.push_back(substitute(op, replacements));
      return e.is_add() ? add(std::move(ops)) : mul(std::move(ops));
    }
    case NodeKind::kPow:
      return pow(substitute(e.base(), replacements), substitute(e.exponent(), replacements));
    case NodeKind::kFunction:
      return apply(e.function(), substitute(e.argument(), replacements));
  }
  return e;
}

namespace {

void collect_symbols(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case NodeKind::kConstant:
      return;
    case NodeKind::kSymbol:
      out.insert(e.name());
      return;
    default:
      for (const Expr& op : e.operands()) collect_symbols(op, out);
  }
}

}  // namespace

std::vector<std::string> free_symbols(const Expr& e) {
  std::set<std::string> names;
  collect_symbols(e, names);
  std::vector<std::string> out(names.begin(), names.end());
  std::sort(out.begin(), out.end(),
            [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  return out;
}

bool contains_function_or_radical(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::kConstant:
    case NodeKind::kSymbol:
      return false;
    case NodeKind::kFunction:
      return true;
    case NodeKind::kPow:
      if (!e.exponent().is_constant() || !is_integer(e.exponent().value())) return true;
      return contains_function_or_radical(e.base());
    default:
      for (const Expr& op : e.operands()) {
        if (contains_function_or_radical(op)) return true;
      }
      return false;
  }
}

}  // namespace poisson
