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

#ifndef POISSON_EXPR_HPP
#define POISSON_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "poisson/rational.hpp"

namespace poisson {

enum class NodeKind : std::uint8_t { kConstant, kSymbol, kAdd, kMul, kPow, kFunction };

// The closed set of elementary functions. Anything else is a parse error.
enum class Function : std::uint8_t { kSin, kCos, kTan, kExp, kLog, kSqrt };

std::string_view function_name(Function f);

class Expr;
struct ExprNode;

// Immutable symbolic scalar. Copies share the underlying tree.
//
// Every tree is construction-normalized: sums and products are flattened,
// rational constants are folded, like terms and like bases are collected,
// operands are kept in a canonical order, and the degenerate shapes e+0, e*1,
// e*0, e**1, e**0 never appear. Structural equality (operator==) is therefore
// meaningful, but semantic equality is decided by equals()/is_zero().
class Expr {
 public:
  Expr();  // the constant 0
  Expr(const Rational& value);  // NOLINT(google-explicit-constructor)
  Expr(long value);             // NOLINT(google-explicit-constructor)
  Expr(int value) : Expr(static_cast<long>(value)) {}  // NOLINT

  static Expr symbol(std::string name);

  [[nodiscard]] NodeKind kind() const;
  [[nodiscard]] bool is_constant() const { return kind() == NodeKind::kConstant; }
  [[nodiscard]] bool is_symbol() const { return kind() == NodeKind::kSymbol; }
  [[nodiscard]] bool is_add() const { return kind() == NodeKind::kAdd; }
  [[nodiscard]] bool is_mul() const { return kind() == NodeKind::kMul; }
  [[nodiscard]] bool is_pow() const { return kind() == NodeKind::kPow; }
  [[nodiscard]] bool is_function() const { return kind() == NodeKind::kFunction; }
  [[nodiscard]] bool is_zero_constant() const;
  [[nodiscard]] bool is_one_constant() const;

  // Valid only for the matching kind.
  [[nodiscard]] const Rational& value() const;
  [[nodiscard]] const std::string& name() const;
  [[nodiscard]] const std::vector<Expr>& operands() const;  // add, mul
  [[nodiscard]] const Expr& base() const;                   // pow
  [[nodiscard]] const Expr& exponent() const;               // pow
  [[nodiscard]] Function function() const;                  // function
  [[nodiscard]] const Expr& argument() const;               // function

  [[nodiscard]] std::size_t hash() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  friend struct ExprFactory;
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

// Total order on trees; used for canonical operand order and as a map key.
int compare(const Expr& a, const Expr& b);
struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

// Natural order on identifiers: "x2" < "x10".
bool natural_less(std::string_view a, std::string_view b);

Expr add(std::vector<Expr> terms);
Expr mul(std::vector<Expr> factors);
Expr pow(const Expr& base, const Expr& exponent);
Expr apply(Function f, const Expr& argument);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr& operator+=(Expr& a, const Expr& b);
Expr& operator-=(Expr& a, const Expr& b);
Expr& operator*=(Expr& a, const Expr& b);

inline Expr sin(const Expr& e) { return apply(Function::kSin, e); }
inline Expr cos(const Expr& e) { return apply(Function::kCos, e); }
inline Expr tan(const Expr& e) { return apply(Function::kTan, e); }
inline Expr exp(const Expr& e) { return apply(Function::kExp, e); }
inline Expr log(const Expr& e) { return apply(Function::kLog, e); }
inline Expr sqrt(const Expr& e) { return apply(Function::kSqrt, e); }

// Partial derivative with respect to the symbol `variable`; every other symbol
// is held constant.
Expr diff(const Expr& e, std::string_view variable);
Expr diff(const Expr& e, const Expr& variable_symbol);

// Simultaneous replacement of symbols by expressions.
Expr substitute(const Expr& e, const std::map<std::string, Expr>& replacements);

// All symbol names occurring in e, in natural order.
std::vector<std::string> free_symbols(const Expr& e);
bool contains_function_or_radical(const Expr& e);

// Canonical infix text in the input syntax; parse(to_string(e)) == e up to
// equals().
std::string to_string(const Expr& e);
std::string to_latex(const Expr& e);
// "x12" -> "x_{12}", "alpha" -> "alpha".
std::string latex_symbol(std::string_view name);

}  // namespace poisson

template <>
struct std::hash<poisson::Expr> {
  std::size_t operator()(const poisson::Expr& e) const noexcept { return e.hash(); }
};

#endif  // POISSON_EXPR_HPP
