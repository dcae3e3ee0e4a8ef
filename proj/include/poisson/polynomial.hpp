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

#ifndef POISSON_POLYNOMIAL_HPP
#define POISSON_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poisson/rational.hpp"

namespace poisson {

// Exponent vector, one entry per variable.
using Monomial = std::vector<int>;

// Sparse multivariate polynomial with rational coefficients over a fixed
// number of variables. Terms are stored in lexicographic monomial order, so
// the leading term is the last entry.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}
  static Polynomial constant(std::size_t variables, const Rational& c);
  static Polynomial variable(std::size_t variables, std::size_t index);

  [[nodiscard]] std::size_t variables() const { return variables_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational constant_value() const;  // requires is_constant()

  [[nodiscard]] const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  [[nodiscard]] const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  [[nodiscard]] int degree_in(std::size_t v) const;
  [[nodiscard]] int total_degree() const;

  // Coefficients with respect to variable v; the keys are powers of v and the
  // values no longer contain v.
  [[nodiscard]] std::map<int, Polynomial> coefficients_in(std::size_t v) const;
  [[nodiscard]] Polynomial leading_coefficient_in(std::size_t v) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c);
  friend Polynomial operator-(Polynomial a) { return a * Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  [[nodiscard]] Polynomial pow(unsigned n) const;
  [[nodiscard]] Polynomial shifted(std::size_t v, int k) const;  // times v**k

  // Rational content: the positive rational c with this/c integral and primitive.
  [[nodiscard]] Rational content() const;

 private:
  std::size_t variables_;
  Terms terms_;
};

// Quotient a/b when b divides a exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

// Greatest common divisor, normalized to an integral primitive polynomial with
// positive leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Scales p to an integral primitive polynomial with positive leading
// coefficient and returns the factor removed (p == factor * result).
Rational normalize_primitive(Polynomial& p);

// num/den kept in lowest terms with den integral, primitive and positive.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t variables = 0);
  explicit RationalFunction(Polynomial numerator);
  RationalFunction(Polynomial numerator, Polynomial denominator);  // throws on den == 0

  [[nodiscard]] const Polynomial& numerator() const { return num_; }
  [[nodiscard]] const Polynomial& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  [[nodiscard]] RationalFunction pow(int n) const;

 private:
  void cancel();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace poisson

#endif  // POISSON_POLYNOMIAL_HPP
