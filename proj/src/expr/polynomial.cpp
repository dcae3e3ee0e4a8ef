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

#include "poisson/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "poisson/errors.hpp"

namespace poisson {

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Monomial(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  Polynomial p(variables);
  Monomial m(variables, 0);
  m[index] = 1;
  p.add_term(m, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rational Polynomial::constant_value() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Polynomial::degree_in(std::size_t v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::map<int, Polynomial> Polynomial::coefficients_in(std::size_t v) const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    Monomial stripped = m;
    stripped[v] = 0;
    auto [it, inserted] = out.try_emplace(m[v], variables_);
    it->second.add_term(stripped, c);
  }
  return out;
}

Polynomial Polynomial::leading_coefficient_in(std::size_t v) const {
  Polynomial out(variables_);
  const int d = degree_in(v);
  for (const auto& [m, c] : terms_) {
    if (m[v] != d) continue;
    Monomial stripped = m;
    stripped[v] = 0;
    out.add_term(stripped, c);
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.variables_, b.variables_));
  Monomial m(out.variables_, 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(Polynomial a, const Rational& c) {
  if (c == 0) return Polynomial(a.variables_);
  for (auto& [m, coeff] : a.terms_) coeff *= c;
  return a;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(variables_, Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(std::size_t v, int k) const {
  Polynomial out(variables_);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    s[v] += k;
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

Rational Polynomial::content() const {
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  if (num_gcd == 0) return Rational(0);
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

Rational normalize_primitive(Polynomial& p) {
  if (p.is_zero()) return Rational(0);
  Rational factor = p.content();
  if (p.leading_coefficient() < 0) factor = -factor;
  if (factor != 1) p = p * Rational(1 / factor);
  return factor;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const std::size_t n = std::max(a.variables(), b.variables());
  Polynomial quotient(n);
  Polynomial rest = a;
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  Monomial t(n, 0);
  while (!rest.is_zero()) {
    const Monomial& lr = rest.leading_monomial();
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = lr[i] - lb[i];
      if (t[i] < 0) return std::nullopt;
    }
    Polynomial term(n);
    term.add_term(t, rest.leading_coefficient() / cb);
    quotient += term;
    rest -= term * b;
  }
  return quotient;
}

namespace {

Polynomial one_like(const Polynomial& p) { return Polynomial::constant(p.variables(), Rational(1)); }

Polynomial content_in(const Polynomial& p, std::size_t v);

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw PreconditionError("internal error: inexact polynomial division");
  return *std::move(q);
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t v) {
  Polynomial out = exact_quotient(p, content_in(p, v));
  normalize_primitive(out);
  return out;
}

// Lazy pseudo-remainder of a by b with respect to v.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t v) {
  const int db = b.degree_in(v);
  const Polynomial lb = b.leading_coefficient_in(v);
  while (!a.is_zero()) {
    const int da = a.degree_in(v);
    if (da < db) break;
    const Polynomial la = a.leading_coefficient_in(v);
    a = lb * a - la * b.shifted(v, da - db);
    normalize_primitive(a);
  }
  return a;
}

// gcd of two polynomials that are primitive with respect to v and have
// positive degree in v.
Polynomial primitive_gcd(Polynomial a, Polynomial b, std::size_t v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (true) {
    Polynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return b;
    if (r.degree_in(v) == 0) return one_like(a);
    a = std::move(b);
    b = primitive_part_in(r, v);
  }
}

Polynomial content_in(const Polynomial& p, std::size_t v) {
  Polynomial g(p.variables());
  for (auto& [power, coefficient] : p.coefficients_in(v)) {
    g = gcd(g, coefficient);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

std::optional<std::size_t> first_variable(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.variables(), b.variables());
  for (std::size_t v = 0; v < n; ++v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return std::nullopt;
}

Integer integer_content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

Integer max_norm(const Polynomial& p) {
  Integer n = 0;
  for (const auto& [m, c] : p.terms()) {
    const Integer a = abs(c.get_num());
    if (a > n) n = a;
  }
  return n;
}

Polynomial evaluate_at(const Polynomial& p, std::size_t v, const Integer& x) {
  Polynomial out(p.variables());
  std::vector<Integer> powers{Integer(1)};
  for (const auto& [m, c] : p.terms()) {
    while (powers.size() <= static_cast<std::size_t>(m[v])) powers.push_back(powers.back() * x);
    Monomial reduced = m;
    reduced[v] = 0;
    out.add_term(reduced, c * Rational(powers[static_cast<std::size_t>(m[v])]));
  }
  return out;
}

// Recovers the polynomial in v whose value at v = x is h, reading the
// coefficients as balanced residues modulo x.
Polynomial interpolate(Polynomial h, std::size_t v, const Integer& x) {
  Polynomial out(h.variables());
  const Integer half = x / 2;
  const Rational inverse(Integer(1), x);
  for (int power = 0; !h.is_zero(); ++power) {
    Polynomial digit(h.variables());
    for (const auto& [m, c] : h.terms()) {
      Integer r;
      mpz_mod(r.get_mpz_t(), c.get_num_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      if (r == 0) continue;
      digit.add_term(m, Rational(r));
      Monomial lifted = m;
      lifted[v] = power;
      out.add_term(lifted, Rational(r));
    }
    h = (h - digit) * inverse;
  }
  return out;
}

bool divides(const Polynomial& d, const Polynomial& p) { return divide_exact(p, d).has_value(); }

constexpr int kHeuristicAttempts = 6;
constexpr std::size_t kHeuristicMaxBits = 4096;

// Heuristic gcd of two integral polynomials: evaluate the first variable at a
// large integer, recurse, and interpolate the image back; every candidate is
// checked by exact division. nullopt when no candidate survives.
std::optional<Polynomial> heuristic_gcd(Polynomial f, Polynomial g) {
  const Integer fc = integer_content(f);
  const Integer gc = integer_content(g);
  Integer common;
  mpz_gcd(common.get_mpz_t(), fc.get_mpz_t(), gc.get_mpz_t());
  const std::optional<std::size_t> first = first_variable(f, g);
  if (!first) return Polynomial::constant(f.variables(), Rational(common));
  const std::size_t v = *first;
  if (f.degree_in(v) == 0 || g.degree_in(v) == 0) return std::nullopt;
  f = f * Rational(Integer(1), common);
  g = g * Rational(Integer(1), common);

  const Integer fn = max_norm(f);
  const Integer gn = max_norm(g);
  const Integer b = 2 * std::min(fn, gn) + 29;
  Integer x = std::max<Integer>(std::min<Integer>(b, 99 * Integer(sqrt(b))),
                                2 * std::min<Integer>(fn / abs(f.leading_coefficient().get_num()),
                                                      gn / abs(g.leading_coefficient().get_num())) +
                                    2);
  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    if (mpz_sizeinbase(x.get_mpz_t(), 2) > kHeuristicMaxBits) break;
    const Polynomial ff = evaluate_at(f, v, x);
    const Polynomial gg = evaluate_at(g, v, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      if (auto image = heuristic_gcd(ff, gg)) {
        Polynomial h = interpolate(*image, v, x);
        normalize_primitive(h);
        if (!h.is_zero() && divides(h, f) && divides(h, g)) return h * Rational(common);
        // The cofactor images sometimes interpolate where the gcd image does not.
        for (const Polynomial* pair : {&f, &g}) {
          const Polynomial& image_of = pair == &f ? ff : gg;
          if (auto cofactor_image = divide_exact(image_of, *image)) {
            Polynomial cofactor = interpolate(*cofactor_image, v, x);
            if (cofactor.is_zero()) continue;
            if (auto candidate = divide_exact(*pair, cofactor)) {
              normalize_primitive(*candidate);
              const Polynomial& other = pair == &f ? g : f;
              if (!candidate->is_zero() && divides(*candidate, other)) return *candidate * Rational(common);
            }
          }
        }
      }
    }
    x = 73794 * x * Integer(sqrt(Integer(sqrt(x)))) / 27011;
  }
  return std::nullopt;
}

Polynomial prs_gcd(const Polynomial& a, const Polynomial& b) {
  const std::size_t v = *first_variable(a, b);
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);
  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  Polynomial g = gcd(ca, cb) * primitive_gcd(primitive_part_in(a, v), primitive_part_in(b, v), v);
  normalize_primitive(g);
  return g;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    Polynomial g = a.is_zero() ? b : a;
    normalize_primitive(g);
    return g;
  }
  if (a.is_constant() || b.is_constant()) return one_like(a);
  Polynomial pa = a;
  Polynomial pb = b;
  normalize_primitive(pa);
  normalize_primitive(pb);
  if (pa == pb) return pa;
  if (auto g = heuristic_gcd(pa, pb)) {
    normalize_primitive(*g);
    return *std::move(g);
  }
  return prs_gcd(pa, pb);
}

RationalFunction::RationalFunction(std::size_t variables)
    : num_(variables), den_(Polynomial::constant(variables, Rational(1))) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(num_.variables(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw PreconditionError("division by zero");
  cancel();
}

void RationalFunction::cancel() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(den_.variables(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  const Rational factor = normalize_primitive(den_);
  if (factor != 1) num_ = num_ * Rational(1 / factor);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  const Polynomial g = gcd(a.den_, b.den_);
  const Polynomial ca = exact_quotient(b.den_, g);
  const Polynomial cb = exact_quotient(a.den_, g);
  return RationalFunction(a.num_ * ca + b.num_ * cb, a.den_ * ca);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction nb = b;
  nb.num_ = -nb.num_;
  return a + nb;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw PreconditionError("division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(int n) const {
  if (n == 0) return RationalFunction(Polynomial::constant(num_.variables(), Rational(1)));
  if (n < 0) {
    if (is_zero()) throw PreconditionError("division by zero");
    return RationalFunction(den_.pow(static_cast<unsigned>(-n)), num_.pow(static_cast<unsigned>(-n)));
  }
  RationalFunction out(num_.variables());
  out.num_ = num_.pow(static_cast<unsigned>(n));
  out.den_ = den_.pow(static_cast<unsigned>(n));
  return out;
}

}  // namespace poisson
