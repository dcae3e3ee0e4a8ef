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
#include <string>
#include <utility>
#include <vector>

#include "poisson/expr.hpp"

namespace poisson {
namespace {

enum Precedence { kAddPrec = 1, kMulPrec = 2, kPowPrec = 3, kAtomPrec = 4 };

bool has_negative_exponent(const Expr& e) {
  return e.is_pow() && e.exponent().is_constant() && e.exponent().value() < 0;
}

int precedence(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::kConstant:
      if (e.value() < 0) return kAddPrec;
      return is_integer(e.value()) ? kAtomPrec : kMulPrec;
    case NodeKind::kSymbol:
    case NodeKind::kFunction:
      return kAtomPrec;
    case NodeKind::kAdd:
      return kAddPrec;
    case NodeKind::kMul:
      if (e.operands().front().is_constant() && e.operands().front().value() < 0) return kAddPrec;
      return kMulPrec;
    case NodeKind::kPow:
      return has_negative_exponent(e) ? kMulPrec : kPowPrec;
  }
  return kAtomPrec;
}

// Degree used only to order printed terms.
long print_degree(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::kConstant:
      return 0;
    case NodeKind::kMul: {
      long d = 0;
      for (const Expr& f : e.operands()) d += print_degree(f);
      return d;
    }
    case NodeKind::kPow:
      if (e.exponent().is_constant() && is_integer(e.exponent().value()) &&
          e.exponent().value().get_num().fits_slong_p()) {
        return print_degree(e.base()) * e.exponent().value().get_num().get_si();
      }
      return 1;
    case NodeKind::kAdd: {
      long d = 0;
      for (const Expr& t : e.operands()) d = std::max(d, print_degree(t));
      return d;
    }
    default:
      return 1;
  }
}

// Display order for the terms of a sum: by decreasing degree, then by text,
// with the constant term last.
std::vector<Expr> print_order(const Expr& sum) {
  struct Keyed {
    Expr term;
    long degree;
    std::string text;
    std::string full;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(sum.operands().size());
  for (const Expr& t : sum.operands()) {
    std::string full = to_string(t);
    std::string text = full;
    if (!text.empty() && text.front() == '-') text.erase(0, 1);
    // Order by the monomial, not by its numeric coefficient.
    const std::size_t star = text.find('*');
    if (!t.is_constant() && star != std::string::npos &&
        text.find_first_not_of("0123456789/") == star && star > 0) {
      text.erase(0, star + 1);
    }
    keyed.push_back({t, t.is_constant() ? -1 : print_degree(t), std::move(text), std::move(full)});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.text != b.text) return a.text < b.text;
    return a.full < b.full;
  });
  std::vector<Expr> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.term));
  return out;
}

// A product split into sign, numeric coefficient, numerator and denominator.
struct ProductParts {
  bool negative = false;
  Rational coefficient = 1;
  std::vector<Expr> numerator;
  std::vector<Expr> denominator;
};

ProductParts split_product(const Expr& e) {
  ProductParts parts;
  const auto absorb = [&](const Expr& f) {
    if (f.is_constant()) {
      parts.coefficient *= f.value();
    } else if (has_negative_exponent(f)) {
      parts.denominator.push_back(pow(f.base(), Expr(Rational(-f.exponent().value()))));
    } else {
      parts.numerator.push_back(f);
    }
  };
  if (e.is_mul()) {
    for (const Expr& f : e.operands()) absorb(f);
  } else {
    absorb(e);
  }
  if (parts.coefficient < 0) {
    parts.negative = true;
    parts.coefficient = -parts.coefficient;
  }
  return parts;
}

class TextPrinter {
 public:
  std::string print(const Expr& e) {
    bool negative = false;
    std::string magnitude = print_signed(e, negative);
    return negative ? "-" + magnitude : magnitude;
  }

 private:
  std::string wrap(const Expr& e, int min_prec) {
    std::string s = print(e);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
  }

  // Prints |e| and reports the sign separately so sums can write " - ".
  std::string print_signed(const Expr& e, bool& negative) {
    switch (e.kind()) {
      case NodeKind::kConstant: {
        negative = e.value() < 0;
        return negative ? Rational(-e.value()).get_str() : e.value().get_str();
      }
      case NodeKind::kSymbol:
        return e.name();
      case NodeKind::kFunction:
        return std::string(function_name(e.function())) + "(" + print(e.argument()) + ")";
      case NodeKind::kAdd:
        return print_sum(e);
      case NodeKind::kMul:
        return print_product(e, negative);
      case NodeKind::kPow:
        if (has_negative_exponent(e)) return print_product(e, negative);
        return print_power(e);
    }
    return {};
  }

  std::string print_sum(const Expr& e) {
    std::string out;
    bool first = true;
    for (const Expr& t : print_order(e)) {
      bool negative = false;
      std::string s = print_signed(t, negative);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      out += s;
      first = false;
    }
    return out;
  }

  std::string print_product(const Expr& e, bool& negative) {
    ProductParts parts = split_product(e);
    negative = parts.negative;
    std::vector<std::string> num;
    if (parts.coefficient.get_num() != 1 || parts.numerator.empty()) {
      num.push_back(parts.coefficient.get_num().get_str());
    }
    for (const Expr& f : parts.numerator) num.push_back(wrap(f, kMulPrec));
    std::string out = join(num);
    std::vector<std::string> den;
    if (parts.coefficient.get_den() != 1) den.push_back(parts.coefficient.get_den().get_str());
    for (const Expr& f : parts.denominator) den.push_back(wrap(f, kMulPrec));
    if (den.empty()) return out;
    const bool single_atom =
        den.size() == 1 && (parts.denominator.empty() || precedence(parts.denominator.front()) >= kPowPrec ||
                               precedence(parts.denominator.front()) < kMulPrec);
    return out + "/" + (single_atom ? den.front() : "(" + join(den) + ")");
  }

  std::string print_power(const Expr& e) {
    std::string base = wrap(e.base(), kAtomPrec);
    const Expr& x = e.exponent();
    const bool plain = x.is_symbol() || x.is_function() ||
                       (x.is_constant() && is_integer(x.value()) && x.value() >= 0);
    return base + "**" + (plain ? print(x) : "(" + print(x) + ")");
  }

  static std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += "*";
      out += parts[i];
    }
    return out;
  }
};

class LatexPrinter {
 public:
  std::string print(const Expr& e) {
    bool negative = false;
    std::string magnitude = print_signed(e, negative);
    return negative ? "-" + magnitude : magnitude;
  }

 private:
  std::string wrap(const Expr& e, int min_prec) {
    std::string s = print(e);
    return precedence(e) < min_prec ? "\\left(" + s + "\\right)" : s;
  }

  std::string print_signed(const Expr& e, bool& negative) {
    switch (e.kind()) {
      case NodeKind::kConstant: {
        negative = e.value() < 0;
        Rational v = negative ? Rational(-e.value()) : e.value();
        if (is_integer(v)) return v.get_str();
        return "\\frac{" + v.get_num().get_str() + "}{" + v.get_den().get_str() + "}";
      }
      case NodeKind::kSymbol:
        return latex_symbol(e.name());
      case NodeKind::kFunction: {
        const std::string arg = print(e.argument());
        switch (e.function()) {
          case Function::kSqrt:
            return "\\sqrt{" + arg + "}";
          case Function::kExp:
            return "e^{" + arg + "}";
          default:
            return "\\" + std::string(function_name(e.function())) + "\\left(" + arg + "\\right)";
        }
      }
      case NodeKind::kAdd: {
        std::string out;
        bool first = true;
        for (const Expr& t : print_order(e)) {
          bool neg = false;
          std::string s = print_signed(t, neg);
          if (first) {
            if (neg) out += "-";
          } else {
            out += neg ? " - " : " + ";
          }
          out += s;
          first = false;
        }
        return out;
      }
      case NodeKind::kMul:
        return print_product(e, negative);
      case NodeKind::kPow: {
        if (has_negative_exponent(e)) return print_product(e, negative);
        return wrap(e.base(), kAtomPrec) + "^{" + print(e.exponent()) + "}";
      }
    }
    return {};
  }

  std::string print_product(const Expr& e, bool& negative) {
    ProductParts parts = split_product(e);
    negative = parts.negative;
    std::vector<std::string> num;
    if (parts.coefficient.get_num() != 1 || parts.numerator.empty()) {
      num.push_back(parts.coefficient.get_num().get_str());
    }
    for (const Expr& f : parts.numerator) num.push_back(wrap(f, kMulPrec));
    std::vector<std::string> den;
    if (parts.coefficient.get_den() != 1) den.push_back(parts.coefficient.get_den().get_str());
    for (const Expr& f : parts.denominator) den.push_back(wrap(f, kMulPrec));
    if (den.empty()) return join(num);
    // A lone factor needs no parentheses inside \frac.
    if (num.size() == 1 && parts.numerator.size() == 1) num.front() = print(parts.numerator.front());
    if (den.size() == 1 && parts.denominator.size() == 1) den.front() = print(parts.denominator.front());
    return "\\frac{" + join(num) + "}{" + join(den) + "}";
  }

  static std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += " ";
      out += parts[i];
    }
    return out;
  }
};

}  // namespace

std::string to_string(const Expr& e) { return TextPrinter{}.print(e); }

std::string to_latex(const Expr& e) { return LatexPrinter{}.print(e); }

std::string latex_symbol(std::string_view name) {
  std::size_t cut = name.size();
  while (cut > 0 && name[cut - 1] >= '0' && name[cut - 1] <= '9') --cut;
  std::string head;
  for (char c : name.substr(0, cut)) {
    if (c == '_') {
      head += "\\_";
    } else {
      head += c;
    }
  }
  if (cut == name.size() || cut == 0) return head.empty() ? std::string(name) : head;
  return head + "_{" + std::string(name.substr(cut)) + "}";
}

}  // namespace poisson
