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

#include "poisson/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "poisson/errors.hpp"

namespace poisson {
namespace {

enum class TokenType { kNumber, kIdentifier, kPlus, kMinus, kStar, kSlash, kPower, kLParen, kRParen, kEnd };

struct Token {
  TokenType type;
  std::string_view text;
  std::size_t position;
};

std::string describe(const Token& t) {
  if (t.type == TokenType::kEnd) return "end of input";
  return "'" + std::string(t.text) + "'";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const auto is_digit = [&](std::size_t k) {
    return k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]));
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(i) || (c == '.' && is_digit(i + 1))) {
      while (is_digit(i)) ++i;
      if (i < src.size() && src[i] == '.') {
        ++i;
        while (is_digit(i)) ++i;
      }
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (is_digit(j)) {
          i = j;
          while (is_digit(i)) ++i;
        }
      }
      tokens.push_back({TokenType::kNumber, src.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      tokens.push_back({TokenType::kIdentifier, src.substr(start, i - start), start});
      continue;
    }
    TokenType type;
    std::size_t width = 1;
    switch (c) {
      case '+':
        type = TokenType::kPlus;
        break;
      case '-':
        type = TokenType::kMinus;
        break;
      case '*':
        if (i + 1 < src.size() && src[i + 1] == '*') {
          type = TokenType::kPower;
          width = 2;
        } else {
          type = TokenType::kStar;
        }
        break;
      case '/':
        type = TokenType::kSlash;
        break;
      case '(':
        type = TokenType::kLParen;
        break;
      case ')':
        type = TokenType::kRParen;
        break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
    }
    tokens.push_back({type, src.substr(start, width), start});
    i += width;
  }
  tokens.push_back({TokenType::kEnd, {}, src.size()});
  return tokens;
}

// Decimal or scientific literal as an exact rational.
Rational parse_number(const Token& t) {
  std::string_view s = t.text;
  std::string mantissa;
  long exponent = 0;
  std::size_t i = 0;
  while (i < s.size() && s[i] != '.' && s[i] != 'e' && s[i] != 'E') mantissa += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && s[i] != 'e' && s[i] != 'E') {
      mantissa += s[i++];
      --exponent;
    }
  }
  if (i < s.size()) {
    ++i;
    try {
      exponent += std::stol(std::string(s.substr(i)));
    } catch (const std::exception&) {
      throw ParseError("malformed number " + describe(t), t.position);
    }
  }
  if (mantissa.empty()) mantissa = "0";
  if (exponent > 10000 || exponent < -10000) {
    throw ParseError("number out of range " + describe(t), t.position);
  }
  Integer m(mantissa, 10);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational out = exponent < 0 ? Rational(m, scale) : Rational(m * scale);
  out.canonicalize();
  return out;
}

// Binding powers. Unary signs bind looser than ** so -x**2 == -(x**2).
constexpr int kSumPower = 10;
constexpr int kProductPower = 20;
constexpr int kUnaryPower = 30;
constexpr int kExponentPower = 40;

class PrattParser {
 public:
  PrattParser(std::vector<Token> tokens, const ChartContext& ctx)
      : tokens_(std::move(tokens)), ctx_(ctx) {}

  Expr parse_all() {
    if (peek().type == TokenType::kEnd) throw ParseError("empty expression", 0);
    Expr e = parse_expression(0);
    if (peek().type != TokenType::kEnd) {
      throw ParseError("unexpected " + describe(peek()), peek().position);
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  static int left_power(TokenType t) {
    switch (t) {
      case TokenType::kPlus:
      case TokenType::kMinus:
        return kSumPower;
      case TokenType::kStar:
      case TokenType::kSlash:
        return kProductPower;
      case TokenType::kPower:
        return kExponentPower;
      default:
        return 0;
    }
  }

  Expr parse_expression(int min_power) {
    Expr left = parse_prefix();
    while (left_power(peek().type) > min_power) {
      const Token op = advance();
      switch (op.type) {
        case TokenType::kPlus:
          left = left + parse_expression(kSumPower);
          break;
        case TokenType::kMinus:
          left = left - parse_expression(kSumPower);
          break;
        case TokenType::kStar:
          left = left * parse_expression(kProductPower);
          break;
        case TokenType::kSlash: {
          Expr right = parse_expression(kProductPower);
          if (right.is_zero_constant()) throw ParseError("division by zero", op.position);
          left = left / right;
          break;
        }
        case TokenType::kPower:
          // Right associative.
          left = pow(left, parse_expression(kExponentPower - 1));
          break;
        default:
          throw ParseError("unexpected " + describe(op), op.position);
      }
    }
    return left;
  }

  Expr parse_prefix() {
    const Token t = advance();
    switch (t.type) {
      case TokenType::kNumber:
        return Expr(parse_number(t));
      case TokenType::kIdentifier:
        return parse_identifier(t);
      case TokenType::kMinus:
        return -parse_expression(kUnaryPower);
      case TokenType::kPlus:
        return parse_expression(kUnaryPower);
      case TokenType::kLParen: {
        Expr inner = parse_expression(0);
        expect_close(t);
        return inner;
      }
      default:
        throw ParseError("expected an operand but found " + describe(t), t.position);
    }
  }

  Expr parse_identifier(const Token& t) {
    const std::string name(t.text);
    if (auto f = function_from_name(name)) {
      if (peek().type != TokenType::kLParen) {
        throw ParseError("reserved function name '" + name + "' used as a variable", t.position);
      }
      const Token open = advance();
      if (peek().type == TokenType::kRParen) {
        throw ParseError("function '" + name + "' expects one argument", peek().position);
      }
      Expr arg = parse_expression(0);
      expect_close(open);
      return apply(*f, arg);
    }
    if (peek().type == TokenType::kLParen) {
      throw ParseError("unknown function '" + name + "'", t.position);
    }
    ctx_.register_parameter(name);
    return Expr::symbol(name);
  }

  void expect_close(const Token& open) {
    if (peek().type != TokenType::kRParen) {
      if (peek().type == TokenType::kEnd) {
        throw ParseError("unbalanced '(' opened at " + std::to_string(open.position), peek().position);
      }
      throw ParseError("expected ')' but found " + describe(peek()), peek().position);
    }
    advance();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const ChartContext& ctx_;
};

}  // namespace

std::optional<Function> function_from_name(std::string_view name) {
  if (name == "sin") return Function::kSin;
  if (name == "cos") return Function::kCos;
  if (name == "tan") return Function::kTan;
  if (name == "exp") return Function::kExp;
  if (name == "log") return Function::kLog;
  if (name == "sqrt") return Function::kSqrt;
  return std::nullopt;
}

Expr parse_expr(std::string_view source, const ChartContext& ctx) {
  PrattParser parser(tokenize(source), ctx);
  try {
    return parser.parse_all();
  } catch (const PreconditionError& e) {
    // Constant folding errors such as 0**-1 or log(0) inside the text.
    throw ParseError(e.what(), 0);
  }
}

}  // namespace poisson
