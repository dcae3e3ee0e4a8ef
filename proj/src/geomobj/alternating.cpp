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

#include "poisson/alternating.hpp"

#include <algorithm>

#include "poisson/errors.hpp"
#include "poisson/parser.hpp"
#include "poisson/simplify.hpp"

namespace poisson {
namespace {

void check_degree(int degree, int m) {
  if (degree < 0 || degree > m) {
    throw SchemaError("degree " + std::to_string(degree) + " is outside 0.." + std::to_string(m));
  }
}

void check_stored_key(const IndexKey& key, int degree, int m) {
  if (static_cast<int>(key.size()) != degree) {
    throw SchemaError("key (" + key_to_string(key) + ") does not have length " + std::to_string(degree));
  }
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] < 1 || key[i] > m) {
      throw SchemaError("index " + std::to_string(key[i]) + " in key (" + key_to_string(key) +
                        ") is outside 1.." + std::to_string(m));
    }
    if (i > 0 && key[i - 1] >= key[i]) {
      throw SchemaError("key (" + key_to_string(key) + ") is not strictly increasing");
    }
  }
}

// Validates a raw key and returns its sorting sign.
int canonical_key(IndexKey& key, int degree, int m) {
  const IndexKey original = key;
  if (static_cast<int>(key.size()) != degree) {
    throw SchemaError("key (" + key_to_string(original) + ") does not have length " + std::to_string(degree));
  }
  for (int i : key) {
    if (i < 1 || i > m) {
      throw SchemaError("index " + std::to_string(i) + " in key (" + key_to_string(original) +
                        ") is outside 1.." + std::to_string(m));
    }
  }
  const int sign = sort_with_sign(key);
  if (sign == 0) throw SchemaError("repeated index in key (" + key_to_string(original) + ")");
  return sign;
}

}  // namespace

int sort_with_sign(IndexKey& key) {
  int sign = 1;
  // Insertion sort; keys are short.
  for (std::size_t i = 1; i < key.size(); ++i) {
    for (std::size_t j = i; j > 0 && key[j - 1] >= key[j]; --j) {
      if (key[j - 1] == key[j]) return 0;
      std::swap(key[j - 1], key[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::vector<IndexKey> increasing_keys(int m, int degree) {
  std::vector<IndexKey> out;
  if (degree < 0 || degree > m) return out;
  IndexKey key(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) key[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(key);
    int pos = degree - 1;
    while (pos >= 0 && key[static_cast<std::size_t>(pos)] == m - degree + pos + 1) --pos;
    if (pos < 0) break;
    ++key[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < degree; ++i) {
      key[static_cast<std::size_t>(i)] = key[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return out;
}

std::string key_to_string(const IndexKey& key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(key[i]);
  }
  return out;
}

template <Variance V>
AlternatingField<V>::AlternatingField(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  // A zero field may have degree above the dimension: the coboundary of a top
  // degree field is the zero (m+1)-vector.
  if (degree < 0) throw SchemaError("negative degree");
}

template <Variance V>
AlternatingField<V>::AlternatingField(Chart chart, int degree, Coefficients coefficients)
    : chart_(std::move(chart)), degree_(degree) {
  check_degree(degree, chart_.dimension());
  for (auto& [key, value] : coefficients) {
    check_stored_key(key, degree, chart_.dimension());
    Expr simplified = simplify(value);
    if (!poisson::is_zero(simplified)) coefficients_.emplace(key, std::move(simplified));
  }
}

template <Variance V>
AlternatingField<V>::AlternatingField(Normalized, Chart chart, int degree, Coefficients coefficients)
    : chart_(std::move(chart)), degree_(degree), coefficients_(std::move(coefficients)) {}

template <Variance V>
AlternatingField<V> AlternatingField<V>::scalar(Chart chart, const Expr& value) {
  return AlternatingField(std::move(chart), 0, Coefficients{{IndexKey{}, value}});
}

template <Variance V>
Expr AlternatingField<V>::coefficient(const IndexKey& key) const {
  auto it = coefficients_.find(key);
  return it == coefficients_.end() ? Expr(0) : it->second;
}

template <Variance V>
Expr AlternatingField<V>::signed_coefficient(const IndexKey& key) const {
  IndexKey sorted = key;
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return Expr(0);
  auto it = coefficients_.find(sorted);
  if (it == coefficients_.end()) return Expr(0);
  return sign > 0 ? it->second : -it->second;
}

template <Variance V>
AlternatingField<V> AlternatingField<V>::operator-() const {
  Coefficients out;
  for (const auto& [key, value] : coefficients_) out.emplace(key, simplify(-value));
  return AlternatingField(Normalized{}, chart_, degree_, std::move(out));
}

template <Variance V>
AlternatingField<V> AlternatingField<V>::scaled(const Expr& f) const {
  Coefficients out;
  for (const auto& [key, value] : coefficients_) out.emplace(key, f * value);
  return AlternatingField(chart_, degree_, std::move(out));
}

template <Variance V>
AlternatingField<V> AlternatingField<V>::combine(const AlternatingField& a, const AlternatingField& b,
                                                 const Expr& sign) {
  if (!(a.chart_ == b.chart_)) throw PreconditionError("fields live on different charts");
  if (a.degree_ != b.degree_) throw PreconditionError("degree mismatch");
  Coefficients out = a.coefficients_;
  for (const auto& [key, value] : b.coefficients_) {
    auto [it, inserted] = out.try_emplace(key, sign * value);
    if (!inserted) it->second = it->second + sign * value;
  }
  return AlternatingField(a.chart_, a.degree_, std::move(out));
}

template <Variance V>
AlternatingField<V> canonicalize(const std::vector<std::pair<IndexKey, Expr>>& raw, int degree,
                                 const Chart& chart) {
  check_degree(degree, chart.dimension());
  typename AlternatingField<V>::Coefficients summed;
  for (const auto& [raw_key, value] : raw) {
    IndexKey key = raw_key;
    const int sign = canonical_key(key, degree, chart.dimension());
    const Expr signed_value = sign > 0 ? value : -value;
    auto [it, inserted] = summed.try_emplace(key, signed_value);
    if (!inserted) it->second = it->second + signed_value;
  }
  return AlternatingField<V>(chart, degree, std::move(summed));
}

template <Variance V>
AlternatingField<V> canonicalize(const std::vector<std::pair<IndexKey, std::string>>& raw, int degree,
                                 const ChartContext& ctx) {
  std::vector<std::pair<IndexKey, Expr>> parsed;
  parsed.reserve(raw.size());
  for (const auto& [key, text] : raw) {
    try {
      parsed.emplace_back(key, parse_expr(text, ctx));
    } catch (const ParseError& e) {
      throw ParseError("coefficient (" + key_to_string(key) + "): " + e.detail(), e.position());
    }
  }
  return canonicalize<V>(parsed, degree, ctx.chart());
}

Expr pairing(const DiffForm& form, const Multivector& field) {
  if (form.degree() != field.degree()) throw PreconditionError("pairing needs equal degrees");
  if (!(form.chart() == field.chart())) throw PreconditionError("fields live on different charts");
  std::vector<Expr> terms;
  for (const auto& [key, value] : form.coefficients()) {
    auto other = field.coefficients().find(key);
    if (other != field.coefficients().end()) terms.push_back(value * other->second);
  }
  return simplify(add(std::move(terms)));
}

template class AlternatingField<Variance::kContravariant>;
template class AlternatingField<Variance::kCovariant>;
template Multivector canonicalize<Variance::kContravariant>(const std::vector<std::pair<IndexKey, std::string>>&,
                                                            int, const ChartContext&);
template DiffForm canonicalize<Variance::kCovariant>(const std::vector<std::pair<IndexKey, std::string>>&, int,
                                                     const ChartContext&);
template Multivector canonicalize<Variance::kContravariant>(const std::vector<std::pair<IndexKey, Expr>>&, int,
                                                            const Chart&);
template DiffForm canonicalize<Variance::kCovariant>(const std::vector<std::pair<IndexKey, Expr>>&, int,
                                                     const Chart&);

}  // namespace poisson
