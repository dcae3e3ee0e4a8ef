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

#include <cctype>

#include "poisson/cli.hpp"
#include "poisson/errors.hpp"
#include "poisson/parser.hpp"

namespace poisson::cli {
namespace {

IndexKey parse_key(const std::string& text) {
  IndexKey key;
  std::string body = text;
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::size_t pos = 0;
  bool expect_number = !body.empty();
  while (pos < body.size()) {
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    if (pos == start || pos - start > 6) throw SchemaError("malformed key \"" + text + "\"");
    key.push_back(std::stoi(body.substr(start, pos - start)));
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    if (pos == body.size()) {
      expect_number = false;
      break;
    }
    if (body[pos] != ',') throw SchemaError("malformed key \"" + text + "\"");
    ++pos;
    expect_number = true;
  }
  if (expect_number) throw SchemaError("malformed key \"" + text + "\"");
  return key;
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw SchemaError("expected expression text, got " + value.dump());
}

template <Variance V>
AlternatingField<V> load_field(const Json& document, const ChartContext& ctx, int expected_degree) {
  if (!document.is_object()) throw SchemaError("expected a coefficient-map object, got " + document.dump());
  if (!document.contains("coeffs") || !document["coeffs"].is_object()) {
    throw SchemaError("coefficient map needs an object member \"coeffs\"");
  }
  for (auto it = document.begin(); it != document.end(); ++it) {
    if (it.key() != "degree" && it.key() != "coeffs" && it.key() != "dim") {
      throw SchemaError("unknown member \"" + it.key() + "\" in a coefficient map");
    }
  }
  const Json& coeffs = document["coeffs"];
  std::vector<std::pair<IndexKey, std::string>> raw;
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) raw.emplace_back(parse_key(it.key()), scalar_text(it.value()));

  int degree = 0;
  if (document.contains("degree")) {
    if (!document["degree"].is_number_integer()) throw SchemaError("\"degree\" must be an integer");
    degree = document["degree"].get<int>();
  } else if (!raw.empty()) {
    degree = static_cast<int>(raw.front().first.size());
  } else {
    throw SchemaError("an empty coefficient map needs a \"degree\"");
  }
  if (expected_degree >= 0 && degree != expected_degree) {
    throw PreconditionError("expected degree " + std::to_string(expected_degree) + ", got " + std::to_string(degree));
  }
  return canonicalize<V>(raw, degree, ctx);
}

template <Variance V>
Json field_document(const AlternatingField<V>& field) {
  Json coeffs = Json::object();
  for (const auto& [key, value] : field.coefficients()) coeffs[key_to_string(key)] = to_string(value);
  Json out;
  out["degree"] = field.degree();
  out["coeffs"] = std::move(coeffs);
  return out;
}

}  // namespace

std::optional<Format> format_from_name(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "latex") return Format::kLatex;
  return std::nullopt;
}

Job parse_job(const std::string& operation, const Json& request, std::optional<int> dim) {
  const std::vector<std::string>& names = operand_names(operation);
  if (!request.is_object()) throw SchemaError("a request must be a JSON object");

  Json operands = Json::object();
  std::optional<Format> format;
  if (request.contains("format")) {
    const Json& name = request["format"];
    if (!name.is_string() || !format_from_name(name.get<std::string>())) {
      throw SchemaError("\"format\" must be one of text, json, latex");
    }
    format = format_from_name(name.get<std::string>());
  }
  if (request.contains("coeffs")) {
    Json document = request;
    document.erase("format");
    operands[names.front()] = std::move(document);
  } else {
    for (auto it = request.begin(); it != request.end(); ++it) {
      if (it.key() != "dim" && it.key() != "format") operands[it.key()] = it.value();
    }
  }
  if (!dim && request.contains("dim")) {
    if (!request["dim"].is_number_integer()) throw SchemaError("\"dim\" must be an integer");
    dim = request["dim"].get<int>();
  }
  if (!dim) throw SchemaError("the dimension is missing: pass --dim or a \"dim\" member");
  if (*dim < 1 || *dim > 60) throw SchemaError("dimension must be between 1 and 60");
  return Job{ChartContext(*dim), std::move(operands), format};
}

Multivector load_multivector(const Json& document, const ChartContext& ctx, int expected_degree) {
  return load_field<Variance::kContravariant>(document, ctx, expected_degree);
}

DiffForm load_form(const Json& document, const ChartContext& ctx, int expected_degree) {
  return load_field<Variance::kCovariant>(document, ctx, expected_degree);
}

Expr load_scalar(const Json& value, const ChartContext& ctx) { return parse_expr(scalar_text(value), ctx); }

Json to_document(const Multivector& field) { return field_document(field); }
Json to_document(const DiffForm& field) { return field_document(field); }

}  // namespace poisson::cli
