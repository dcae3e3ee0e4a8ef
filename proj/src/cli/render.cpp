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

#include <sstream>

#include "poisson/cli.hpp"

namespace poisson::cli {
namespace {

template <Variance V>
std::string field_text(const AlternatingField<V>& field) {
  if (field.is_zero()) return "{0: 0}";
  if (field.degree() == 0) return to_string(field.coefficient({}));
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : field.coefficients()) {
    if (!first) out += ", ";
    out += "(" + key_to_string(key) + "): " + to_string(value);
    first = false;
  }
  return out + "}";
}

std::string basis_latex(const IndexKey& key, const Chart& chart, Variance v) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += "\\wedge";
    const std::string x = latex_symbol(chart.name(key[i]));
    out += v == Variance::kContravariant ? "\\frac{\\partial}{\\partial " + x + "}" : "\\mathrm{d}" + x;
  }
  return out;
}

template <Variance V>
std::string field_latex(const AlternatingField<V>& field) {
  if (field.is_zero()) return "0";
  if (field.degree() == 0) return to_latex(field.coefficient({}));
  std::string out;
  bool first = true;
  for (const auto& [key, value] : field.coefficients()) {
    const std::string basis = basis_latex(key, field.chart(), V);
    bool negative = false;
    std::string coefficient;
    if (value.is_one_constant()) {
      coefficient.clear();
    } else if (value == Expr(-1)) {
      negative = true;
    } else if (value.is_add()) {
      coefficient = "\\left(" + to_latex(value) + "\\right)";
    } else {
      coefficient = to_latex(value);
      if (!coefficient.empty() && coefficient.front() == '-') {
        negative = true;
        coefficient.erase(0, 1);
      }
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coefficient.empty() ? basis : coefficient + "\\," + basis;
    first = false;
  }
  return out;
}

Json scalar_document(const Expr& e) {
  Json coeffs = Json::object();
  if (!e.is_zero_constant()) coeffs[""] = to_string(e);
  Json out;
  out["degree"] = 0;
  out["coeffs"] = std::move(coeffs);
  return out;
}

std::string matrix_text(const ExprMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

struct Renderer {
  Format format;
  const Chart& chart;

  std::string operator()(const Multivector& f) const { return field(f); }
  std::string operator()(const DiffForm& f) const { return field(f); }

  template <Variance V>
  std::string field(const AlternatingField<V>& f) const {
    switch (format) {
      case Format::kText:
        return field_text(f);
      case Format::kJson:
        return to_document(f).dump();
      case Format::kLatex:
        return field_latex(f);
    }
    return {};
  }

  std::string operator()(const Expr& e) const {
    switch (format) {
      case Format::kText:
        return to_string(e);
      case Format::kJson:
        return scalar_document(e).dump();
      case Format::kLatex:
        return to_latex(e);
    }
    return {};
  }

  std::string operator()(bool b) const {
    if (format == Format::kJson) return b ? "true" : "false";
    return b ? "True" : "False";
  }

  std::string operator()(const ExprMatrix& m) const {
    switch (format) {
      case Format::kText:
        return matrix_text(m);
      case Format::kJson: {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
          Json row = Json::array();
          for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
          rows.push_back(std::move(row));
        }
        return rows.dump();
      }
      case Format::kLatex: {
        std::string out = "\\begin{pmatrix}";
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (i > 0) out += " \\\\ ";
          for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += " & ";
            out += to_latex(m(i, j));
          }
        }
        return out + "\\end{pmatrix}";
      }
    }
    return {};
  }

  std::string operator()(const GaugeResult& g) const {
    if (format == Format::kJson) {
      Json out;
      out["bivector"] = to_document(g.bivector);
      out["determinant"] = to_string(g.determinant);
      return out.dump();
    }
    return field(g.bivector) + "\n" + (*this)(g.determinant);
  }

  std::string operator()(const FlaschkaRatiuResult& r) const {
    if (format == Format::kJson) {
      Json out;
      out["bivector"] = to_document(r.bivector);
      if (r.symplectic) out["symplectic"] = to_document(*r.symplectic);
      return out.dump();
    }
    std::string out = field(r.bivector);
    if (r.symplectic) out += "\n" + field(*r.symplectic);
    return out;
  }

  std::string operator()(const NormalFormR3& n) const { return field(n.bivector); }

  std::string operator()(const IsomorphismVerdict& v) const { return (*this)(v.isomorphic); }
};

}  // namespace

std::string render(const Result& result, Format format, const Chart& chart) {
  return std::visit(Renderer{format, chart}, result);
}

}  // namespace poisson::cli
