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

#ifndef POISSON_CLI_HPP
#define POISSON_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "poisson/alternating.hpp"
#include "poisson/chart.hpp"
#include "poisson/classify.hpp"
#include "poisson/matrix.hpp"
#include "poisson/transform.hpp"

namespace poisson::cli {

using Json = nlohmann::ordered_json;

enum class Format { kText, kJson, kLatex };

std::optional<Format> format_from_name(const std::string& name);

// One request: a chart and the named operands of an operation.
struct Job {
  ChartContext context;
  Json operands;  // object keyed by operand name
  std::optional<Format> format;
};

// Accepts either a bare coefficient-map document, which becomes the first
// operand of `operation`, or an object with optional "dim" and "format" and
// the operands by name. `dim` overrides the document's "dim".
Job parse_job(const std::string& operation, const Json& request, std::optional<int> dim);

// {"degree": a, "coeffs": {"i1,...,ia": "<expression>", ...}}. A negative
// expected degree accepts any degree. Throws SchemaError on a malformed
// document and PreconditionError on a degree other than the expected one.
Multivector load_multivector(const Json& document, const ChartContext& ctx, int expected_degree = -1);
DiffForm load_form(const Json& document, const ChartContext& ctx, int expected_degree = -1);
Expr load_scalar(const Json& value, const ChartContext& ctx);

Json to_document(const Multivector& field);
Json to_document(const DiffForm& field);

using Result = std::variant<Multivector, DiffForm, Expr, bool, ExprMatrix, GaugeResult, FlaschkaRatiuResult,
                            NormalFormR3, IsomorphismVerdict>;

// Kebab-case operation names, in the order they are listed by --help.
const std::vector<std::string>& operation_names();
// The operands an operation accepts; the first is the one a bare document
// fills. Throws SchemaError for an unknown operation.
const std::vector<std::string>& operand_names(const std::string& operation);

Result execute(const std::string& operation, const Job& job);

std::string render(const Result& result, Format format, const Chart& chart);

// Runs the command line `args` (without the program name). Returns the exit
// status: 0 on success, 1 on malformed input, 2 on a failed mathematical
// precondition.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace poisson::cli

#endif  // POISSON_CLI_HPP
