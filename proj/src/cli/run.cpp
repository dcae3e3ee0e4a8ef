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

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "poisson/calculus.hpp"
#include "poisson/cli.hpp"
#include "poisson/errors.hpp"

namespace poisson::cli {
namespace {

struct Operation {
  std::string name;
  std::string description;
  std::vector<std::string> operands;
  std::function<Result(const Job&)> apply;
};

const Json& operand(const Job& job, const std::string& name) {
  if (!job.operands.contains(name)) throw SchemaError("missing operand \"" + name + "\"");
  return job.operands[name];
}

Multivector bivector(const Job& job, const std::string& name) {
  return load_multivector(operand(job, name), job.context, 2);
}

Expr scalar(const Job& job, const std::string& name, const char* fallback = nullptr) {
  if (fallback != nullptr && !job.operands.contains(name)) return load_scalar(Json(fallback), job.context);
  return load_scalar(operand(job, name), job.context);
}

std::vector<Operation> make_operations() {
  std::vector<Operation> ops;
  ops.push_back({"sharp-morphism", "image of a 1-form under the sharp morphism", {"bivector", "one_form"},
                 [](const Job& j) -> Result {
                   return sharp_morphism(bivector(j, "bivector"), load_form(operand(j, "one_form"), j.context, 1));
                 }});
  ops.push_back({"poisson-bracket", "Poisson bracket of two functions", {"bivector", "function_1", "function_2"},
                 [](const Job& j) -> Result {
                   return poisson_bracket(bivector(j, "bivector"), scalar(j, "function_1"), scalar(j, "function_2"));
                 }});
  ops.push_back({"hamiltonian-vf", "Hamiltonian vector field of a function", {"bivector", "function"},
                 [](const Job& j) -> Result { return hamiltonian_vf(bivector(j, "bivector"), scalar(j, "function")); }});
  ops.push_back({"lichnerowicz", "coboundary [[P, A]] of a multivector or function", {"bivector", "multivector"},
                 [](const Job& j) -> Result {
                   const Multivector p = bivector(j, "bivector");
                   const Json& a = operand(j, "multivector");
                   if (a.is_object()) return lichnerowicz_poisson_operator(p, load_multivector(a, j.context));
                   return lichnerowicz_poisson_operator(p, load_scalar(a, j.context));
                 }});
  ops.push_back({"curl", "divergence of a multivector for the volume f0 dx1^...^dxm", {"multivector", "function"},
                 [](const Job& j) -> Result {
                   return curl_operator(load_multivector(operand(j, "multivector"), j.context), scalar(j, "function", "1"));
                 }});
  ops.push_back({"bivector-to-matrix", "antisymmetric coefficient matrix", {"bivector"},
                 [](const Job& j) -> Result { return bivector_to_matrix(bivector(j, "bivector")); }});
  ops.push_back({"jacobiator", "Schouten bracket [[P, P]]", {"bivector"},
                 [](const Job& j) -> Result { return jacobiator(bivector(j, "bivector")); }});
  ops.push_back({"modular-vf", "modular vector field for the volume f0 dx1^...^dxm", {"bivector", "function"},
                 [](const Job& j) -> Result { return modular_vf(bivector(j, "bivector"), scalar(j, "function", "1")); }});
  ops.push_back({"is-homogeneous-unimodular", "unimodularity of a homogeneous bivector", {"bivector"},
                 [](const Job& j) -> Result { return is_homogeneous_unimodular(bivector(j, "bivector")); }});
  ops.push_back({"one-forms-bracket", "bracket of two 1-forms", {"bivector", "one_form_1", "one_form_2"},
                 [](const Job& j) -> Result {
                   return one_forms_bracket(bivector(j, "bivector"), load_form(operand(j, "one_form_1"), j.context, 1),
                                            load_form(operand(j, "one_form_2"), j.context, 1));
                 }});
  ops.push_back({"gauge", "gauge transformation by a 2-form", {"bivector", "two_form"},
                 [](const Job& j) -> Result {
                   return gauge_transformation(bivector(j, "bivector"), load_form(operand(j, "two_form"), j.context, 2));
                 }});
  ops.push_back({"normal-form-r3", "linear normal form of a Lie-Poisson bivector on R^3", {"bivector"},
                 [](const Job& j) -> Result { return linear_normal_form_R3(bivector(j, "bivector")); }});
  ops.push_back({"isomorphic-r3", "isomorphism test for Lie-Poisson bivectors on R^3", {"bivector_1", "bivector_2"},
                 [](const Job& j) -> Result {
                   return isomorphic_lie_poisson_R3(bivector(j, "bivector_1"), bivector(j, "bivector_2"));
                 }});
  ops.push_back({"flaschka-ratiu", "Flaschka-Ratiu bivector of m-2 functions", {"casimirs", "symplectic"},
                 [](const Job& j) -> Result {
                   const Json& list = operand(j, "casimirs");
                   if (!list.is_array()) throw SchemaError("\"casimirs\" must be a list of expressions");
                   std::vector<Expr> casimirs;
                   for (const Json& k : list) casimirs.push_back(load_scalar(k, j.context));
                   bool symplectic = false;
                   if (j.operands.contains("symplectic")) {
                     if (!j.operands["symplectic"].is_boolean()) throw SchemaError("\"symplectic\" must be a boolean");
                     symplectic = j.operands["symplectic"].get<bool>();
                   }
                   return flaschka_ratiu_bivector(j.context.chart(), casimirs, symplectic);
                 }});
  ops.push_back({"is-poisson-tensor", "Jacobi identity test", {"bivector"},
                 [](const Job& j) -> Result { return is_poisson_tensor(bivector(j, "bivector")); }});
  ops.push_back({"is-in-kernel", "kernel test for the sharp morphism", {"bivector", "one_form"},
                 [](const Job& j) -> Result {
                   return is_in_kernel(bivector(j, "bivector"), load_form(operand(j, "one_form"), j.context, 1));
                 }});
  ops.push_back({"is-casimir", "Casimir function test", {"bivector", "function"},
                 [](const Job& j) -> Result { return is_casimir(bivector(j, "bivector"), scalar(j, "function")); }});
  ops.push_back({"is-poisson-vf", "Poisson vector field test", {"bivector", "vector_field"},
                 [](const Job& j) -> Result {
                   return is_poisson_vf(bivector(j, "bivector"),
                                        load_multivector(operand(j, "vector_field"), j.context, 1));
                 }});
  ops.push_back({"is-poisson-pair", "compatibility test for two bivectors", {"bivector_1", "bivector_2"},
                 [](const Job& j) -> Result {
                   return is_poisson_pair(bivector(j, "bivector_1"), bivector(j, "bivector_2"));
                 }});
  return ops;
}

const std::vector<Operation>& operations() {
  static const std::vector<Operation> ops = make_operations();
  return ops;
}

const Operation& find_operation(const std::string& name) {
  for (const Operation& op : operations()) {
    if (op.name == name) return op;
  }
  throw SchemaError("unknown operation '" + name + "'");
}

struct Outcome {
  int status = 0;
  std::string output;
  std::string diagnostics;
};

std::string read_input(const std::string& source, const std::string& stdin_text) {
  if (source == "-") return stdin_text;
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return source;
  std::ifstream file(source);
  if (!file) throw SchemaError("cannot read input file '" + source + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

Outcome run_one(const std::string& operation, const std::string& source, const std::string& stdin_text,
                std::optional<int> dim, std::optional<Format> format) {
  Outcome outcome;
  try {
    const Json request = Json::parse(read_input(source, stdin_text));
    const Job job = parse_job(operation, request, dim);
    for (auto it = job.operands.begin(); it != job.operands.end(); ++it) {
      const auto& allowed = operand_names(operation);
      if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
        throw SchemaError("unexpected operand \"" + it.key() + "\" for " + operation);
      }
    }
    const Result result = execute(operation, job);
    outcome.output = render(result, format.value_or(job.format.value_or(Format::kText)), job.context.chart());
    const bool parametric = (std::holds_alternative<IsomorphismVerdict>(result) &&
                             std::get<IsomorphismVerdict>(result).parametric) ||
                            (std::holds_alternative<NormalFormR3>(result) && std::get<NormalFormR3>(result).parametric);
    if (parametric) outcome.diagnostics = "note: the normal form carries the unresolved parameter a\n";
  } catch (const Json::parse_error& e) {
    outcome = {1, "", "error: malformed JSON: " + std::string(e.what()) + "\n"};
  } catch (const Json::exception& e) {
    outcome = {1, "", "error: " + std::string(e.what()) + "\n"};
  } catch (const ParseError& e) {
    outcome = {1, "", "error: " + std::string(e.what()) + "\n"};
  } catch (const SchemaError& e) {
    outcome = {1, "", "error: " + std::string(e.what()) + "\n"};
  } catch (const PreconditionError& e) {
    outcome = {2, "", "error: " + std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    outcome = {1, "", "error: " + std::string(e.what()) + "\n"};
  }
  return outcome;
}

}  // namespace

const std::vector<std::string>& operation_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Operation& op : operations()) out.push_back(op.name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& operand_names(const std::string& operation) {
  return find_operation(operation).operands;
}

Result execute(const std::string& operation, const Job& job) { return find_operation(operation).apply(job); }

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local Poisson-geometry calculus on coordinate charts.", "poisson"};
  app.require_subcommand(1, 1);
  int dim = 0;
  std::vector<std::string> inputs;
  std::string format_name;
  int jobs = 1;
  app.add_option("--dim", dim, "dimension m of the chart (overrides \"dim\" in the request)")
      ->check(CLI::Range(1, 60));
  app.add_option("--in", inputs, "request file, '-' for standard input, or inline JSON; repeatable")->required();
  app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--jobs", jobs, "requests processed in parallel")->check(CLI::PositiveNumber);
  app.fallthrough();
  for (const Operation& op : operations()) {
    std::string operands;
    for (const std::string& name : op.operands) operands += (operands.empty() ? "" : ", ") + name;
    app.add_subcommand(op.name, op.description)->footer("Operands: " + operands);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  const std::string operation = app.get_subcommands().front()->get_name();
  const std::optional<int> dim_override = dim > 0 ? std::optional<int>(dim) : std::nullopt;
  const std::optional<Format> format = format_name.empty() ? std::nullopt : format_from_name(format_name);

  std::string stdin_text;
  if (std::find(inputs.begin(), inputs.end(), "-") != inputs.end()) {
    stdin_text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  std::vector<Outcome> outcomes(inputs.size());
  const auto count = static_cast<long>(inputs.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
  for (long i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(i);
    outcomes[n] = run_one(operation, inputs[n], stdin_text, dim_override, format);
  }

  int status = 0;
  for (const Outcome& o : outcomes) {
    if (!o.output.empty()) out << o.output << '\n';
    err << o.diagnostics;
    status = std::max(status, o.status);
  }
  return status;
}

}  // namespace poisson::cli
