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

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "poisson/cli.hpp"
#include "poisson/errors.hpp"
#include "poisson/simplify.hpp"
#include "support.hpp"

using namespace poisson;
using poisson::testing::ex;
using poisson::testing::same;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

const char* const kPi4 = R"({"degree":2,"coeffs":{"1,2":"a1*x2","1,3":"a2*x3","1,4":"a3*x4","2,3":"a4*x1"}})";
const char* const kSo3 = R"({"degree":2,"coeffs":{"1,2":"x3","1,3":"-x2","2,3":"x1"}})";

}  // namespace

TEST_CASE("jacobiator transcript") {
  const Outcome r = invoke({"jacobiator", "--dim", "4", "--in", kPi4});
  CHECK(r.status == 0);
  CHECK(r.out == "{(1,2,3): -2*a1*a4*x1 - 2*a2*a4*x1, (2,3,4): -2*a3*a4*x4}\n");
}

TEST_CASE("gauge transcript") {
  const std::string job =
      R"({"bivector":{"degree":2,"coeffs":{"1,2":"P12","1,3":"P13","2,3":"P23"}},)"
      R"("two_form":{"degree":2,"coeffs":{"1,2":"L12","1,3":"L13","2,3":"L23"}}})";
  const Outcome r = invoke({"gauge", "--dim", "3", "--in", job});
  REQUIRE(r.status == 0);
  std::istringstream lines(r.out);
  std::string bivector;
  std::string determinant;
  std::getline(lines, bivector);
  std::getline(lines, determinant);
  CHECK(bivector ==
        "{(1,2): P12/(L12*P12 + L13*P13 + L23*P23 + 1), (1,3): P13/(L12*P12 + L13*P13 + L23*P23 + 1), "
        "(2,3): P23/(L12*P12 + L13*P13 + L23*P23 + 1)}");
  CHECK(equals(ex(determinant, 3), ex("(L12*P12 + L13*P13 + L23*P23 + 1)**2", 3)));
}

TEST_CASE("predicates print True or False and succeed") {
  const Outcome zero = invoke({"is-poisson-tensor", "--dim", "3", "--in", R"({"degree":2,"coeffs":{}})"});
  CHECK(zero.status == 0);
  CHECK(zero.out == "True\n");
  const Outcome pi4 = invoke({"is-poisson-tensor", "--dim", "4", "--in", kPi4});
  CHECK(pi4.status == 0);
  CHECK(pi4.out == "False\n");
}

TEST_CASE("zero results print as the zero token") {
  const Outcome r = invoke({"jacobiator", "--dim", "3", "--in", kSo3});
  CHECK(r.out == "{0: 0}\n");
}

TEST_CASE("documents are read from standard input") {
  const Outcome r = invoke({"normal-form-r3", "--dim", "3", "--in", "-"}, kSo3);
  CHECK(r.status == 0);
  CHECK(r.out == "{(1,2): x3, (1,3): -x2, (2,3): x1}\n");
}

TEST_CASE("named operands") {
  const std::string job = std::string(R"({"bivector":)") + kSo3 + R"(,"function_1":"x1","function_2":"x2"})";
  CHECK(invoke({"poisson-bracket", "--dim", "3", "--in", job}).out == "x3\n");
  const Outcome fr = invoke({"flaschka-ratiu", "--dim", "4", "--in", R"({"casimirs":["x1","x2"],"symplectic":true})"});
  CHECK(fr.out == "{(3,4): -1}\n{(3,4): 1}\n");
}

TEST_CASE("parametric normal forms carry a note") {
  const Outcome r =
      invoke({"normal-form-r3", "--dim", "3", "--in", R"({"degree":2,"coeffs":{"1,3":"x1+4*x2","2,3":"4*x1+x2"}})"});
  CHECK(r.status == 0);
  CHECK(r.err.find("parameter a") != std::string::npos);
}

TEST_CASE("exit codes") {
  const Outcome parse = invoke({"is-poisson-tensor", "--dim", "3", "--in", R"({"degree":2,"coeffs":{"1,2":"x1 +"}})"});
  CHECK(parse.status == 1);
  CHECK(parse.err.find("position 4") != std::string::npos);
  CHECK(invoke({"jacobiator", "--dim", "3", "--in", R"({"degree":2,"coeffs":{"1,1":"x3"}})"}).status == 1);
  CHECK(invoke({"jacobiator", "--dim", "3", "--in", "{not json"}).status == 1);
  CHECK(invoke({"jacobiator", "--dim", "3", "--in", R"({"degree":2,"coeffs":{"1,2":"x1"},"extra":1})"}).status == 1);
  CHECK(invoke({"is-homogeneous-unimodular", "--dim", "3", "--in", R"({"degree":2,"coeffs":{"1,2":"x1 + 1"}})"})
            .status == 2);
  CHECK(invoke({"jacobiator", "--dim", "3", "--in", R"({"degree":1,"coeffs":{"1":"x1"}})"}).status == 2);
  const std::string gauge =
      R"({"bivector":{"degree":2,"coeffs":{"1,2":"1"}},"two_form":{"degree":2,"coeffs":{"1,2":"-1"}}})";
  CHECK(invoke({"gauge", "--dim", "2", "--in", gauge}).status == 2);
}

TEST_CASE("document loading") {
  const ChartContext ctx(3);
  const Multivector p = cli::load_multivector(cli::Json::parse(kSo3), ctx);
  CHECK(same(p, testing::so3()));
  const Multivector q = cli::load_multivector(cli::Json::parse(R"({"degree":2,"coeffs":{"2,1":"x3"}})"), ctx);
  CHECK(equals(q.coefficient({1, 2}), ex("-x3", 3)));
  CHECK_THROWS_AS(cli::load_multivector(cli::Json::parse(R"({"degree":2,"coeffs":{"1,1":"x3"}})"), ctx),
                  SchemaError);
  CHECK_THROWS_AS(cli::load_multivector(cli::Json::parse(kSo3), ctx, 1), PreconditionError);
}

TEST_CASE("renderings") {
  const Chart chart(3);
  CHECK(cli::render(cli::Result{Multivector(chart, 2)}, cli::Format::kText, chart) == "{0: 0}");
  CHECK(cli::render(cli::Result{testing::mv(3, 2, {{{1, 2}, "x3"}})}, cli::Format::kLatex, chart) ==
        R"(x_{3}\,\frac{\partial}{\partial x_{1}}\wedge\frac{\partial}{\partial x_{2}})");
  CHECK(cli::render(cli::Result{Multivector::scalar(chart, Expr(0))}, cli::Format::kJson, chart) ==
        R"({"degree":0,"coeffs":{}})");
  CHECK(cli::render(cli::Result{true}, cli::Format::kText, chart) == "True");
}

TEST_CASE("JSON rendering round-trips byte for byte") {
  testing::Generator gen(71);
  const Chart chart(4);
  const ChartContext ctx(chart);
  for (int degree = 0; degree <= 4; ++degree) {
    for (int trial = 0; trial < 5; ++trial) {
      const Multivector p = gen.multivector(chart, degree, 3, 3);
      const std::string once = cli::render(cli::Result{p}, cli::Format::kJson, chart);
      const Multivector back = cli::load_multivector(cli::Json::parse(once), ctx);
      CHECK(cli::render(cli::Result{back}, cli::Format::kJson, chart) == once);
    }
  }
}

TEST_CASE("every operation has a subcommand") {
  CHECK(cli::operation_names().size() == 19);
  for (const std::string& op : cli::operation_names()) CHECK_FALSE(cli::operand_names(op).empty());
  CHECK_THROWS_AS(cli::operand_names("no-such-op"), SchemaError);
}

TEST_CASE("batches of requests") {
  const Outcome r = invoke({"is-poisson-tensor", "--dim", "4", "--jobs", "2", "--in", kPi4, "--in", kPi4});
  CHECK(r.status == 0);
  CHECK(r.out == "False\nFalse\n");
}
