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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "poisson/calculus.hpp"
#include "poisson/parser.hpp"
#include "poisson/transform.hpp"

namespace {

using poisson::Chart;
using poisson::ChartContext;
using poisson::DiffForm;
using poisson::Execution;
using poisson::Expr;
using poisson::IndexKey;
using poisson::Multivector;

// Quadratic coefficient for key (i, j): deterministic and dense enough to
// keep the simplifier busy.
std::string quadratic(int m, int i, int j) {
  const int k = (i + j) % m + 1;
  const int l = (i * j) % m + 1;
  return std::to_string(i) + "*x" + std::to_string(k) + "*x" + std::to_string(l) + " - " + std::to_string(j) +
         "*x" + std::to_string(i) + " + x" + std::to_string(j) + "**2";
}

Multivector dense_bivector(int m) {
  const ChartContext ctx(m);
  Multivector::Coefficients c;
  for (const IndexKey& key : poisson::increasing_keys(m, 2)) {
    c.emplace(key, poisson::parse_expr(quadratic(m, key[0], key[1]), ctx));
  }
  return Multivector(ctx.chart(), 2, std::move(c));
}

DiffForm dense_two_form(int m) {
  const ChartContext ctx(m);
  DiffForm::Coefficients c;
  for (const IndexKey& key : poisson::increasing_keys(m, 2)) {
    c.emplace(key, poisson::parse_expr("x" + std::to_string(key[0]) + " - " + std::to_string(key[1]), ctx));
  }
  return DiffForm(ctx.chart(), 2, std::move(c));
}

Execution execution(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_Jacobiator(benchmark::State& state) {
  const Multivector p = dense_bivector(static_cast<int>(state.range(0)));
  const Execution exec = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(poisson::jacobiator(p, exec));
}

void BM_Coboundary(benchmark::State& state) {
  const Multivector p = dense_bivector(static_cast<int>(state.range(0)));
  const Execution exec = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(poisson::lichnerowicz_poisson_operator(p, p, exec));
}

void BM_ModularField(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Multivector p = dense_bivector(m);
  const Expr f0 = poisson::parse_expr("1 + x1**2", ChartContext(m));
  const Execution exec = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(poisson::modular_vf(p, f0, exec));
}

void BM_Gauge(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Multivector p = dense_bivector(m);
  const DiffForm lambda = dense_two_form(m);
  const Execution exec = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(poisson::gauge_transformation(p, lambda, exec));
}

void BM_FlaschkaRatiu(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ChartContext ctx(m);
  std::vector<Expr> casimirs;
  for (int k = 1; k <= m - 2; ++k) {
    casimirs.push_back(poisson::parse_expr("x" + std::to_string(k) + "**2*x" + std::to_string(k + 1) + " + x" +
                                               std::to_string(k + 2),
                                           ctx));
  }
  const Execution exec = execution(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poisson::flaschka_ratiu_bivector(ctx.chart(), casimirs, true, exec));
  }
}

}  // namespace

// Second argument: 0 = serial reference path, 1 = OpenMP.
BENCHMARK(BM_Jacobiator)->ArgsProduct({{4, 6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Coboundary)->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModularField)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gauge)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlaschkaRatiu)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
