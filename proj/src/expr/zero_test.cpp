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

#include <cstdlib>
#include <map>
#include <random>
#include <string>

#include "poisson/evaluate.hpp"
#include "poisson/simplify.hpp"

namespace poisson {
namespace {

ZeroTestConfig config_from_environment() {
  ZeroTestConfig config;
  if (const char* env = std::getenv("POISSON_ZERO_SAMPLES")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0 && n <= 100000) config.samples = static_cast<int>(n);
  }
  return config;
}

bool has_kernel_atom(const RationalForm& form) {
  for (const Expr& a : form.atoms) {
    if (!a.is_symbol()) return true;
  }
  return false;
}

}  // namespace

const ZeroTestConfig& ZeroTestConfig::global() {
  static const ZeroTestConfig config = config_from_environment();
  return config;
}

ZeroVerdict zero_test(const Expr& e, const ZeroTestConfig& config) {
  if (e.is_constant()) return {e.is_zero_constant(), ZeroMethod::kExact, false};
  if (e.is_symbol()) return {false, ZeroMethod::kExact, false};

  const RationalForm form = to_rational_form(e);
  if (form.value.is_zero()) return {true, ZeroMethod::kExact, false};
  if (!has_kernel_atom(form)) return {false, ZeroMethod::kExact, false};

  // The numerator is a polynomial in atoms with algebraic or transcendental
  // relations between them; decide it numerically.
  const Expr numerator = polynomial_to_expr(form.value.numerator(), form.atoms);
  const std::vector<std::string> symbols = free_symbols(numerator);
  std::mt19937_64 rng(config.seed ^ (static_cast<std::uint64_t>(e.hash()) * 0x9e3779b97f4a7c15ULL));
  std::uniform_int_distribution<long> numerators(-10000, 10000);
  std::uniform_int_distribution<long> denominators(1, 1000);

  const HighPrecision tolerance(config.relative_tolerance);
  int valid = 0;
  const int max_attempts = 10 * config.samples;
  for (int attempt = 0; attempt < max_attempts && valid < config.samples; ++attempt) {
    std::map<std::string, HighPrecision> point;
    for (const std::string& s : symbols) {
      // A random rational in [-10, 10].
      const long den = denominators(rng);
      const long num = numerators(rng) * den / 1000;
      point.emplace(s, HighPrecision(num) / HighPrecision(den));
    }
    auto value = evaluate_high_precision(numerator, point);
    if (!value) continue;
    ++valid;
    const HighPrecision scale = value->magnitude > 1 ? value->magnitude : HighPrecision(1);
    if (abs(value->value) > tolerance * scale) return {false, ZeroMethod::kSampled, false};
  }
  if (valid == 0) return {false, ZeroMethod::kSampled, true};
  return {true, ZeroMethod::kSampled, false};
}

bool is_zero(const Expr& e) { return zero_test(e).zero; }

bool equals(const Expr& a, const Expr& b) { return a == b || is_zero(a - b); }

}  // namespace poisson
