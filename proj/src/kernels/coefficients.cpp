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

#include <exception>
#include <mutex>

#include "poisson/kernels.hpp"
#include "poisson/simplify.hpp"

namespace poisson {
namespace {

std::optional<Expr> normalized(const Expr& raw) {
  Expr value = simplify(raw);
  if (is_zero(value)) return std::nullopt;
  return value;
}

}  // namespace

std::vector<std::optional<Expr>> normalize_each(std::size_t n, const std::function<Expr(std::size_t)>& produce,
                                                Execution exec) {
  std::vector<std::optional<Expr>> out(n);
  if (exec == Execution::kSerial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = normalized(produce(i));
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = normalized(produce(static_cast<std::size_t>(i)));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace poisson
