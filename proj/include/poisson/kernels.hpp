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

#ifndef POISSON_KERNELS_HPP
#define POISSON_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "poisson/alternating.hpp"
#include "poisson/expr.hpp"

namespace poisson {

// How the per-coefficient work of an operation is scheduled. kSerial is the
// reference path; kParallel spreads coefficients over OpenMP threads and must
// produce identical results.
enum class Execution : std::uint8_t { kSerial, kParallel };

// Evaluates produce(i) for every i < n, simplifies each value and zero-tests
// it. Zero values come back as nullopt. The first exception thrown by any
// task is rethrown on the calling thread.
std::vector<std::optional<Expr>> normalize_each(std::size_t n, const std::function<Expr(std::size_t)>& produce,
                                                Execution exec);

// Builds a field whose coefficient on keys[i] is produce(i).
template <Variance V>
AlternatingField<V> build_field(const Chart& chart, int degree, const std::vector<IndexKey>& keys,
                                const std::function<Expr(const IndexKey&)>& produce, Execution exec) {
  auto values = normalize_each(
      keys.size(), [&](std::size_t i) { return produce(keys[i]); }, exec);
  typename AlternatingField<V>::Coefficients out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (values[i]) out.emplace(keys[i], *std::move(values[i]));
  }
  return AlternatingField<V>(typename AlternatingField<V>::Normalized{}, chart, degree, std::move(out));
}

}  // namespace poisson

#endif  // POISSON_KERNELS_HPP
