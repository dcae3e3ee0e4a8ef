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

#ifndef POISSON_EVALUATE_HPP
#define POISSON_EVALUATE_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <map>
#include <optional>
#include <string>

#include "poisson/expr.hpp"

namespace poisson {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

struct Evaluation {
  HighPrecision value;
  // Largest absolute value met among summands; the scale that rounding
  // error is measured against.
  HighPrecision magnitude;
};

// Returns nullopt at poles and outside the real domain (log of a
// non-positive number, even roots of negatives, tan at odd multiples of
// pi/2). Throws PreconditionError when a symbol has no value.
std::optional<Evaluation> evaluate_high_precision(
    const Expr& e, const std::map<std::string, HighPrecision>& point);

HighPrecision to_high_precision(const Rational& q);

// Double-precision convenience wrapper; throws PreconditionError off-domain.
double evaluate(const Expr& e, const std::map<std::string, double>& point);

}  // namespace poisson

#endif  // POISSON_EVALUATE_HPP
