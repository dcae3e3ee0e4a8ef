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

#ifndef POISSON_ERRORS_HPP
#define POISSON_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poisson {

// Malformed expression text. position() is the 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        detail_(message),
        position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }
  // The message without the position suffix.
  [[nodiscard]] const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

// Structurally invalid input: bad keys, wrong JSON shape, missing operands.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition does not hold (degree or dimension mismatch,
// zero volume density, non-invertible gauge, non-homogeneous input, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonInvertibleGauge : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace poisson

#endif  // POISSON_ERRORS_HPP
