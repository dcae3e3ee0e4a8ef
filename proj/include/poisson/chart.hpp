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

#ifndef POISSON_CHART_HPP
#define POISSON_CHART_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace poisson {

class Expr;

// An immutable ordered list of coordinate names x1..xm. Cheap to copy.
class Chart {
 public:
  // Coordinates "x1".."x<dim>".
  explicit Chart(int dim);
  explicit Chart(std::vector<std::string> coordinates);

  [[nodiscard]] int dimension() const {
    return static_cast<int>(names_->size());
  }
  // 1-based, matching the index convention of coefficient keys.
  [[nodiscard]] const std::string& name(int index) const;
  [[nodiscard]] Expr symbol(int index) const;
  [[nodiscard]] std::optional<int> index_of(std::string_view name) const;
  [[nodiscard]] bool is_coordinate(std::string_view name) const {
    return index_of(name).has_value();
  }
  [[nodiscard]] const std::vector<std::string>& names() const { return *names_; }

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// A chart plus the registry of parameter symbols met while parsing.
// The registry is append-only and guarded by a mutex, so one context may be
// shared by concurrent parsers.
class ChartContext {
 public:
  explicit ChartContext(int dim) : chart_(dim) {}
  explicit ChartContext(Chart chart) : chart_(std::move(chart)) {}
  ChartContext(const ChartContext& other);
  ChartContext& operator=(const ChartContext& other);

  [[nodiscard]] const Chart& chart() const { return chart_; }
  [[nodiscard]] int dimension() const { return chart_.dimension(); }

  // Returns false (and records nothing) when `name` is a coordinate.
  bool register_parameter(const std::string& name) const;
  [[nodiscard]] std::vector<std::string> parameters() const;

 private:
  Chart chart_;
  mutable std::mutex mutex_;
  mutable std::set<std::string> parameters_;
};

}  // namespace poisson

#endif  // POISSON_CHART_HPP
