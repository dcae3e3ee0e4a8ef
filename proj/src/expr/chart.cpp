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

#include "poisson/chart.hpp"

#include <set>

#include "poisson/errors.hpp"
#include "poisson/expr.hpp"

namespace poisson {

Chart::Chart(int dim) {
  if (dim < 1) throw PreconditionError("chart dimension must be at least 1");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(dim));
  for (int i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Chart::Chart(std::vector<std::string> coordinates) {
  if (coordinates.empty()) throw PreconditionError("chart dimension must be at least 1");
  std::set<std::string> seen(coordinates.begin(), coordinates.end());
  if (seen.size() != coordinates.size()) throw PreconditionError("coordinate names must be distinct");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(coordinates));
}

const std::string& Chart::name(int index) const {
  return names_->at(static_cast<std::size_t>(index - 1));
}

Expr Chart::symbol(int index) const { return Expr::symbol(name(index)); }

std::optional<int> Chart::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return static_cast<int>(i + 1);
  }
  return std::nullopt;
}

ChartContext::ChartContext(const ChartContext& other) : chart_(other.chart_) {
  std::lock_guard lock(other.mutex_);
  parameters_ = other.parameters_;
}

ChartContext& ChartContext::operator=(const ChartContext& other) {
  if (this == &other) return *this;
  std::set<std::string> copy;
  {
    std::lock_guard lock(other.mutex_);
    copy = other.parameters_;
  }
  std::lock_guard lock(mutex_);
  chart_ = other.chart_;
  parameters_ = std::move(copy);
  return *this;
}

bool ChartContext::register_parameter(const std::string& name) const {
  if (chart_.is_coordinate(name)) return false;
  std::lock_guard lock(mutex_);
  parameters_.insert(name);
  return true;
}

std::vector<std::string> ChartContext::parameters() const {
  std::lock_guard lock(mutex_);
  return {parameters_.begin(), parameters_.end()};
}

}  // namespace poisson
