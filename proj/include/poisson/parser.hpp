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

#ifndef POISSON_PARSER_HPP
#define POISSON_PARSER_HPP

#include <optional>
#include <string_view>

#include "poisson/chart.hpp"
#include "poisson/expr.hpp"

namespace poisson {

// Parses infix text with + - * / ** (right associative), unary signs,
// parentheses, exact decimal/integer literals, and calls to the fixed
// function set. Identifiers that are not coordinates of ctx are registered
// as parameters. Throws ParseError on malformed input.
Expr parse_expr(std::string_view source, const ChartContext& ctx);

std::optional<Function> function_from_name(std::string_view name);

}  // namespace poisson

#endif  // POISSON_PARSER_HPP
