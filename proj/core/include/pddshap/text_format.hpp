/*
 * Copyright 2026 The pddshap Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace pddshap {

// Shortest decimal string that parses back to exactly the same double.
// Used for every float the library writes to wire or file.
std::string to_decimal_string(double value);

// Strict decimal parse of an entire (whitespace-trimmed) token.
// Returns nullopt on syntax errors, trailing garbage or non-finite values.
std::optional<double> parse_decimal(std::string_view token);

// strip leading/trailing spaces, tabs and CR
std::string_view trim(std::string_view s);

}  // namespace pddshap
