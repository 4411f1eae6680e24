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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pddshap/sample_matrix.hpp"

namespace pddshap {

struct Dataset {
  SampleMatrix features;
  std::optional<std::vector<double>> target;
  std::string target_name;
};

// Loads a comma-separated file with a header line and numeric data rows.
// When target_column names a header, that column is returned separately and
// excluded from the features. Parse errors carry the 1-based file line and
// column; empty and header-only files are rejected.
Dataset load_csv(const std::string& path,
                 const std::optional<std::string>& target_column = std::nullopt);

// Uniform sample of n rows without replacement, in shuffled order;
// deterministic given seed. Requires 1 <= n <= rows.
SampleMatrix sample_background(const SampleMatrix& X, std::size_t n,
                               std::uint64_t seed);

}  // namespace pddshap
