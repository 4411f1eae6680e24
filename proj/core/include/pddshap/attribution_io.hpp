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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pddshap/sample_matrix.hpp"
#include "pddshap/shapley.hpp"

namespace pddshap {

// Provenance written next to attribution payloads. Wall time is deliberately
// not part of payload files (identical seeded invocations must produce
// byte-identical output); it goes to the log stream instead.
struct AttributionMetadata {
  std::string method;
  std::optional<int> k;
  std::optional<std::uint64_t> seed;
  std::uint64_t n_model_calls = 0;
};

// CSV: header "instance_id,baseline,phi_<name>..." then one row per instance.
// Floats are round-trip exact.
void write_attributions_csv(std::ostream& out, std::span<const Attribution> rows,
                            const std::vector<std::string>& feature_names);

// JSON with the metadata block, feature names and one object per instance.
void write_attributions_json(std::ostream& out, std::span<const Attribution> rows,
                             const std::vector<std::string>& feature_names,
                             const AttributionMetadata& metadata);

struct AttributionFile {
  SampleMatrix phi;  // M x d
  std::vector<double> baselines;
  std::vector<std::string> feature_names;
  std::optional<AttributionMetadata> metadata;  // present for the JSON format
};

// Reads either format back (sniffed by the first non-space byte).
AttributionFile read_attribution_file(const std::string& path);

}  // namespace pddshap
