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

#include <iosfwd>
#include <string>

#include "pddshap/surrogate.hpp"

namespace pddshap {

// Surrogate files are a single self-describing JSON document
// {format, format_version, d, k, f_empty, background_fingerprint, components:
// [{subset, regressor:{kind, tree:{nodes} | lookup:{points, targets}}}]}.
// Floats are serialized round-trip exact, so a save/load cycle preserves
// predictions bit for bit. Load failures name the failing section; an
// unsupported format_version is reported as such.
void save_surrogate(const PDDSurrogate& surrogate, const std::string& path);
void save_surrogate(const PDDSurrogate& surrogate, std::ostream& out);

PDDSurrogate load_surrogate(const std::string& path);
PDDSurrogate load_surrogate(std::istream& in);

}  // namespace pddshap
