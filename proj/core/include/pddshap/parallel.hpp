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

#include <cstddef>
#include <functional>

namespace pddshap {

// Runs fn over [0, count) split into contiguous chunks across `jobs` threads.
// jobs <= 1 runs inline. Results must be written to disjoint slots so the
// outcome is identical for any job count. The first exception thrown by a
// worker is rethrown on the calling thread.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t begin, std::size_t end)>& fn);

}  // namespace pddshap
