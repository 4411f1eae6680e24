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
#include <random>
#include <span>
#include <vector>

namespace pddshap {

// Derives an independent stream seed from (seed, stream) with a SplitMix64
// round. Explaining a batch splits per instance through this, so results do
// not depend on the order instances are processed in.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Seeded generator with hand-rolled draws on top of std::mt19937_64 so that
// identical seeds give identical streams on every platform (the standard
// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(mix_seed(seed, stream)) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, n); n must be > 0
  std::size_t bounded(std::size_t n);

  // uniform in [0, 1)
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  void shuffle(std::span<int> values);

  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace pddshap
