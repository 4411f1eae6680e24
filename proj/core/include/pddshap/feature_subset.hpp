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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pddshap {

// A subset of the feature indices 0..d-1, stored as a single machine word.
// d is capped at 64; with low interaction orders that covers datasets far
// wider than the word (only subsets of cardinality <= k are ever built).
//
// Subsets are totally ordered by (cardinality, bitmask value), so ordered
// containers iterate components in training order.
class FeatureSubset {
 public:
  FeatureSubset() = default;  // empty set over zero features
  FeatureSubset(std::uint64_t bits, int dimension);

  static FeatureSubset empty_set(int dimension) { return {0, dimension}; }
  static FeatureSubset full_set(int dimension);
  static FeatureSubset single(int index, int dimension);
  static FeatureSubset of(std::initializer_list<int> members, int dimension);
  static FeatureSubset of(const std::vector<int>& members, int dimension);

  std::uint64_t bits() const { return bits_; }
  int dimension() const { return dimension_; }
  int cardinality() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return cardinality() == dimension_; }

  bool contains(int index) const { return (bits_ >> index) & 1u; }
  bool is_subset_of(const FeatureSubset& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  FeatureSubset with(int index) const;
  FeatureSubset without(int index) const;
  FeatureSubset complement() const;

  // member indices in strictly increasing order
  std::vector<int> members() const;

  // e.g. "{0,3,7}"
  std::string to_string() const;

  friend bool operator==(const FeatureSubset& a, const FeatureSubset& b) {
    return a.bits_ == b.bits_ && a.dimension_ == b.dimension_;
  }
  friend bool operator<(const FeatureSubset& a, const FeatureSubset& b) {
    const int ca = a.cardinality(), cb = b.cardinality();
    if (ca != cb) return ca < cb;
    return a.bits_ < b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  int dimension_ = 0;
};

// Every nonempty subset with cardinality <= k, ordered by cardinality
// ascending, ties broken by ascending bitmask value. Requires 1 <= k <= d <= 64.
std::vector<FeatureSubset> enumerate_subsets(int dimension, int max_order);

}  // namespace pddshap
