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

#include "pddshap/feature_subset.hpp"

#include <algorithm>

#include "pddshap/errors.hpp"

namespace pddshap {

namespace {

std::uint64_t mask_of_width(int d) {
  return d >= 64 ? ~0ULL : ((1ULL << d) - 1);
}

}  // namespace

FeatureSubset::FeatureSubset(std::uint64_t bits, int dimension)
    : bits_(bits), dimension_(dimension) {
  if (dimension < 0 || dimension > 64) {
    throw InvalidArgumentError("feature count must be in [0, 64], got " +
                               std::to_string(dimension));
  }
  if ((bits & ~mask_of_width(dimension)) != 0) {
    throw InvalidArgumentError("subset contains indices >= dimension " +
                               std::to_string(dimension));
  }
}

FeatureSubset FeatureSubset::full_set(int dimension) {
  if (dimension < 1 || dimension > 64) {
    throw InvalidArgumentError("feature count must be in [1, 64], got " +
                               std::to_string(dimension));
  }
  return {mask_of_width(dimension), dimension};
}

FeatureSubset FeatureSubset::single(int index, int dimension) {
  if (index < 0 || index >= dimension) {
    throw InvalidArgumentError("feature index " + std::to_string(index) +
                               " out of range for dimension " +
                               std::to_string(dimension));
  }
  return {1ULL << index, dimension};
}

FeatureSubset FeatureSubset::of(std::initializer_list<int> members, int dimension) {
  return of(std::vector<int>(members), dimension);
}

FeatureSubset FeatureSubset::of(const std::vector<int>& members, int dimension) {
  std::uint64_t bits = 0;
  for (int index : members) {
    if (index < 0 || index >= dimension) {
      throw InvalidArgumentError("feature index " + std::to_string(index) +
                                 " out of range for dimension " +
                                 std::to_string(dimension));
    }
    bits |= 1ULL << index;
  }
  return {bits, dimension};
}

FeatureSubset FeatureSubset::with(int index) const {
  if (index < 0 || index >= dimension_) {
    throw InvalidArgumentError("feature index " + std::to_string(index) +
                               " out of range for dimension " +
                               std::to_string(dimension_));
  }
  return {bits_ | (1ULL << index), dimension_};
}

FeatureSubset FeatureSubset::without(int index) const {
  if (index < 0 || index >= dimension_) {
    throw InvalidArgumentError("feature index " + std::to_string(index) +
                               " out of range for dimension " +
                               std::to_string(dimension_));
  }
  return {bits_ & ~(1ULL << index), dimension_};
}

FeatureSubset FeatureSubset::complement() const {
  return {~bits_ & mask_of_width(dimension_), dimension_};
}

std::vector<int> FeatureSubset::members() const {
  std::vector<int> result;
  result.reserve(static_cast<std::size_t>(cardinality()));
  for (int j = 0; j < dimension_; ++j) {
    if (contains(j)) result.push_back(j);
  }
  return result;
}

std::string FeatureSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int j : members()) {
    if (!first) s += ",";
    s += std::to_string(j);
    first = false;
  }
  s += "}";
  return s;
}

std::vector<FeatureSubset> enumerate_subsets(int dimension, int max_order) {
  if (dimension < 1 || dimension > 64) {
    throw InvalidArgumentError("feature count must be in [1, 64], got " +
                               std::to_string(dimension));
  }
  if (max_order < 1 || max_order > dimension) {
    throw InvalidArgumentError("order must be in [1, " +
                               std::to_string(dimension) + "], got " +
                               std::to_string(max_order));
  }

  std::vector<FeatureSubset> result;
  for (int size = 1; size <= max_order; ++size) {
    if (size == 64) {  // only reachable when dimension == 64
      result.push_back(FeatureSubset::full_set(dimension));
      continue;
    }
    // Gosper's hack walks all size-bit masks in ascending numeric order.
    std::uint64_t mask = (1ULL << size) - 1;
    while (true) {
      if (dimension < 64 && mask >= (1ULL << dimension)) break;
      result.emplace_back(mask, dimension);
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t carry = mask + low;
      if (carry == 0) break;  // wrapped past the top mask (dimension == 64)
      mask = (((mask ^ carry) >> 2) / low) | carry;
    }
  }
  return result;
}

}  // namespace pddshap
