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
#include <span>
#include <string>
#include <vector>

#include "pddshap/feature_subset.hpp"

namespace pddshap {

// Row-major matrix of instances. All entries must be finite; column names are
// optional and carried through sampling and projection. Immutable after
// construction and safe to share across threads.
class SampleMatrix {
 public:
  SampleMatrix() = default;
  SampleMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
               std::vector<std::string> column_names = {});

  static SampleMatrix from_rows(const std::vector<std::vector<double>>& rows,
                                std::vector<std::string> column_names = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
  }
  double at(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

  const std::vector<double>& values() const { return values_; }
  const std::vector<std::string>& column_names() const { return column_names_; }

  // FNV-1a over the dimensions and raw value bits; identifies the background
  // sample a surrogate was trained on.
  std::uint64_t fingerprint() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
  std::vector<std::string> column_names_;
};

// z with the coordinates in u overwritten from x. Both instances must have
// the same length as u's dimension.
std::vector<double> compose(std::span<const double> x, const FeatureSubset& u,
                            std::span<const double> z);

// One composed row per background row: row i = compose(x, u, background[i]).
SampleMatrix compose_batch(std::span<const double> x, const FeatureSubset& u,
                           const SampleMatrix& background);

// Columns of X restricted to u, in ascending index order (M x |u|).
SampleMatrix project_columns(const SampleMatrix& X, const FeatureSubset& u);

}  // namespace pddshap
