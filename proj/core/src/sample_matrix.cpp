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

#include "pddshap/sample_matrix.hpp"

#include <cmath>
#include <cstring>

#include "pddshap/errors.hpp"

namespace pddshap {

SampleMatrix::SampleMatrix(std::size_t rows, std::size_t cols,
                           std::vector<double> values,
                           std::vector<std::string> column_names)
    : rows_(rows), cols_(cols), values_(std::move(values)),
      column_names_(std::move(column_names)) {
  if (values_.size() != rows_ * cols_) {
    throw DataError("matrix value count " + std::to_string(values_.size()) +
                    " does not match " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  }
  if (!column_names_.empty() && column_names_.size() != cols_) {
    throw DataError("column name count " + std::to_string(column_names_.size()) +
                    " does not match column count " + std::to_string(cols_));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DataError("non-finite value at row " + std::to_string(i / cols_) +
                      ", column " + std::to_string(i % cols_));
    }
  }
}

SampleMatrix SampleMatrix::from_rows(const std::vector<std::vector<double>>& rows,
                                     std::vector<std::string> column_names) {
  const std::size_t n = rows.size();
  const std::size_t d = n == 0 ? 0 : rows.front().size();
  std::vector<double> values;
  values.reserve(n * d);
  for (const auto& r : rows) {
    if (r.size() != d) {
      throw DataError("ragged rows: expected " + std::to_string(d) +
                      " columns, got " + std::to_string(r.size()));
    }
    values.insert(values.end(), r.begin(), r.end());
  }
  return {n, d, std::move(values), std::move(column_names)};
}

std::uint64_t SampleMatrix::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto absorb = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  absorb(rows_);
  absorb(cols_);
  for (double v : values_) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    absorb(bits);
  }
  return h;
}

std::vector<double> compose(std::span<const double> x, const FeatureSubset& u,
                            std::span<const double> z) {
  const std::size_t d = static_cast<std::size_t>(u.dimension());
  if (x.size() != d || z.size() != d) {
    throw DataError("compose dimension mismatch: |x|=" + std::to_string(x.size()) +
                    ", |z|=" + std::to_string(z.size()) + ", subset over " +
                    std::to_string(d) + " features");
  }
  std::vector<double> result(z.begin(), z.end());
  for (std::size_t j = 0; j < d; ++j) {
    if (u.contains(static_cast<int>(j))) result[j] = x[j];
  }
  return result;
}

SampleMatrix compose_batch(std::span<const double> x, const FeatureSubset& u,
                           const SampleMatrix& background) {
  const std::size_t d = static_cast<std::size_t>(u.dimension());
  if (x.size() != d || background.cols() != d) {
    throw DataError("compose dimension mismatch: |x|=" + std::to_string(x.size()) +
                    ", background has " + std::to_string(background.cols()) +
                    " columns, subset over " + std::to_string(d) + " features");
  }
  std::vector<double> values(background.values());
  const std::size_t n = background.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double* row = values.data() + i * d;
    for (std::size_t j = 0; j < d; ++j) {
      if (u.contains(static_cast<int>(j))) row[j] = x[j];
    }
  }
  return {n, d, std::move(values)};
}

SampleMatrix project_columns(const SampleMatrix& X, const FeatureSubset& u) {
  if (X.cols() != static_cast<std::size_t>(u.dimension())) {
    throw DataError("projection dimension mismatch: matrix has " +
                    std::to_string(X.cols()) + " columns, subset over " +
                    std::to_string(u.dimension()));
  }
  const std::vector<int> cols = u.members();
  std::vector<double> values;
  values.reserve(X.rows() * cols.size());
  std::vector<std::string> names;
  if (!X.column_names().empty()) {
    names.reserve(cols.size());
    for (int j : cols) names.push_back(X.column_names()[static_cast<std::size_t>(j)]);
  }
  for (std::size_t i = 0; i < X.rows(); ++i) {
    const auto row = X.row(i);
    for (int j : cols) values.push_back(row[static_cast<std::size_t>(j)]);
  }
  return {X.rows(), cols.size(), std::move(values), std::move(names)};
}

}  // namespace pddshap
