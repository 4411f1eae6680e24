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

#include "pddshap/dataset.hpp"

#include <fstream>
#include <sstream>

#include "pddshap/errors.hpp"
#include "pddshap/rng.hpp"
#include "pddshap/text_format.hpp"

namespace pddshap {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.emplace_back(trim(std::string_view(line).substr(start)));
      break;
    }
    cells.emplace_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

}  // namespace

Dataset load_csv(const std::string& path,
                 const std::optional<std::string>& target_column) {
  std::ifstream file(path);
  if (!file) throw DataError("cannot open '" + path + "'");

  std::string line;
  if (!std::getline(file, line)) {
    throw EmptyDataError("'" + path + "' is empty");
  }
  const std::vector<std::string> header = split_line(line);
  if (header.empty() || (header.size() == 1 && header[0].empty())) {
    throw DataError("'" + path + "' has an empty header");
  }

  std::size_t target_index = header.size();  // one past the end = no target
  if (target_column) {
    for (std::size_t j = 0; j < header.size(); ++j) {
      if (header[j] == *target_column) {
        target_index = j;
        break;
      }
    }
    if (target_index == header.size()) {
      throw DataError("'" + path + "' has no column named '" + *target_column + "'");
    }
  }

  std::vector<std::string> feature_names;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j != target_index) feature_names.push_back(header[j]);
  }

  std::vector<double> values;
  std::vector<double> target;
  std::size_t rows = 0;
  std::size_t line_number = 1;
  while (std::getline(file, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size()) {
      throw DataError("'" + path + "' line " + std::to_string(line_number) +
                      ": expected " + std::to_string(header.size()) +
                      " cells, got " + std::to_string(cells.size()));
    }
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const auto value = parse_decimal(cells[j]);
      if (!value) {
        throw DataError("'" + path + "' line " + std::to_string(line_number) +
                        ", column " + std::to_string(j + 1) + " ('" + cells[j] +
                        "'): not a finite number");
      }
      if (j == target_index) {
        target.push_back(*value);
      } else {
        values.push_back(*value);
      }
    }
    ++rows;
  }
  if (rows == 0) {
    throw EmptyDataError("'" + path + "' has a header but no data rows");
  }

  Dataset dataset;
  dataset.features =
      SampleMatrix(rows, feature_names.size(), std::move(values), feature_names);
  if (target_column) {
    dataset.target = std::move(target);
    dataset.target_name = *target_column;
  }
  return dataset;
}

SampleMatrix sample_background(const SampleMatrix& X, std::size_t n,
                               std::uint64_t seed) {
  if (n < 1 || n > X.rows()) {
    throw InvalidArgumentError("background size must be in [1, " +
                               std::to_string(X.rows()) + "], got " +
                               std::to_string(n));
  }
  Rng rng(seed);
  std::vector<std::size_t> order(X.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = 0; i < n; ++i) {  // partial Fisher-Yates
    const std::size_t j = i + rng.bounded(order.size() - i);
    std::swap(order[i], order[j]);
  }
  std::vector<double> values;
  values.reserve(n * X.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = X.row(order[i]);
    values.insert(values.end(), row.begin(), row.end());
  }
  return {n, X.cols(), std::move(values), X.column_names()};
}

}  // namespace pddshap
