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

#include "pddshap/regressor.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <numeric>

#include "pddshap/errors.hpp"

namespace pddshap {

namespace {

double mean_of(std::span<const double> targets, const std::vector<std::size_t>& indices,
               std::size_t begin, std::size_t end) {
  double sum = 0.0;
  for (std::size_t i = begin; i < end; ++i) sum += targets[indices[i]];
  return sum / static_cast<double>(end - begin);
}

struct SplitChoice {
  bool found = false;
  int feature = -1;
  double threshold = 0.0;
  double gain = 0.0;
};

}  // namespace

void TreeRegressor::fit(const SampleMatrix& inputs, std::span<const double> targets) {
  if (inputs.rows() != targets.size()) {
    throw DataError("regressor fit: " + std::to_string(inputs.rows()) +
                    " inputs vs " + std::to_string(targets.size()) + " targets");
  }
  if (inputs.empty()) throw EmptyDataError("regressor fit on an empty sample");
  nodes_.clear();
  std::vector<std::size_t> indices(inputs.rows());
  std::iota(indices.begin(), indices.end(), 0);
  build(inputs, targets, indices, 0, indices.size(), 0);
}

int TreeRegressor::build(const SampleMatrix& inputs, std::span<const double> targets,
                         std::vector<std::size_t>& indices, std::size_t begin,
                         std::size_t end, int depth) {
  const std::size_t count = end - begin;
  const int node_id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();

  double sum = 0.0, sum_sq = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = begin; i < end; ++i) {
    const double y = targets[indices[i]];
    sum += y;
    sum_sq += y * y;
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  const double node_mean = sum / static_cast<double>(count);
  const double node_sse = sum_sq - sum * sum / static_cast<double>(count);

  const auto make_leaf = [&] {
    nodes_[node_id].leaf_value = node_mean;
    return node_id;
  };

  const std::size_t min_leaf = static_cast<std::size_t>(params_.min_samples_leaf);
  if (depth >= params_.max_depth || count < 2 * min_leaf || lo == hi) {
    return make_leaf();
  }

  SplitChoice best;
  std::vector<std::pair<double, double>> column(count);  // (value, target)
  for (std::size_t feature = 0; feature < inputs.cols(); ++feature) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t row = indices[i];
      column[i - begin] = {inputs.at(row, feature), targets[row]};
    }
    std::sort(column.begin(), column.end());

    // prefix scan over the sorted targets
    double left_sum = 0.0, left_sq = 0.0;
    for (std::size_t i = 0; i + 1 < count; ++i) {
      const double y = column[i].second;
      left_sum += y;
      left_sq += y * y;
      if (column[i].first == column[i + 1].first) continue;
      const std::size_t n_left = i + 1;
      const std::size_t n_right = count - n_left;
      if (n_left < min_leaf || n_right < min_leaf) continue;
      const double right_sum = sum - left_sum;
      const double right_sq = sum_sq - left_sq;
      const double sse_left = left_sq - left_sum * left_sum / static_cast<double>(n_left);
      const double sse_right =
          right_sq - right_sum * right_sum / static_cast<double>(n_right);
      const double gain = node_sse - sse_left - sse_right;
      if (gain > best.gain) {
        best.found = true;
        best.feature = static_cast<int>(feature);
        best.threshold = std::midpoint(column[i].first, column[i + 1].first);
        best.gain = gain;
      }
    }
  }
  if (!best.found) return make_leaf();

  const auto goes_left = [&](std::size_t row) {
    return inputs.at(row, static_cast<std::size_t>(best.feature)) < best.threshold;
  };
  const auto middle = std::stable_partition(
      indices.begin() + static_cast<std::ptrdiff_t>(begin),
      indices.begin() + static_cast<std::ptrdiff_t>(end), goes_left);
  const std::size_t split = static_cast<std::size_t>(middle - indices.begin());
  if (split == begin || split == end) return make_leaf();  // degenerate midpoint

  nodes_[node_id].feature = best.feature;
  nodes_[node_id].threshold = best.threshold;
  nodes_[node_id].left = build(inputs, targets, indices, begin, split, depth + 1);
  nodes_[node_id].right = build(inputs, targets, indices, split, end, depth + 1);
  return node_id;
}

std::vector<double> TreeRegressor::predict(const SampleMatrix& inputs) const {
  if (nodes_.empty()) throw Error("tree regressor used before fit");
  std::vector<double> out(inputs.rows());
  for (std::size_t i = 0; i < inputs.rows(); ++i) {
    const auto row = inputs.row(i);
    int node = 0;
    while (nodes_[static_cast<std::size_t>(node)].feature >= 0) {
      const TreeNode& n = nodes_[static_cast<std::size_t>(node)];
      node = row[static_cast<std::size_t>(n.feature)] < n.threshold ? n.left : n.right;
    }
    out[i] = nodes_[static_cast<std::size_t>(node)].leaf_value;
  }
  return out;
}

std::unique_ptr<TreeRegressor> TreeRegressor::from_nodes(std::vector<TreeNode> nodes) {
  if (nodes.empty()) {
    throw SerializationError("tree regressor with no nodes");
  }
  for (const TreeNode& n : nodes) {
    if (n.feature >= 0) {
      const auto valid = [&](int child) {
        return child >= 0 && static_cast<std::size_t>(child) < nodes.size();
      };
      if (!valid(n.left) || !valid(n.right)) {
        throw SerializationError("tree node with dangling child index");
      }
    }
  }
  auto tree = std::make_unique<TreeRegressor>();
  tree->nodes_ = std::move(nodes);
  return tree;
}

void LookupRegressor::fit(const SampleMatrix& inputs, std::span<const double> targets) {
  if (inputs.rows() != targets.size()) {
    throw DataError("regressor fit: " + std::to_string(inputs.rows()) +
                    " inputs vs " + std::to_string(targets.size()) + " targets");
  }
  if (inputs.empty()) throw EmptyDataError("regressor fit on an empty sample");
  points_ = inputs;
  targets_.assign(targets.begin(), targets.end());
  rebuild_index();
}

void LookupRegressor::rebuild_index() {
  exact_.clear();
  exact_.reserve(points_.rows());
  for (std::size_t i = 0; i < points_.rows(); ++i) {
    const auto row = points_.row(i);
    std::string key(reinterpret_cast<const char*>(row.data()),
                    row.size() * sizeof(double));
    exact_.emplace(std::move(key), i);  // keeps the first occurrence
  }
}

std::vector<double> LookupRegressor::predict(const SampleMatrix& inputs) const {
  if (targets_.empty()) throw Error("lookup regressor used before fit");
  if (inputs.cols() != points_.cols()) {
    throw DataError("lookup predict: expected " + std::to_string(points_.cols()) +
                    " columns, got " + std::to_string(inputs.cols()));
  }
  std::vector<double> out(inputs.rows());
  for (std::size_t i = 0; i < inputs.rows(); ++i) {
    const auto row = inputs.row(i);
    const std::string key(reinterpret_cast<const char*>(row.data()),
                          row.size() * sizeof(double));
    if (const auto hit = exact_.find(key); hit != exact_.end()) {
      out[i] = targets_[hit->second];
      continue;
    }
    double best_dist = std::numeric_limits<double>::infinity();
    std::size_t best_row = 0;
    for (std::size_t p = 0; p < points_.rows(); ++p) {
      const auto point = points_.row(p);
      double dist = 0.0;
      for (std::size_t j = 0; j < row.size(); ++j) {
        const double delta = row[j] - point[j];
        dist += delta * delta;
      }
      if (dist < best_dist) {
        best_dist = dist;
        best_row = p;
      }
    }
    out[i] = targets_[best_row];
  }
  return out;
}

std::unique_ptr<LookupRegressor> LookupRegressor::from_data(
    SampleMatrix points, std::vector<double> targets) {
  if (points.rows() != targets.size()) {
    throw SerializationError("lookup regressor with " + std::to_string(points.rows()) +
                             " points but " + std::to_string(targets.size()) +
                             " targets");
  }
  if (points.empty()) throw SerializationError("lookup regressor with no points");
  auto lookup = std::make_unique<LookupRegressor>();
  lookup->points_ = std::move(points);
  lookup->targets_ = std::move(targets);
  lookup->rebuild_index();
  return lookup;
}

std::unique_ptr<ComponentRegressor> make_regressor(const RegressorConfig& config) {
  if (config.kind == "tree") return std::make_unique<TreeRegressor>(config.tree);
  if (config.kind == "lookup") return std::make_unique<LookupRegressor>();
  throw InvalidArgumentError("unknown regressor kind '" + config.kind +
                             "' (expected tree or lookup)");
}

}  // namespace pddshap
