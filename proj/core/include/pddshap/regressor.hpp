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

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pddshap/sample_matrix.hpp"

namespace pddshap {

// The small model fit to one decomposition component's residual targets.
// After fit(), predict() must be defined for any finite input.
class ComponentRegressor {
 public:
  virtual ~ComponentRegressor() = default;
  virtual void fit(const SampleMatrix& inputs, std::span<const double> targets) = 0;
  virtual std::vector<double> predict(const SampleMatrix& inputs) const = 0;
  virtual std::string_view kind() const = 0;
};

struct TreeParams {
  int max_depth = 6;
  int min_samples_leaf = 2;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double leaf_value = 0.0;
};

// CART regression tree: greedy binary splits minimizing the sum of squared
// deviations, candidate thresholds at midpoints of consecutive distinct
// sorted values, leaf prediction = target mean. Splits stop at max_depth,
// min_samples_leaf or a pure node; ties break deterministically toward the
// lowest feature index, then the lowest threshold.
class TreeRegressor final : public ComponentRegressor {
 public:
  explicit TreeRegressor(TreeParams params = {}) : params_(params) {}

  void fit(const SampleMatrix& inputs, std::span<const double> targets) override;
  std::vector<double> predict(const SampleMatrix& inputs) const override;
  std::string_view kind() const override { return "tree"; }

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeParams& params() const { return params_; }

  // Rebuild from persisted nodes.
  static std::unique_ptr<TreeRegressor> from_nodes(std::vector<TreeNode> nodes);

 private:
  int build(const SampleMatrix& inputs, std::span<const double> targets,
            std::vector<std::size_t>& indices, std::size_t begin, std::size_t end,
            int depth);

  TreeParams params_;
  std::vector<TreeNode> nodes_;
};

// Memorizes the training set and answers with the target of the nearest
// training point (squared Euclidean distance, lowest index on ties), with an
// exact-match fast path. Reproduces its training targets exactly, which makes
// closed-form results comparable against exhaustive oracles without fit error.
class LookupRegressor final : public ComponentRegressor {
 public:
  void fit(const SampleMatrix& inputs, std::span<const double> targets) override;
  std::vector<double> predict(const SampleMatrix& inputs) const override;
  std::string_view kind() const override { return "lookup"; }

  const SampleMatrix& points() const { return points_; }
  const std::vector<double>& targets() const { return targets_; }

  static std::unique_ptr<LookupRegressor> from_data(SampleMatrix points,
                                                    std::vector<double> targets);

 private:
  void rebuild_index();

  SampleMatrix points_;
  std::vector<double> targets_;
  std::unordered_map<std::string, std::size_t> exact_;  // raw bytes -> first row
};

struct RegressorConfig {
  std::string kind = "tree";  // "tree" or "lookup"
  TreeParams tree;
};

std::unique_ptr<ComponentRegressor> make_regressor(const RegressorConfig& config);

}  // namespace pddshap
