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
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "pddshap/feature_subset.hpp"
#include "pddshap/model.hpp"
#include "pddshap/regressor.hpp"
#include "pddshap/sample_matrix.hpp"

namespace pddshap {

// (1/N) sum_z f(compose(x, u, z)) over the background rows; one batched model
// call of N rows. u must be nonempty.
double partial_dependence(const BlackBoxModel& f, const FeatureSubset& u,
                          std::span<const double> x, const SampleMatrix& background);

struct TrainOptions {
  RegressorConfig regressor;
  // When > 0, each inner average uses this many background rows drawn without
  // replacement instead of the full background. Off by default: the training
  // cost is defined by the full double loop.
  std::size_t inner_subsample = 0;
  std::uint64_t seed = 0;  // only consumed by inner subsampling
  int jobs = 1;
};

// Truncated partial-dependence-decomposition surrogate: the constant term
// plus one trained component regressor per retained subset. Components are
// downward closed (every nonempty proper subset of a key is a key), which the
// constructor enforces. Immutable after construction; safe for concurrent
// prediction.
class PDDSurrogate {
 public:
  using ComponentMap = std::map<FeatureSubset, std::unique_ptr<ComponentRegressor>>;

  PDDSurrogate(double baseline, int dimension, int order,
               std::uint64_t background_fingerprint, ComponentMap components);

  double baseline() const { return baseline_; }  // the constant term
  int dimension() const { return dimension_; }
  int order() const { return order_; }
  std::uint64_t background_fingerprint() const { return background_fingerprint_; }
  const ComponentMap& components() const { return components_; }

  // baseline + sum_u component_u(x_u), per row.
  std::vector<double> predict(const SampleMatrix& X) const;

  // One component evaluated on the projected columns, per row.
  std::vector<double> component_values(const FeatureSubset& u,
                                       const SampleMatrix& X) const;

 private:
  double baseline_;
  int dimension_;
  int order_;
  std::uint64_t background_fingerprint_;
  ComponentMap components_;
};

// Fits the surrogate on a background sample: the constant term is the
// empirical mean; then, in cardinality order, each retained subset's
// regressor is fit on the projected background with targets
//   partial_dependence(f, u, x, X_bg) - baseline - sum of trained
//   sub-component predictions.
// Model-call budget: N
//   + N * (inner_subsample > 0 ? inner_subsample : N) per retained subset.
PDDSurrogate train_pdd(const BlackBoxModel& f, const SampleMatrix& background,
                       int order, const TrainOptions& options = {});

struct VarianceReport {
  std::map<FeatureSubset, double> per_subset;  // mean squared component value
  double total = 0.0;                          // variance of the surrogate output
};

// Second moments of each component and the variance of the full surrogate
// prediction over an evaluation sample.
VarianceReport component_variances(const PDDSurrogate& surrogate,
                                   const SampleMatrix& X_eval);

// Global importances: each subset's second moment split equally among its
// members.
std::vector<double> shapley_effects(const VarianceReport& report, int dimension);

}  // namespace pddshap
