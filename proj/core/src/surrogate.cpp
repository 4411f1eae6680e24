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

#include "pddshap/surrogate.hpp"

#include <algorithm>

#include "pddshap/errors.hpp"
#include "pddshap/parallel.hpp"
#include "pddshap/rng.hpp"

namespace pddshap {

namespace {

constexpr std::uint64_t kInnerSubsampleStream = 0x707364642d696e6eULL;

double mean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// Background rows used for one inner average, drawn without replacement and
// deterministic in (seed, subset ordinal, row).
SampleMatrix draw_inner_sample(const SampleMatrix& background, std::size_t size,
                               std::uint64_t seed, std::uint64_t stream) {
  Rng rng(mix_seed(seed, kInnerSubsampleStream), stream);
  std::vector<int> order(static_cast<int>(background.rows()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + rng.bounded(order.size() - i);
    std::swap(order[i], order[j]);
  }
  std::vector<double> values;
  values.reserve(size * background.cols());
  for (std::size_t i = 0; i < size; ++i) {
    const auto row = background.row(static_cast<std::size_t>(order[i]));
    values.insert(values.end(), row.begin(), row.end());
  }
  return {size, background.cols(), std::move(values)};
}

}  // namespace

double partial_dependence(const BlackBoxModel& f, const FeatureSubset& u,
                          std::span<const double> x, const SampleMatrix& background) {
  if (u.is_empty()) {
    throw InvalidArgumentError("partial dependence of the empty subset");
  }
  if (background.empty()) {
    throw EmptyDataError("partial dependence over an empty background");
  }
  const std::vector<double> outputs = f.evaluate(compose_batch(x, u, background));
  return mean(outputs);
}

PDDSurrogate::PDDSurrogate(double baseline, int dimension, int order,
                           std::uint64_t background_fingerprint,
                           ComponentMap components)
    : baseline_(baseline), dimension_(dimension), order_(order),
      background_fingerprint_(background_fingerprint),
      components_(std::move(components)) {
  if (dimension < 1 || dimension > 64) {
    throw InvalidArgumentError("surrogate dimension must be in [1, 64], got " +
                               std::to_string(dimension));
  }
  if (order < 1 || order > dimension) {
    throw InvalidArgumentError("surrogate order must be in [1, dimension], got " +
                               std::to_string(order));
  }
  for (const auto& [subset, regressor] : components_) {
    if (regressor == nullptr) {
      throw InvalidArgumentError("surrogate component " + subset.to_string() +
                                 " has no regressor");
    }
    if (subset.dimension() != dimension || subset.is_empty() ||
        subset.cardinality() > order) {
      throw InvalidArgumentError("surrogate component " + subset.to_string() +
                                 " violates 1 <= |u| <= k over d features");
    }
    // downward closure: every nonempty proper subset must be present
    const std::uint64_t bits = subset.bits();
    for (std::uint64_t sub = (bits - 1) & bits; sub != 0; sub = (sub - 1) & bits) {
      if (!components_.contains(FeatureSubset(sub, dimension))) {
        throw InvalidArgumentError(
            "surrogate components are not downward closed: " +
            FeatureSubset(sub, dimension).to_string() + " missing under " +
            subset.to_string());
      }
    }
  }
}

std::vector<double> PDDSurrogate::predict(const SampleMatrix& X) const {
  if (X.cols() != static_cast<std::size_t>(dimension_)) {
    throw DataError("surrogate expects " + std::to_string(dimension_) +
                    " columns, got " + std::to_string(X.cols()));
  }
  std::vector<double> out(X.rows(), baseline_);
  for (const auto& [subset, regressor] : components_) {
    const std::vector<double> values = regressor->predict(project_columns(X, subset));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += values[i];
  }
  return out;
}

std::vector<double> PDDSurrogate::component_values(const FeatureSubset& u,
                                                   const SampleMatrix& X) const {
  const auto it = components_.find(u);
  if (it == components_.end()) {
    throw InvalidArgumentError("surrogate has no component " + u.to_string());
  }
  return it->second->predict(project_columns(X, u));
}

PDDSurrogate train_pdd(const BlackBoxModel& f, const SampleMatrix& background,
                       int order, const TrainOptions& options) {
  if (background.empty()) throw EmptyDataError("training on an empty background");
  const int d = static_cast<int>(background.cols());
  if (order < 1 || order > d) {
    throw InvalidArgumentError("order must be in [1, " + std::to_string(d) +
                               "], got " + std::to_string(order));
  }
  if (options.inner_subsample > background.rows()) {
    throw InvalidArgumentError("inner subsample larger than the background");
  }

  const double baseline = empirical_mean(f, background);
  const std::size_t n = background.rows();

  PDDSurrogate::ComponentMap components;
  const std::vector<FeatureSubset> subsets = enumerate_subsets(d, order);
  std::size_t subset_ordinal = 0;
  for (const FeatureSubset& u : subsets) {
    // residual of the already-trained strict sub-components, batched per subset
    std::vector<double> residual(n, 0.0);
    const std::uint64_t bits = u.bits();
    for (std::uint64_t sub = (bits - 1) & bits; sub != 0; sub = (sub - 1) & bits) {
      const FeatureSubset v(sub, d);
      const auto& sub_regressor = components.at(v);
      const std::vector<double> values =
          sub_regressor->predict(project_columns(background, v));
      for (std::size_t i = 0; i < n; ++i) residual[i] += values[i];
    }

    std::vector<double> targets(n);
    const int jobs = f.supports_concurrent_calls() ? options.jobs : 1;
    parallel_for(n, jobs, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        double pd;
        if (options.inner_subsample > 0 && options.inner_subsample < n) {
          const SampleMatrix inner =
              draw_inner_sample(background, options.inner_subsample, options.seed,
                                subset_ordinal * n + i);
          pd = partial_dependence(f, u, background.row(i), inner);
        } else {
          pd = partial_dependence(f, u, background.row(i), background);
        }
        targets[i] = pd - baseline - residual[i];
      }
    });

    auto regressor = make_regressor(options.regressor);
    regressor->fit(project_columns(background, u), targets);
    components.emplace(u, std::move(regressor));
    ++subset_ordinal;
  }

  return {baseline, d, order, background.fingerprint(), std::move(components)};
}

VarianceReport component_variances(const PDDSurrogate& surrogate,
                                   const SampleMatrix& X_eval) {
  if (X_eval.empty()) throw EmptyDataError("variance report over an empty sample");
  VarianceReport report;
  const std::size_t m = X_eval.rows();
  for (const auto& [subset, regressor] : surrogate.components()) {
    const std::vector<double> values =
        regressor->predict(project_columns(X_eval, subset));
    double sum_sq = 0.0;
    for (double v : values) sum_sq += v * v;
    report.per_subset[subset] = sum_sq / static_cast<double>(m);
  }
  const std::vector<double> predictions = surrogate.predict(X_eval);
  const double mean_prediction = mean(predictions);
  double var = 0.0;
  for (double p : predictions) {
    const double centered = p - mean_prediction;
    var += centered * centered;
  }
  report.total = var / static_cast<double>(m);
  return report;
}

std::vector<double> shapley_effects(const VarianceReport& report, int dimension) {
  std::vector<double> effects(static_cast<std::size_t>(dimension), 0.0);
  for (const auto& [subset, sigma_sq] : report.per_subset) {
    const double share = sigma_sq / subset.cardinality();
    for (int j : subset.members()) effects[static_cast<std::size_t>(j)] += share;
  }
  return effects;
}

}  // namespace pddshap
