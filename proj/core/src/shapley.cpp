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

#include "pddshap/shapley.hpp"

#include <algorithm>
#include <numeric>

#include "pddshap/errors.hpp"
#include "pddshap/rng.hpp"

namespace pddshap {

namespace {

constexpr int kMaxExactDimension = 20;

// C(n, k) for n <= 63; exact in double well beyond the n <= 19 used here.
double binomial(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

void require_exact_dimension(std::size_t d, const char* what) {
  if (d > kMaxExactDimension) {
    throw InvalidArgumentError(
        std::string(what) + " enumerates all 2^d coalitions and supports at most " +
        std::to_string(kMaxExactDimension) + " features (got " + std::to_string(d) +
        "); use subset or antithetic sampling instead");
  }
}

}  // namespace

GameValues::GameValues(int dimension, std::vector<double> values_by_mask)
    : dimension_(dimension), values_(std::move(values_by_mask)) {
  if (dimension < 1) {
    throw InvalidArgumentError("game needs at least one player");
  }
  require_exact_dimension(static_cast<std::size_t>(dimension), "a materialized game");
  const std::size_t expected = 1ULL << dimension;
  if (values_.size() != expected) {
    throw InvalidArgumentError("incomplete game: expected " +
                               std::to_string(expected) + " coalition values, got " +
                               std::to_string(values_.size()));
  }
  const double shift = values_[0];
  if (shift != 0.0) {
    for (double& v : values_) v -= shift;
  }
}

GameValues GameValues::from_map(int dimension,
                                const std::map<FeatureSubset, double>& values) {
  if (dimension < 1) {
    throw InvalidArgumentError("game needs at least one player");
  }
  require_exact_dimension(static_cast<std::size_t>(dimension), "a materialized game");
  std::vector<double> by_mask(std::size_t{1} << dimension, 0.0);
  std::vector<bool> seen(by_mask.size(), false);
  seen[0] = true;  // empty coalition defaults to zero
  for (const auto& [subset, value] : values) {
    if (subset.dimension() != dimension) {
      throw InvalidArgumentError("game entry " + subset.to_string() +
                                 " has dimension " +
                                 std::to_string(subset.dimension()) + ", expected " +
                                 std::to_string(dimension));
    }
    by_mask[subset.bits()] = value;
    seen[subset.bits()] = true;
  }
  for (std::size_t mask = 0; mask < seen.size(); ++mask) {
    if (!seen[mask]) {
      throw InvalidArgumentError("incomplete game: no value for coalition " +
                                 FeatureSubset(mask, dimension).to_string());
    }
  }
  return {dimension, std::move(by_mask)};
}

Attribution shapley_from_game(const GameValues& game) {
  const int d = game.dimension();
  const std::uint64_t n_masks = 1ULL << d;
  const std::vector<double>& val = game.values();

  std::vector<double> inverse_weight(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c) inverse_weight[c] = 1.0 / binomial(d - 1, c);

  Attribution result;
  result.phi.assign(static_cast<std::size_t>(d), 0.0);
  for (std::uint64_t mask = 0; mask < n_masks; ++mask) {
    const double w = inverse_weight[static_cast<std::size_t>(std::popcount(mask))];
    for (int j = 0; j < d; ++j) {
      if (mask & (1ULL << j)) continue;
      result.phi[static_cast<std::size_t>(j)] +=
          w * (val[mask | (1ULL << j)] - val[mask]);
    }
  }
  for (double& phi : result.phi) phi /= static_cast<double>(d);
  return result;
}

Attribution shapley_from_decomposition(const SubsetFunctionals& functionals) {
  if (functionals.dimension < 1) {
    throw InvalidArgumentError("decomposition needs at least one feature");
  }
  Attribution result;
  result.phi.assign(static_cast<std::size_t>(functionals.dimension), 0.0);
  for (const auto& [subset, g] : functionals.g) {
    if (subset.is_empty()) continue;  // the constant term carries no attribution
    if (subset.dimension() != functionals.dimension) {
      throw InvalidArgumentError("functional for " + subset.to_string() +
                                 " has dimension " +
                                 std::to_string(subset.dimension()) + ", expected " +
                                 std::to_string(functionals.dimension));
    }
    const double share = g / subset.cardinality();
    for (int j : subset.members()) result.phi[static_cast<std::size_t>(j)] += share;
  }
  return result;
}

std::vector<Attribution> pdd_shapley(const PDDSurrogate& surrogate,
                                     const SampleMatrix& X) {
  if (X.cols() != static_cast<std::size_t>(surrogate.dimension())) {
    throw DataError("surrogate expects " + std::to_string(surrogate.dimension()) +
                    " columns, got " + std::to_string(X.cols()));
  }
  const std::size_t rows = X.rows();
  const std::size_t d = static_cast<std::size_t>(surrogate.dimension());
  std::vector<Attribution> result(rows);
  for (auto& attribution : result) {
    attribution.phi.assign(d, 0.0);
    attribution.baseline = surrogate.baseline();
  }
  for (const auto& [subset, regressor] : surrogate.components()) {
    const std::vector<double> values = regressor->predict(project_columns(X, subset));
    const double inv_cardinality = 1.0 / subset.cardinality();
    const std::vector<int> members = subset.members();
    for (std::size_t i = 0; i < rows; ++i) {
      const double share = values[i] * inv_cardinality;
      for (int j : members) result[i].phi[static_cast<std::size_t>(j)] += share;
    }
  }
  return result;
}

Attribution pdd_shapley_single(const PDDSurrogate& surrogate,
                               std::span<const double> x) {
  SampleMatrix one(1, x.size(), std::vector<double>(x.begin(), x.end()));
  return pdd_shapley(surrogate, one).front();
}

GameValues materialize_game(const BlackBoxModel& f, std::span<const double> x,
                            const SampleMatrix& background, double* mean_out) {
  const std::size_t d = x.size();
  require_exact_dimension(d, "the exact oracle");
  if (background.empty()) throw EmptyDataError("exact oracle with an empty background");
  if (background.cols() != d) {
    throw DataError("instance has " + std::to_string(d) + " features, background has " +
                    std::to_string(background.cols()) + " columns");
  }

  const std::uint64_t n_masks = 1ULL << d;
  std::vector<double> averages(n_masks);
  for (std::uint64_t mask = 0; mask < n_masks; ++mask) {
    const FeatureSubset u(mask, static_cast<int>(d));
    const std::vector<double> outputs = f.evaluate(compose_batch(x, u, background));
    double sum = 0.0;
    for (double v : outputs) sum += v;
    averages[mask] = sum / static_cast<double>(outputs.size());
  }
  // the empty-coalition average is the empirical mean; the constructor shifts
  // it out of every coalition value
  if (mean_out != nullptr) *mean_out = averages[0];
  return {static_cast<int>(d), std::move(averages)};
}

Attribution exact_shapley(const BlackBoxModel& f, std::span<const double> x,
                          const SampleMatrix& background) {
  double mean = 0.0;
  const GameValues game = materialize_game(f, x, background, &mean);
  Attribution result = shapley_from_game(game);
  result.baseline = mean;
  return result;
}

Attribution subset_sampling_shapley(const BlackBoxModel& f, std::span<const double> x,
                                    const SampleMatrix& background,
                                    std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw InvalidArgumentError("sampler needs n_samples >= 1");
  if (background.empty()) throw EmptyDataError("sampler with an empty background");
  const std::size_t d = x.size();
  if (background.cols() != d) {
    throw DataError("instance has " + std::to_string(d) + " features, background has " +
                    std::to_string(background.cols()) + " columns");
  }

  Rng rng(seed);
  Attribution result;
  result.phi.assign(d, 0.0);
  std::vector<int> others(d - 1);
  std::vector<double> pair_values(2 * d);
  for (std::size_t t = 0; t < n_samples; ++t) {
    for (std::size_t j = 0; j < d; ++j) {
      // coalition size uniform in 0..d-1, then a uniform size-subset of the
      // remaining features: the Shapley kernel
      const std::size_t size = rng.bounded(d);
      int next = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if (i != j) others[static_cast<std::size_t>(next++)] = static_cast<int>(i);
      }
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < size; ++i) {
        const std::size_t pick = i + rng.bounded(others.size() - i);
        std::swap(others[i], others[pick]);
        bits |= 1ULL << others[i];
      }
      const FeatureSubset coalition(bits, static_cast<int>(d));
      const FeatureSubset with_j = coalition.with(static_cast<int>(j));
      const auto z = background.row(rng.bounded(background.rows()));

      const std::vector<double> row_with = compose(x, with_j, z);
      const std::vector<double> row_without = compose(x, coalition, z);
      std::copy(row_with.begin(), row_with.end(), pair_values.begin());
      std::copy(row_without.begin(), row_without.end(),
                pair_values.begin() + static_cast<std::ptrdiff_t>(d));
      const std::vector<double> outputs =
          f.evaluate(SampleMatrix(2, d, {pair_values.begin(), pair_values.end()}));
      result.phi[j] += outputs[0] - outputs[1];
    }
  }
  for (double& phi : result.phi) phi /= static_cast<double>(n_samples);
  return result;
}

Attribution antithetic_sampling_shapley(const BlackBoxModel& f,
                                        std::span<const double> x,
                                        const SampleMatrix& background,
                                        std::size_t n_permutations,
                                        std::uint64_t seed) {
  if (n_permutations < 1) throw InvalidArgumentError("sampler needs n_permutations >= 1");
  if (background.empty()) throw EmptyDataError("sampler with an empty background");
  const std::size_t d = x.size();
  if (background.cols() != d) {
    throw DataError("instance has " + std::to_string(d) + " features, background has " +
                    std::to_string(background.cols()) + " columns");
  }

  Rng rng(seed);
  Attribution result;
  result.phi.assign(d, 0.0);

  const auto walk = [&](const std::vector<int>& permutation,
                        std::span<const double> z) {
    // rows 0..d: z with a growing prefix of the permutation fixed to x
    std::vector<double> values((d + 1) * d);
    std::vector<double> current(z.begin(), z.end());
    std::copy(current.begin(), current.end(), values.begin());
    for (std::size_t step = 0; step < d; ++step) {
      current[static_cast<std::size_t>(permutation[step])] =
          x[static_cast<std::size_t>(permutation[step])];
      std::copy(current.begin(), current.end(),
                values.begin() + static_cast<std::ptrdiff_t>((step + 1) * d));
    }
    const std::vector<double> outputs =
        f.evaluate(SampleMatrix(d + 1, d, std::move(values)));
    for (std::size_t step = 0; step < d; ++step) {
      result.phi[static_cast<std::size_t>(permutation[step])] +=
          outputs[step + 1] - outputs[step];
    }
  };

  std::vector<int> permutation;
  for (std::size_t t = 0; t < n_permutations; ++t) {
    permutation = rng.permutation(static_cast<int>(d));
    const auto z = background.row(rng.bounded(background.rows()));
    walk(permutation, z);
    std::reverse(permutation.begin(), permutation.end());
    walk(permutation, z);  // same background draw: the antithetic pair
  }
  for (double& phi : result.phi) phi /= static_cast<double>(2 * n_permutations);
  return result;
}

}  // namespace pddshap
