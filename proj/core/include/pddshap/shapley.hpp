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
#include <span>
#include <vector>

#include "pddshap/feature_subset.hpp"
#include "pddshap/model.hpp"
#include "pddshap/sample_matrix.hpp"
#include "pddshap/surrogate.hpp"

namespace pddshap {

// Per-instance attribution: one value per feature plus the baseline the
// values are measured against (surrogate constant term or empirical mean).
struct Attribution {
  std::vector<double> phi;
  double baseline = 0.0;
};

// A cooperative game materialized over all 2^d coalitions. Values are shifted
// at construction so that value(empty) == 0. d is capped at 20 (the dense
// table holds 2^d entries).
class GameValues {
 public:
  // values_by_mask[mask] = payout of the coalition with that bitmask; must
  // have exactly 2^d entries.
  GameValues(int dimension, std::vector<double> values_by_mask);

  // Requires an entry for every nonempty subset; the empty set defaults to 0.
  static GameValues from_map(int dimension,
                             const std::map<FeatureSubset, double>& values);

  int dimension() const { return dimension_; }
  double value(std::uint64_t mask) const { return values_[mask]; }
  double value(const FeatureSubset& u) const { return values_[u.bits()]; }
  const std::vector<double>& values() const { return values_; }

 private:
  int dimension_;
  std::vector<double> values_;
};

// One real per nonempty subset; induces the game val(u) = sum_{v subset of u} g(v).
struct SubsetFunctionals {
  int dimension = 0;
  std::map<FeatureSubset, double> g;
};

// Exact Shapley values of a materialized game:
//   phi_j = (1/d) sum_{u not containing j} C(d-1, |u|)^{-1} (val(u+j) - val(u)).
// Attribution baseline is 0.
Attribution shapley_from_game(const GameValues& game);

// Shapley values of the game induced by per-subset functionals:
//   phi_j = sum_{u containing j} g(u) / |u|.
Attribution shapley_from_decomposition(const SubsetFunctionals& functionals);

// Closed-form attribution from a trained surrogate, one row per instance:
//   phi_j = sum_{u in components, j in u} component_u(x_u) / |u|,
// baseline = the surrogate constant term. Makes zero black-box calls.
std::vector<Attribution> pdd_shapley(const PDDSurrogate& surrogate,
                                     const SampleMatrix& X);
Attribution pdd_shapley_single(const PDDSurrogate& surrogate,
                               std::span<const double> x);

// The per-instance game behind the exact oracle:
//   val_x(u) = (1/N) sum_z f(compose(x, u, z)) - empirical mean,
// materialized over all 2^d subsets (2^d batched calls of N rows; the empty
// coalition's batch doubles as the empirical mean, reported via mean_out).
GameValues materialize_game(const BlackBoxModel& f, std::span<const double> x,
                            const SampleMatrix& background,
                            double* mean_out = nullptr);

// Brute-force oracle: materializes the game and applies shapley_from_game.
// Attribution baseline = empirical mean. Requires d <= 20.
Attribution exact_shapley(const BlackBoxModel& f, std::span<const double> x,
                          const SampleMatrix& background);

// Monte-Carlo estimate of exact_shapley. Per sample and feature j, a coalition
// is drawn with the Shapley kernel (uniform size, then a uniform subset of the
// other features) and the marginal contribution is estimated with one
// background draw. 2*d model evaluations per sample. Deterministic given seed;
// baseline is left 0 (batch layers fill it from one shared empirical mean).
Attribution subset_sampling_shapley(const BlackBoxModel& f, std::span<const double> x,
                                    const SampleMatrix& background,
                                    std::size_t n_samples, std::uint64_t seed);

// Permutation-walk estimator: every sampled permutation is walked forward and
// reversed against the same background draw, accumulating marginal
// contributions along each walk. Per walk the contributions telescope, so the
// attribution sums to the mean of f(x) - f(z) over walks. 2*(d+1) model
// evaluations per permutation pair. Deterministic given seed; baseline 0.
Attribution antithetic_sampling_shapley(const BlackBoxModel& f,
                                        std::span<const double> x,
                                        const SampleMatrix& background,
                                        std::size_t n_permutations,
                                        std::uint64_t seed);

}  // namespace pddshap
