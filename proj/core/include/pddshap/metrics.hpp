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

#include <optional>
#include <vector>

#include "pddshap/sample_matrix.hpp"

namespace pddshap {

// Coefficient of determination over the flattened matrices, with `reference`
// as ground truth: 1 - SS_res / SS_tot. Shapes must match with >= 2 rows;
// zero total variance raises the undefined-metric error.
double r2_score(const SampleMatrix& reference, const SampleMatrix& candidate);

// Spearman rank correlation with midrank ties, computed per instance across
// the feature axis and averaged over instances. Rows where either side has no
// rank variance are skipped; if all rows are skipped the metric is undefined.
// Requires >= 2 columns.
double spearman_rho(const SampleMatrix& reference, const SampleMatrix& candidate);

// Column-wise variants; entries are empty where the metric is undefined for
// that column (e.g. a constant reference column).
std::vector<std::optional<double>> r2_per_feature(const SampleMatrix& reference,
                                                  const SampleMatrix& candidate);
std::vector<std::optional<double>> spearman_per_feature(const SampleMatrix& reference,
                                                        const SampleMatrix& candidate);

struct AgreementReport {
  double r2 = 0.0;
  double spearman = 0.0;
  std::vector<std::optional<double>> per_feature_r2;
  std::vector<std::optional<double>> per_feature_spearman;
};

AgreementReport agreement(const SampleMatrix& reference, const SampleMatrix& candidate);

}  // namespace pddshap
