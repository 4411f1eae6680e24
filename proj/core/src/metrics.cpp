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

#include "pddshap/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pddshap/errors.hpp"

namespace pddshap {

namespace {

void require_same_shape(const SampleMatrix& reference, const SampleMatrix& candidate) {
  if (reference.rows() != candidate.rows() || reference.cols() != candidate.cols()) {
    throw DataError("shape mismatch: reference is " + std::to_string(reference.rows()) +
                    "x" + std::to_string(reference.cols()) + ", candidate is " +
                    std::to_string(candidate.rows()) + "x" +
                    std::to_string(candidate.cols()));
  }
}

// midranks: ties share the average of the ranks they span
std::vector<double> midranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

// Pearson correlation; empty when either side has zero variance.
std::optional<double> pearson(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(n);
  const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(n);
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) return std::nullopt;
  return cov / std::sqrt(var_a * var_b);
}

std::optional<double> rank_correlation(std::span<const double> reference,
                                       std::span<const double> candidate) {
  const std::vector<double> ranks_ref = midranks(reference);
  const std::vector<double> ranks_cand = midranks(candidate);
  return pearson(ranks_ref, ranks_cand);
}

std::optional<double> r2_of(std::span<const double> reference,
                            std::span<const double> candidate) {
  const std::size_t n = reference.size();
  const double mean_ref =
      std::accumulate(reference.begin(), reference.end(), 0.0) / static_cast<double>(n);
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double res = reference[i] - candidate[i];
    const double dev = reference[i] - mean_ref;
    ss_res += res * res;
    ss_tot += dev * dev;
  }
  if (ss_tot == 0.0) return std::nullopt;
  return 1.0 - ss_res / ss_tot;
}

std::vector<double> column(const SampleMatrix& m, std::size_t j) {
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m.at(i, j);
  return out;
}

}  // namespace

double r2_score(const SampleMatrix& reference, const SampleMatrix& candidate) {
  require_same_shape(reference, candidate);
  if (reference.rows() < 2) {
    throw InvalidArgumentError("r2 needs at least 2 rows, got " +
                               std::to_string(reference.rows()));
  }
  const auto r2 = r2_of(reference.values(), candidate.values());
  if (!r2) throw UndefinedMetricError("r2 undefined: reference has zero variance");
  return *r2;
}

double spearman_rho(const SampleMatrix& reference, const SampleMatrix& candidate) {
  require_same_shape(reference, candidate);
  if (reference.cols() < 2) {
    throw InvalidArgumentError("spearman needs at least 2 features, got " +
                               std::to_string(reference.cols()));
  }
  double sum = 0.0;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < reference.rows(); ++i) {
    const auto rho = rank_correlation(reference.row(i), candidate.row(i));
    if (!rho) continue;  // no rank variance on one side; nothing to correlate
    sum += *rho;
    ++counted;
  }
  if (counted == 0) {
    throw UndefinedMetricError("spearman undefined: every instance is rank-degenerate");
  }
  return sum / static_cast<double>(counted);
}

std::vector<std::optional<double>> r2_per_feature(const SampleMatrix& reference,
                                                  const SampleMatrix& candidate) {
  require_same_shape(reference, candidate);
  std::vector<std::optional<double>> out(reference.cols());
  for (std::size_t j = 0; j < reference.cols(); ++j) {
    out[j] = r2_of(column(reference, j), column(candidate, j));
  }
  return out;
}

std::vector<std::optional<double>> spearman_per_feature(const SampleMatrix& reference,
                                                        const SampleMatrix& candidate) {
  require_same_shape(reference, candidate);
  std::vector<std::optional<double>> out(reference.cols());
  for (std::size_t j = 0; j < reference.cols(); ++j) {
    out[j] = rank_correlation(column(reference, j), column(candidate, j));
  }
  return out;
}

AgreementReport agreement(const SampleMatrix& reference, const SampleMatrix& candidate) {
  AgreementReport report;
  report.r2 = r2_score(reference, candidate);
  report.spearman = spearman_rho(reference, candidate);
  report.per_feature_r2 = r2_per_feature(reference, candidate);
  report.per_feature_spearman = spearman_per_feature(reference, candidate);
  return report;
}

}  // namespace pddshap
