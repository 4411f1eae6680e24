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

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pddshap/sample_matrix.hpp"

namespace pddshap {

// Contract for the function being explained. Implementations must be
// deterministic (identical batch -> identical outputs) and return exactly one
// prediction per input row, in row order. Implementations either tolerate
// concurrent evaluate() calls or report supports_concurrent_calls() == false,
// in which case callers funnel batches through one channel.
class BlackBoxModel {
 public:
  virtual ~BlackBoxModel() = default;
  virtual std::vector<double> evaluate(const SampleMatrix& batch) const = 0;
  virtual bool supports_concurrent_calls() const { return true; }
};

// Wraps a pure row function; the workhorse behind the builtin models and most
// tests.
class FunctionModel final : public BlackBoxModel {
 public:
  using RowFunction = std::function<double(std::span<const double>)>;
  explicit FunctionModel(RowFunction fn) : fn_(std::move(fn)) {}

  std::vector<double> evaluate(const SampleMatrix& batch) const override {
    std::vector<double> out(batch.rows());
    for (std::size_t i = 0; i < batch.rows(); ++i) out[i] = fn_(batch.row(i));
    return out;
  }

 private:
  RowFunction fn_;
};

// Decorator counting individual row evaluations (not batches); used for
// call-budget accounting and reports.
class CountingModel final : public BlackBoxModel {
 public:
  explicit CountingModel(const BlackBoxModel& inner) : inner_(&inner) {}

  std::vector<double> evaluate(const SampleMatrix& batch) const override {
    evaluations_.fetch_add(batch.rows(), std::memory_order_relaxed);
    return inner_->evaluate(batch);
  }
  bool supports_concurrent_calls() const override {
    return inner_->supports_concurrent_calls();
  }

  std::uint64_t evaluation_count() const {
    return evaluations_.load(std::memory_order_relaxed);
  }
  void reset_count() { evaluations_.store(0, std::memory_order_relaxed); }

 private:
  const BlackBoxModel* inner_;
  mutable std::atomic<std::uint64_t> evaluations_{0};
};

// Self-contained analytic models, selected by spec string:
//   "linear:a1,...,ad"        sum a_j * x_j  (needs exactly d columns)
//   "interaction2:a,b,c"      a*x1 + b*x2 + c*x1*x2  (needs >= 2 columns)
//   "friedman1"               10 sin(pi x1 x2) + 20 (x3-1/2)^2 + 10 x4 + 5 x5
//                             (needs >= 5 columns, extras ignored)
std::unique_ptr<BlackBoxModel> make_builtin_model(const std::string& spec);

// (1/N) sum_x f(x) over the rows of X; exactly one batched model call.
double empirical_mean(const BlackBoxModel& f, const SampleMatrix& X);

}  // namespace pddshap
