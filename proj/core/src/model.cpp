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

#include "pddshap/model.hpp"

#include <cmath>
#include <numbers>

#include "pddshap/errors.hpp"
#include "pddshap/text_format.hpp"

namespace pddshap {

namespace {

std::vector<double> parse_coefficients(std::string_view list, const std::string& spec) {
  std::vector<double> coeffs;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string_view token =
        list.substr(start, comma == std::string_view::npos ? comma : comma - start);
    const auto value = parse_decimal(token);
    if (!value) {
      throw InvalidArgumentError("bad coefficient '" + std::string(token) +
                                 "' in model spec '" + spec + "'");
    }
    coeffs.push_back(*value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return coeffs;
}

}  // namespace

std::unique_ptr<BlackBoxModel> make_builtin_model(const std::string& spec) {
  const std::string_view view(spec);
  if (view == "friedman1") {
    return std::make_unique<FunctionModel>([spec](std::span<const double> x) {
      if (x.size() < 5) {
        throw DataError("friedman1 needs at least 5 features, got " +
                        std::to_string(x.size()));
      }
      return 10.0 * std::sin(std::numbers::pi * x[0] * x[1]) +
             20.0 * (x[2] - 0.5) * (x[2] - 0.5) + 10.0 * x[3] + 5.0 * x[4];
    });
  }
  if (view.starts_with("linear:")) {
    auto coeffs = parse_coefficients(view.substr(7), spec);
    return std::make_unique<FunctionModel>(
        [coeffs = std::move(coeffs)](std::span<const double> x) {
          if (x.size() != coeffs.size()) {
            throw DataError("linear model has " + std::to_string(coeffs.size()) +
                            " coefficients but the input has " +
                            std::to_string(x.size()) + " features");
          }
          double sum = 0.0;
          for (std::size_t j = 0; j < coeffs.size(); ++j) sum += coeffs[j] * x[j];
          return sum;
        });
  }
  if (view.starts_with("interaction2:")) {
    const auto coeffs = parse_coefficients(view.substr(13), spec);
    if (coeffs.size() != 3) {
      throw InvalidArgumentError("interaction2 expects 3 coefficients, got " +
                                 std::to_string(coeffs.size()));
    }
    return std::make_unique<FunctionModel>([coeffs](std::span<const double> x) {
      if (x.size() < 2) {
        throw DataError("interaction2 needs at least 2 features, got " +
                        std::to_string(x.size()));
      }
      return coeffs[0] * x[0] + coeffs[1] * x[1] + coeffs[2] * x[0] * x[1];
    });
  }
  throw InvalidArgumentError("unknown builtin model '" + spec +
                             "' (expected linear:..., interaction2:... or friedman1)");
}

double empirical_mean(const BlackBoxModel& f, const SampleMatrix& X) {
  if (X.empty()) throw EmptyDataError("empirical mean of an empty sample");
  const std::vector<double> outputs = f.evaluate(X);
  double sum = 0.0;
  for (double v : outputs) sum += v;
  return sum / static_cast<double>(outputs.size());
}

}  // namespace pddshap
