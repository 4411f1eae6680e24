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

#include <stdexcept>
#include <string>

namespace pddshap {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request that can never succeed: a parameter outside the supported range
// (order k out of bounds, too many features for exact enumeration, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed, inconsistent or non-finite data (parse failures, dimension
// mismatches, NaN/Inf entries).
class DataError : public Error {
 public:
  using Error::Error;
};

// A dataset or file that is syntactically fine but contains no rows.
class EmptyDataError : public DataError {
 public:
  using DataError::DataError;
};

// A persisted artifact (surrogate file, report) that cannot be read back.
class SerializationError : public DataError {
 public:
  using DataError::DataError;
};

// A metric whose value is undefined for the given inputs (e.g. zero total
// variance in R^2).
class UndefinedMetricError : public DataError {
 public:
  using DataError::DataError;
};

// Communication with an external model process broke down: early exit,
// malformed reply, reply-count mismatch.
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace pddshap
