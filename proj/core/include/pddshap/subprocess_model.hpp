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
#include <mutex>
#include <string>

#include "pddshap/model.hpp"

namespace pddshap {

// External model reached over a line protocol on the child's stdin/stdout:
// the parent writes a header line "B <M> <d>", then M lines of d
// comma-separated decimal floats, and flushes; the child replies with exactly
// M lines, one decimal float each, in row order. Repeats per batch; closing
// stdin terminates the child.
//
// The channel is serial: concurrent evaluate() calls are funneled through an
// internal mutex and supports_concurrent_calls() is false.
class SubprocessModel final : public BlackBoxModel {
 public:
  // Launches `command` via /bin/sh -c.
  explicit SubprocessModel(const std::string& command);
  ~SubprocessModel() override;

  SubprocessModel(const SubprocessModel&) = delete;
  SubprocessModel& operator=(const SubprocessModel&) = delete;

  std::vector<double> evaluate(const SampleMatrix& batch) const override;
  bool supports_concurrent_calls() const override { return false; }

  const std::string& command() const { return command_; }

 private:
  struct Channel;
  std::string command_;
  std::unique_ptr<Channel> channel_;
  mutable std::mutex mutex_;
};

// Parses a model source string: "cmd:<shell command>" yields a
// SubprocessModel, anything else is handed to make_builtin_model.
std::unique_ptr<BlackBoxModel> make_model(const std::string& source);

}  // namespace pddshap
