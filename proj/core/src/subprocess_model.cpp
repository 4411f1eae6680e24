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

#include "pddshap/subprocess_model.hpp"

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <utility>

#include "pddshap/errors.hpp"
#include "pddshap/text_format.hpp"

namespace pddshap {

struct SubprocessModel::Channel {
  pid_t pid = -1;
  FILE* to_child = nullptr;    // child's stdin
  FILE* from_child = nullptr;  // child's stdout

  ~Channel() {
    if (to_child != nullptr) std::fclose(to_child);
    if (from_child != nullptr) std::fclose(from_child);
    if (pid > 0) {
      int status = 0;
      waitpid(pid, &status, 0);
    }
  }
};

SubprocessModel::SubprocessModel(const std::string& command)
    : command_(command), channel_(std::make_unique<Channel>()) {
  int to_child[2];    // parent writes -> child reads
  int from_child[2];  // child writes -> parent reads
  if (pipe(to_child) != 0 || pipe(from_child) != 0) {
    throw ModelError("failed to create pipes for model command '" + command +
                     "': " + std::strerror(errno));
  }

  const pid_t pid = fork();
  if (pid < 0) {
    throw ModelError("failed to fork model command '" + command +
                     "': " + std::strerror(errno));
  }
  if (pid == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    close(to_child[0]);
    close(to_child[1]);
    close(from_child[0]);
    close(from_child[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    std::perror("exec");
    _exit(127);
  }

  close(to_child[0]);
  close(from_child[1]);
  channel_->pid = pid;
  channel_->to_child = fdopen(to_child[1], "w");
  channel_->from_child = fdopen(from_child[0], "r");
  if (channel_->to_child == nullptr || channel_->from_child == nullptr) {
    throw ModelError("failed to open model channel for '" + command + "'");
  }
}

SubprocessModel::~SubprocessModel() = default;

std::vector<double> SubprocessModel::evaluate(const SampleMatrix& batch) const {
  std::lock_guard<std::mutex> lock(mutex_);

  const std::size_t rows = batch.rows();
  const std::size_t cols = batch.cols();

  std::string payload = "B " + std::to_string(rows) + " " + std::to_string(cols) + "\n";
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = batch.row(i);
    for (std::size_t j = 0; j < cols; ++j) {
      if (j > 0) payload += ',';
      payload += to_decimal_string(row[j]);
    }
    payload += '\n';
  }
  if (std::fwrite(payload.data(), 1, payload.size(), channel_->to_child) !=
          payload.size() ||
      std::fflush(channel_->to_child) != 0) {
    throw ModelError("model process '" + command_ +
                     "' stopped accepting input (broken pipe)");
  }

  std::vector<double> outputs;
  outputs.reserve(rows);
  char* line = nullptr;
  std::size_t capacity = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    const ssize_t len = getline(&line, &capacity, channel_->from_child);
    if (len < 0) {
      free(line);
      throw ModelError("model process '" + command_ + "' replied with " +
                       std::to_string(i) + " of " + std::to_string(rows) +
                       " expected predictions before closing its output");
    }
    const auto value = parse_decimal(std::string_view(line, static_cast<std::size_t>(len)));
    if (!value) {
      std::string offending(line, static_cast<std::size_t>(len));
      free(line);
      throw ModelError("model process '" + command_ +
                       "' sent a malformed prediction line: '" +
                       std::string(trim(offending)) + "'");
    }
    outputs.push_back(*value);
  }
  free(line);
  return outputs;
}

std::unique_ptr<BlackBoxModel> make_model(const std::string& source) {
  if (source.rfind("cmd:", 0) == 0) {
    return std::make_unique<SubprocessModel>(source.substr(4));
  }
  return make_builtin_model(source);
}

}  // namespace pddshap
