// Copyright 2026 The Storyweave Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace storyweave {

struct ProcessRequest {
  std::vector<std::string> argv;        // argv[0] is an executable path
  std::vector<std::string> extra_env;   // KEY=VALUE entries added to the environment
  std::string stdin_text;
  std::optional<std::chrono::milliseconds> timeout;
};

struct ProcessResult {
  int exit_code = -1;
  bool spawn_failed = false;
  bool timed_out = false;
  std::string stdout_text;
  std::string stderr_text;
};

// Spawns without a shell and collects both output streams.
ProcessResult run_process(const ProcessRequest& request);

// Resolves `name` against PATH; names containing '/' are checked as given.
std::optional<std::filesystem::path> find_executable(std::string_view name);

}  // namespace storyweave
