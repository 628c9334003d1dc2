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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "storyweave/event.hpp"
#include "storyweave/runner/adapter.hpp"
#include "storyweave/runner/execute.hpp"
#include "storyweave/tools/ensemble.hpp"

namespace storyweave::cli {

inline constexpr const char* kConfigFileName = "config.toml";

// Settings read from <project>/config.toml; every field has a default so a
// missing file is equivalent to an empty one.
struct ProjectConfig {
  std::filesystem::path dir;
  std::uint64_t seed = 0;
  std::uint32_t max_depth = 10000;
  std::size_t max_nodes = 1000000;
  std::size_t enumerate_limit = 10000;  // ensemble: enumerate when count <= this
  std::size_t walk_samples = 1000;      // ensemble: otherwise sample this many walks
  EventWeights weights;
  std::string renderer;
  AdapterSettings adapter;
  ExecuteOptions run;
  std::vector<std::string> tags;
};

// Parses the config subset: `[section]` headers, `key = value` lines with
// string, integer, float or boolean values, and `#` comments. Unknown keys
// are errors. Throws Error(kFormat) naming the line.
ProjectConfig parse_config(std::string_view text, std::filesystem::path dir = {});

ProjectConfig load_config(const std::filesystem::path& dir);

}  // namespace storyweave::cli
