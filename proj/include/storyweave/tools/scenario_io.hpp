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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "storyweave/engine/scenario.hpp"

namespace storyweave {

// Newline-delimited canonical records, one scenario per line.
std::string encode_scenarios(const std::vector<Scenario>& scenarios);
// Blank lines are ignored; malformed lines raise Error(kFormat) naming the line.
std::vector<Scenario> decode_scenarios(std::string_view text);

void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

inline void write_scenario_file(const std::filesystem::path& path,
                                const std::vector<Scenario>& scenarios) {
  write_text_file(path, encode_scenarios(scenarios));
}
inline std::vector<Scenario> read_scenario_file(const std::filesystem::path& path) {
  return decode_scenarios(read_text_file(path));
}

}  // namespace storyweave
