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
#include <optional>
#include <string>
#include <vector>

#include "storyweave/event.hpp"
#include "storyweave/runner/execute.hpp"
#include "storyweave/runner/stats.hpp"

namespace storyweave {

struct GroupStats {
  std::string tag;
  std::size_t runs = 0;
  std::size_t failures = 0;  // overall fail or error
  double p_hat = 0.0;
  double variance = 0.0;     // p_hat (1 - p_hat) / n
  std::optional<Interval> wilson;  // absent when runs == 0

  Json to_json() const;
};

struct Report {
  std::vector<GroupStats> groups;  // sorted by tag
  GroupStats totals;               // every run counted once
  std::string timestamp;
  Json config;                     // seed/config echo

  // Header line, one line per group, then a totals line.
  std::string to_ndjson() const;
  std::string to_table() const;
};

// A run appears in the group of each of its tags. Independent of the order
// of `results`.
Report make_report(const std::vector<RunResult>& results, std::string timestamp, Json config);

}  // namespace storyweave
