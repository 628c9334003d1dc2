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
#include <set>
#include <string>
#include <vector>

#include "storyweave/engine/scenario.hpp"
#include "storyweave/space/run_graph.hpp"

namespace storyweave {

struct Highlight {
  struct Problem {
    std::size_t index = 0;  // 0-based position in `scenarios`
    std::string reason;
    bool partial = false;   // prefix up to a truncated node is highlighted
  };

  std::vector<Scenario> scenarios;
  std::set<EdgeId> edges;
  std::vector<Problem> problems;
};

// Replays each scenario from the root and collects the traversed edges.
// Scenarios that leave the graph are listed in `problems`.
Highlight resolve_highlight(const RunGraph& graph, std::vector<Scenario> scenarios);

}  // namespace storyweave
