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
#include <map>
#include <string>
#include <vector>

#include "storyweave/engine/scenario.hpp"
#include "storyweave/space/run_graph.hpp"
#include "storyweave/tools/coverage.hpp"

namespace storyweave {

// Gain multipliers keyed by event label or bare event name (the label wins);
// unlisted events weigh 1. A target weighs the product of its labels' weights.
using EventWeights = std::map<std::string, std::int64_t>;

struct Ensemble {
  std::vector<Scenario> scenarios;
  Criterion criterion{CriterionKind::kEvents};
  TargetSet covered;
  std::size_t feasible = 0;
  // Coverage ratio after each accepted member.
  std::vector<double> ratio_trace;

  // |covered| / |feasible|, or 1 when nothing is feasible.
  double ratio() const;
};

// Greedy selection from `pool` (deduplicated, ordered by length then
// canonical encoding). Coverage kinds take the member adding the most
// (weighted) uncovered targets; diversity takes the member farthest in
// edit distance from those already chosen, starting from the longest.
// Feasible targets come from `graph` when it is exact, joined with whatever
// the pool covers.
Ensemble ensemble(std::vector<Scenario> pool, const Criterion& criterion, std::size_t budget,
                  const RunGraph* graph = nullptr, const EventWeights& weights = {});

// Edit distance between two label sequences.
std::size_t levenshtein(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);

}  // namespace storyweave
