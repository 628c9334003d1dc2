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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "storyweave/engine/scenario.hpp"
#include "storyweave/space/run_graph.hpp"

namespace storyweave {

enum class CriterionKind { kEvents, kPairs, kTriples, kEdges, kDiversity };

class Criterion {
 public:
  explicit Criterion(CriterionKind kind) : kind_(kind) {}

  // Throws Error(kUnsupportedCriterion) listing the supported names.
  static Criterion parse(std::string_view name);
  static std::string supported_names();

  CriterionKind kind() const { return kind_; }
  std::string_view name() const;
  // Tuple length for sequence criteria (events=1, pairs=2, triples=3), else 0.
  int t() const;

 private:
  CriterionKind kind_;
};

// A tuple of event labels (sequence criteria) or a graph edge (edges
// criterion). A label is Event::display(): the name with its fields, so
// push(color=green) and push(color=red) are distinct targets.
struct CoverageTarget {
  std::vector<std::string> names;
  std::optional<EdgeId> edge;

  std::string display() const;
  friend auto operator<=>(const CoverageTarget&, const CoverageTarget&) = default;
};

using TargetSet = std::set<CoverageTarget>;

// Ordered label t-tuples occurring as (not necessarily adjacent) subsequences.
TargetSet sequence_coverage(const std::vector<std::string>& names, int t);

// Targets a scenario covers. The edges criterion needs `graph` and raises
// Error(kReplayMismatch) when the scenario is not a path of it; a scenario
// running past a truncated node covers its replayable prefix. Diversity
// reports event-label coverage.
TargetSet covered(const Scenario& scenario, const Criterion& criterion,
                  const RunGraph* graph = nullptr);

// Union of covered() over all complete runs of an acyclic, untruncated graph,
// computed by propagation over the DAG rather than enumeration.
TargetSet feasible_targets(const RunGraph& graph, const Criterion& criterion);

}  // namespace storyweave
