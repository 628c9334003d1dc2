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
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "storyweave/engine/scenario.hpp"
#include "storyweave/space/run_graph.hpp"

namespace storyweave {

using RunCount = boost::multiprecision::cpp_int;

// Throws kCyclicGraph / kTruncatedGraph unless counting is exact on `graph`.
void require_exact(const RunGraph& graph);

// Number of complete runs from each node: 1 at completed terminals, 0 at
// deadlocks, otherwise the sum over out-edges.
std::vector<RunCount> path_counts(const RunGraph& graph);

RunCount count_runs(const RunGraph& graph);

// Complete runs in lexicographic order of canonical edge labels.
std::vector<Scenario> enumerate_runs(const RunGraph& graph,
                                     std::optional<std::size_t> limit = std::nullopt);

// i.i.d. uniform draws over complete runs by count-weighted edge choice.
std::vector<Scenario> uniform_sample(const RunGraph& graph, std::size_t n, std::uint64_t seed);

}  // namespace storyweave
