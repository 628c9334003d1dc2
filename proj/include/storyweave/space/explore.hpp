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

#include "storyweave/engine/engine.hpp"
#include "storyweave/error.hpp"
#include "storyweave/space/run_graph.hpp"

namespace storyweave {

struct ExploreOptions {
  std::optional<std::uint32_t> max_depth;
  std::optional<std::size_t> max_nodes;
};

// Thrown by explore() when `max_nodes` is reached; carries the graph built so
// far with unexpanded nodes marked truncated.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t max_nodes, RunGraph partial);
  const RunGraph& partial() const { return partial_; }

 private:
  RunGraph partial_;
};

// Breadth-first exploration from engine.init() with configuration dedup.
RunGraph explore(const Engine& engine, const ExploreOptions& options = {});

}  // namespace storyweave
