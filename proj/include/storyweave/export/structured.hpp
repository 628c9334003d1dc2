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

#include <set>
#include <string>
#include <string_view>

#include "storyweave/export/highlight.hpp"
#include "storyweave/space/run_graph.hpp"

namespace storyweave {

std::string to_structured(const RunGraph& graph, const Highlight* highlight = nullptr);
std::string to_structured(const RunGraph& graph, const std::set<EdgeId>& highlighted);

struct ImportedGraph {
  RunGraph graph;  // no configurations
  std::set<EdgeId> highlighted;
};

// Inverse of to_structured; throws Error(kFormat) on malformed input.
ImportedGraph import_structured(std::string_view text);

}  // namespace storyweave
