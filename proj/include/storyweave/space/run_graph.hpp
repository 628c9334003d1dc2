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

#include <cstdint>
#include <optional>
#include <vector>

#include "storyweave/engine/engine.hpp"
#include "storyweave/event.hpp"

namespace storyweave {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct RunNode {
  NodeId id = 0;             // breadth-first discovery index
  std::uint32_t depth = 0;   // shortest distance from the root
  bool terminal = false;     // no out-edges and not truncated
  bool deadlock = false;     // terminal with requested-but-blocked events
  bool truncated = false;    // not expanded (depth bound or node budget)
  std::uint64_t hash = 0;    // configuration hash; 0 for imported graphs

  friend bool operator==(const RunNode&, const RunNode&) = default;
};

struct RunEdge {
  NodeId from = 0;
  Event event;
  NodeId to = 0;

  friend bool operator==(const RunEdge&, const RunEdge&) = default;
};

// Deduplicated transition graph of a model. Out-edges of a node are stored
// contiguously, in canonical event order.
struct RunGraph {
  std::vector<RunNode> nodes;
  std::vector<RunEdge> edges;
  NodeId root = 0;
  bool acyclic = true;
  std::optional<std::uint32_t> depth_bound;
  // Parallel to `nodes` for explored graphs; empty for imported ones.
  std::vector<Configuration> configurations;

  const std::vector<EdgeId>& out_edges(NodeId node) const { return adjacency_[node]; }
  bool has_truncation() const;

  // Recomputes adjacency and the acyclic flag from `nodes`/`edges`.
  void finalize();

 private:
  std::vector<std::vector<EdgeId>> adjacency_;
};

// Kahn's algorithm; nullopt when the graph has a cycle (self-loops included).
std::optional<std::vector<NodeId>> topological_order(const RunGraph& graph);

struct Replay {
  std::vector<EdgeId> path;       // edges matched, in order
  bool complete = false;          // every event matched
  bool hit_truncation = false;    // stopped at a truncated node
  std::size_t matched = 0;        // == path.size()
};

Replay replay(const RunGraph& graph, const std::vector<Event>& events);

}  // namespace storyweave
