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

#include "storyweave/space/explore.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace storyweave {

BudgetExceeded::BudgetExceeded(std::size_t max_nodes, RunGraph partial)
    : Error(ErrorCode::kBudgetExceeded,
            "exploration stopped after " + std::to_string(max_nodes) + " nodes"),
      partial_(std::move(partial)) {}

bool RunGraph::has_truncation() const {
  return std::any_of(nodes.begin(), nodes.end(), [](const RunNode& n) { return n.truncated; });
}

void RunGraph::finalize() {
  adjacency_.assign(nodes.size(), {});
  for (EdgeId e = 0; e < edges.size(); ++e) adjacency_[edges[e].from].push_back(e);
  acyclic = topological_order(*this).has_value();
}

std::optional<std::vector<NodeId>> topological_order(const RunGraph& graph) {
  std::vector<std::uint32_t> indegree(graph.nodes.size(), 0);
  for (const auto& e : graph.edges) ++indegree[e.to];
  std::vector<NodeId> order;
  order.reserve(graph.nodes.size());
  for (NodeId n = 0; n < graph.nodes.size(); ++n) {
    if (indegree[n] == 0) order.push_back(n);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (EdgeId e : graph.out_edges(order[i])) {
      if (--indegree[graph.edges[e].to] == 0) order.push_back(graph.edges[e].to);
    }
  }
  if (order.size() != graph.nodes.size()) return std::nullopt;
  return order;
}

Replay replay(const RunGraph& graph, const std::vector<Event>& events) {
  Replay out;
  if (graph.nodes.empty()) return out;
  NodeId node = graph.root;
  for (const auto& event : events) {
    if (graph.nodes[node].truncated) {
      out.hit_truncation = true;
      return out;
    }
    const auto& outs = graph.out_edges(node);
    auto it = std::find_if(outs.begin(), outs.end(),
                           [&](EdgeId e) { return graph.edges[e].event == event; });
    if (it == outs.end()) return out;
    out.path.push_back(*it);
    ++out.matched;
    node = graph.edges[*it].to;
  }
  out.complete = true;
  return out;
}

RunGraph explore(const Engine& engine, const ExploreOptions& options) {
  RunGraph graph;
  graph.depth_bound = options.max_depth;
  std::unordered_map<std::string, NodeId> index;

  auto add_node = [&](Configuration config, std::uint32_t depth) {
    auto id = static_cast<NodeId>(graph.nodes.size());
    RunNode node;
    node.id = id;
    node.depth = depth;
    node.hash = config.hash();
    index.emplace(config.key(), id);
    graph.nodes.push_back(node);
    graph.configurations.push_back(std::move(config));
    return id;
  };

  add_node(engine.init(), 0);
  for (NodeId current = 0; current < graph.nodes.size(); ++current) {
    const Configuration config = graph.configurations[current];
    auto statements = engine.sync_snapshot(config);
    auto choices = enabled_events(statements);
    RunNode& node = graph.nodes[current];
    if (choices.empty()) {
      node.terminal = true;
      node.deadlock = std::any_of(statements.begin(), statements.end(),
                                  [](const SyncStatement& s) { return !s.requested.empty(); });
      continue;
    }
    if (options.max_depth && node.depth >= *options.max_depth) {
      node.truncated = true;
      continue;
    }
    const std::size_t first_edge = graph.edges.size();
    const std::uint32_t depth = node.depth;
    for (auto& event : choices) {
      Configuration next = engine.step_unchecked(config, event);
      NodeId target;
      if (auto it = index.find(next.key()); it != index.end()) {
        target = it->second;
      } else {
        if (options.max_nodes && graph.nodes.size() >= *options.max_nodes) {
          graph.edges.resize(first_edge);
          for (NodeId n = current; n < graph.nodes.size(); ++n) {
            if (!graph.nodes[n].terminal) graph.nodes[n].truncated = true;
          }
          graph.finalize();
          throw BudgetExceeded(*options.max_nodes, std::move(graph));
        }
        target = add_node(std::move(next), depth + 1);
      }
      graph.edges.push_back(RunEdge{current, std::move(event), target});
    }
  }
  graph.finalize();
  return graph;
}

}  // namespace storyweave
