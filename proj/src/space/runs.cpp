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

#include "storyweave/space/runs.hpp"

#include "storyweave/engine/random.hpp"
#include "storyweave/error.hpp"

namespace storyweave {
namespace {

// Uniform integer in [0, bound) for arbitrary-precision bound > 0.
RunCount uniform_below(Pcg32& rng, const RunCount& bound) {
  if (bound <= std::numeric_limits<std::uint32_t>::max()) {
    return RunCount(rng.below(bound.convert_to<std::uint32_t>()));
  }
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const unsigned words = (bits + 31) / 32;
  const unsigned top_bits = bits - (words - 1) * 32;
  const std::uint32_t top_mask =
      top_bits == 32 ? 0xFFFFFFFFu : ((std::uint32_t{1} << top_bits) - 1);
  while (true) {
    RunCount value = 0;
    for (unsigned w = 0; w < words; ++w) {
      std::uint32_t word = rng.next_u32();
      if (w == 0) word &= top_mask;
      value = (value << 32) | word;
    }
    if (value < bound) return value;
  }
}

Scenario scenario_of(const RunGraph& graph, const std::vector<EdgeId>& path) {
  Scenario s;
  s.events.reserve(path.size());
  for (EdgeId e : path) s.events.push_back(graph.edges[e].event);
  s.terminal = Terminal::kCompleted;
  return s;
}

}  // namespace

void require_exact(const RunGraph& graph) {
  if (!graph.acyclic) throw Error(ErrorCode::kCyclicGraph, "the run graph contains a cycle");
  if (graph.has_truncation()) {
    throw Error(ErrorCode::kTruncatedGraph, "the run graph was truncated during exploration");
  }
}

std::vector<RunCount> path_counts(const RunGraph& graph) {
  require_exact(graph);
  auto order = topological_order(graph);
  std::vector<RunCount> counts(graph.nodes.size(), 0);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    const RunNode& node = graph.nodes[*it];
    if (node.terminal) {
      counts[*it] = node.deadlock ? 0 : 1;
      continue;
    }
    RunCount sum = 0;
    for (EdgeId e : graph.out_edges(*it)) sum += counts[graph.edges[e].to];
    counts[*it] = std::move(sum);
  }
  return counts;
}

RunCount count_runs(const RunGraph& graph) {
  if (graph.nodes.empty()) return 0;
  return path_counts(graph)[graph.root];
}

std::vector<Scenario> enumerate_runs(const RunGraph& graph, std::optional<std::size_t> limit) {
  std::vector<Scenario> out;
  if (graph.nodes.empty() || (limit && *limit == 0)) return out;
  auto counts = path_counts(graph);
  if (counts[graph.root] == 0) return out;

  struct Frame {
    NodeId node;
    std::size_t next;  // position in out_edges
  };
  std::vector<Frame> stack{{graph.root, 0}};
  std::vector<EdgeId> path;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& outs = graph.out_edges(top.node);
    if (top.next == 0 && outs.empty()) {
      out.push_back(scenario_of(graph, path));
      if (limit && out.size() >= *limit) break;
    }
    bool descended = false;
    while (top.next < outs.size()) {
      EdgeId e = outs[top.next++];
      if (counts[graph.edges[e].to] == 0) continue;
      path.push_back(e);
      stack.push_back(Frame{graph.edges[e].to, 0});
      descended = true;
      break;
    }
    if (!descended) {
      stack.pop_back();
      if (!path.empty()) path.pop_back();
    }
  }
  return out;
}

std::vector<Scenario> uniform_sample(const RunGraph& graph, std::size_t n, std::uint64_t seed) {
  auto counts = path_counts(graph);
  if (graph.nodes.empty() || counts[graph.root] == 0) {
    throw Error(ErrorCode::kNoCompleteRuns, "the model has no complete run to sample");
  }
  Pcg32 rng(seed);
  std::vector<Scenario> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<EdgeId> path;
    NodeId node = graph.root;
    while (!graph.out_edges(node).empty()) {
      RunCount r = uniform_below(rng, counts[node]);
      for (EdgeId e : graph.out_edges(node)) {
        const RunCount& c = counts[graph.edges[e].to];
        if (r < c) {
          path.push_back(e);
          node = graph.edges[e].to;
          break;
        }
        r -= c;
      }
    }
    out.push_back(scenario_of(graph, path));
  }
  return out;
}

}  // namespace storyweave
