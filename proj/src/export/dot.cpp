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

#include "storyweave/export/dot.hpp"

#include <sstream>

#include "storyweave/export/highlight.hpp"

namespace storyweave {
namespace {

std::string escape_label(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

Highlight resolve_highlight(const RunGraph& graph, std::vector<Scenario> scenarios) {
  Highlight h;
  h.scenarios = std::move(scenarios);
  for (std::size_t i = 0; i < h.scenarios.size(); ++i) {
    Replay r = replay(graph, h.scenarios[i].events);
    if (r.complete) {
      h.edges.insert(r.path.begin(), r.path.end());
    } else if (r.hit_truncation) {
      h.edges.insert(r.path.begin(), r.path.end());
      h.problems.push_back({i, "continues past the depth bound after event #" +
                                   std::to_string(r.matched), true});
    } else {
      h.problems.push_back({i, "event #" + std::to_string(r.matched + 1) +
                                   " is not an edge of the model graph", false});
    }
  }
  return h;
}

std::string to_graph_description(const RunGraph& graph, const Highlight* highlight) {
  std::ostringstream out;
  out << "digraph runs {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  out << "  edge [fontsize=9];\n";
  for (const auto& node : graph.nodes) {
    out << "  n" << node.id << " [label=\"" << node.id << "\"";
    if (node.terminal) out << ", shape=doublecircle";
    if (node.deadlock) out << ", color=red";
    if (node.truncated) out << ", style=dashed";
    out << "];\n";
  }
  for (EdgeId e = 0; e < graph.edges.size(); ++e) {
    const RunEdge& edge = graph.edges[e];
    out << "  n" << edge.from << " -> n" << edge.to << " [label=\""
        << escape_label(edge.event.display()) << "\"";
    if (highlight != nullptr && highlight->edges.contains(e)) {
      out << ", penwidth=3, color=\"#1f77b4\"";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace storyweave
