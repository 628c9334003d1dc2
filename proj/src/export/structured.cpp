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

#include "storyweave/export/structured.hpp"

#include "storyweave/error.hpp"

namespace storyweave {

std::string to_structured(const RunGraph& graph, const Highlight* highlight) {
  return to_structured(graph, highlight ? highlight->edges : std::set<EdgeId>{});
}

std::string to_structured(const RunGraph& graph, const std::set<EdgeId>& highlighted) {
  Json nodes = Json::array();
  for (const auto& n : graph.nodes) {
    nodes.push_back(Json{{"deadlock", n.deadlock},
                         {"depth", n.depth},
                         {"id", n.id},
                         {"terminal", n.terminal},
                         {"truncated", n.truncated}});
  }
  Json edges = Json::array();
  for (EdgeId e = 0; e < graph.edges.size(); ++e) {
    const RunEdge& edge = graph.edges[e];
    edges.push_back(Json{{"event", edge.event.to_json()},
                         {"from", edge.from},
                         {"highlighted", highlighted.contains(e)},
                         {"to", edge.to}});
  }
  Json out{{"acyclic", graph.acyclic},
           {"depth_bound", graph.depth_bound ? Json(*graph.depth_bound) : Json(nullptr)},
           {"edges", std::move(edges)},
           {"nodes", std::move(nodes)},
           {"root", graph.root}};
  return out.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

ImportedGraph import_structured(std::string_view text) {
  ImportedGraph out;
  try {
    Json json = Json::parse(text);
    RunGraph& g = out.graph;
    for (const auto& n : json.at("nodes")) {
      RunNode node;
      node.id = n.at("id").get<NodeId>();
      node.depth = n.at("depth").get<std::uint32_t>();
      node.terminal = n.at("terminal").get<bool>();
      node.deadlock = n.at("deadlock").get<bool>();
      node.truncated = n.at("truncated").get<bool>();
      if (node.id != g.nodes.size()) throw Error(ErrorCode::kFormat, "node ids must be 0..n-1 in order");
      g.nodes.push_back(node);
    }
    for (const auto& e : json.at("edges")) {
      RunEdge edge{e.at("from").get<NodeId>(), Event::from_json(e.at("event")),
                   e.at("to").get<NodeId>()};
      if (edge.from >= g.nodes.size() || edge.to >= g.nodes.size()) {
        throw Error(ErrorCode::kFormat, "edge endpoint out of range");
      }
      if (e.at("highlighted").get<bool>()) {
        out.highlighted.insert(static_cast<EdgeId>(g.edges.size()));
      }
      g.edges.push_back(std::move(edge));
    }
    g.root = json.at("root").get<NodeId>();
    if (!json.at("depth_bound").is_null()) g.depth_bound = json.at("depth_bound").get<std::uint32_t>();
    if (!g.nodes.empty() && g.root >= g.nodes.size()) throw Error(ErrorCode::kFormat, "root out of range");
    g.finalize();
    if (g.acyclic != json.at("acyclic").get<bool>()) {
      throw Error(ErrorCode::kFormat, "acyclic flag disagrees with the edges");
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kFormat, e.what());
  }
  return out;
}

}  // namespace storyweave
