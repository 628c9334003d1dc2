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

#include "storyweave/tools/coverage.hpp"

#include "storyweave/error.hpp"
#include "storyweave/space/runs.hpp"

namespace storyweave {
namespace {

constexpr std::pair<std::string_view, CriterionKind> kCriteria[] = {
    {"events", CriterionKind::kEvents},
    {"pairs", CriterionKind::kPairs},
    {"triples", CriterionKind::kTriples},
    {"edges", CriterionKind::kEdges},
    {"diversity", CriterionKind::kDiversity},
};

using Tuple = std::vector<std::string>;

}  // namespace

Criterion Criterion::parse(std::string_view name) {
  for (const auto& [n, kind] : kCriteria) {
    if (n == name) return Criterion(kind);
  }
  throw Error(ErrorCode::kUnsupportedCriterion,
              "unsupported criterion '" + std::string(name) + "'; supported: " + supported_names());
}

std::string Criterion::supported_names() {
  std::string out;
  for (const auto& [n, kind] : kCriteria) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

std::string_view Criterion::name() const {
  for (const auto& [n, kind] : kCriteria) {
    if (kind == kind_) return n;
  }
  return "events";
}

int Criterion::t() const {
  switch (kind_) {
    case CriterionKind::kEvents:
    case CriterionKind::kDiversity: return 1;
    case CriterionKind::kPairs: return 2;
    case CriterionKind::kTriples: return 3;
    case CriterionKind::kEdges: return 0;
  }
  return 0;
}

std::string CoverageTarget::display() const {
  if (edge) return "edge#" + std::to_string(*edge);
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out + ")";
}

TargetSet sequence_coverage(const std::vector<std::string>& names, int t) {
  std::set<std::string> singles;
  std::set<Tuple> pairs;
  std::set<Tuple> triples;
  for (const auto& x : names) {
    if (t >= 3) {
      for (const auto& p : pairs) triples.insert(Tuple{p[0], p[1], x});
    }
    if (t >= 2) {
      for (const auto& a : singles) pairs.insert(Tuple{a, x});
    }
    singles.insert(x);
  }
  TargetSet out;
  if (t == 1) {
    for (const auto& s : singles) out.insert(CoverageTarget{{s}, std::nullopt});
  } else if (t == 2) {
    for (const auto& p : pairs) out.insert(CoverageTarget{p, std::nullopt});
  } else if (t == 3) {
    for (const auto& p : triples) out.insert(CoverageTarget{p, std::nullopt});
  }
  return out;
}

TargetSet covered(const Scenario& scenario, const Criterion& criterion, const RunGraph* graph) {
  if (criterion.kind() != CriterionKind::kEdges) {
    return sequence_coverage(scenario.labels(), criterion.t());
  }
  if (graph == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "the edges criterion needs a run graph");
  }
  Replay r = replay(*graph, scenario.events);
  if (!r.complete && !r.hit_truncation) {
    throw Error(ErrorCode::kReplayMismatch,
                "scenario leaves the run graph at event #" + std::to_string(r.matched + 1));
  }
  TargetSet out;
  for (EdgeId e : r.path) out.insert(CoverageTarget{{}, e});
  return out;
}

TargetSet feasible_targets(const RunGraph& graph, const Criterion& criterion) {
  auto counts = path_counts(graph);
  TargetSet out;
  if (graph.nodes.empty()) return out;
  auto live = [&](EdgeId e) { return counts[graph.edges[e].to] > 0; };

  if (criterion.kind() == CriterionKind::kEdges) {
    for (EdgeId e = 0; e < graph.edges.size(); ++e) {
      if (live(e)) out.insert(CoverageTarget{{}, e});
    }
    return out;
  }
  const int t = criterion.t();
  if (t == 1) {
    for (EdgeId e = 0; e < graph.edges.size(); ++e) {
      if (live(e)) out.insert(CoverageTarget{{graph.edges[e].event.display()}, std::nullopt});
    }
    return out;
  }

  // Tuples of length < t that some root-to-node prefix contains, pushed
  // forward along edges that can still reach a complete run.
  auto order = *topological_order(graph);
  std::vector<std::set<std::string>> seen1(graph.nodes.size());
  std::vector<std::set<Tuple>> seen2(graph.nodes.size());
  for (NodeId u : order) {
    if (counts[u] == 0) continue;
    for (EdgeId e : graph.out_edges(u)) {
      if (!live(e)) continue;
      const std::string& x = graph.edges[e].event.display();
      NodeId v = graph.edges[e].to;
      for (const auto& a : seen1[u]) {
        Tuple pair{a, x};
        if (t == 2) out.insert(CoverageTarget{pair, std::nullopt});
        if (t == 3) seen2[v].insert(pair);
      }
      if (t == 3) {
        for (const auto& p : seen2[u]) {
          out.insert(CoverageTarget{Tuple{p[0], p[1], x}, std::nullopt});
          seen2[v].insert(p);
        }
      }
      seen1[v].insert(seen1[u].begin(), seen1[u].end());
      seen1[v].insert(x);
    }
  }
  return out;
}

}  // namespace storyweave
