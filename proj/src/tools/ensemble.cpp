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

#include "storyweave/tools/ensemble.hpp"

#include <algorithm>
#include <numeric>

#include "storyweave/error.hpp"

namespace storyweave {
namespace {

std::int64_t target_weight(const CoverageTarget& target, const RunGraph* graph,
                           const EventWeights& weights) {
  // Labels look like name(k=v, ...); an exact label entry wins over the bare name.
  auto weight_of = [&](const std::string& label) -> std::int64_t {
    auto it = weights.find(label);
    if (it == weights.end()) it = weights.find(label.substr(0, label.find('(')));
    return it == weights.end() ? 1 : it->second;
  };
  if (target.edge) return weight_of(graph->edges[*target.edge].event.display());
  std::int64_t w = 1;
  for (const auto& n : target.names) w *= weight_of(n);
  return w;
}

bool graph_is_exact(const RunGraph* graph) {
  return graph != nullptr && graph->acyclic && !graph->has_truncation();
}

}  // namespace

double Ensemble::ratio() const {
  if (feasible == 0) return 1.0;
  return static_cast<double>(covered.size()) / static_cast<double>(feasible);
}

std::size_t levenshtein(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t above = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[b.size()];
}

Ensemble ensemble(std::vector<Scenario> pool, const Criterion& criterion, std::size_t budget,
                  const RunGraph* graph, const EventWeights& weights) {
  if (budget == 0) throw Error(ErrorCode::kInvalidArgument, "ensemble budget must be positive");
  if (pool.empty()) throw Error(ErrorCode::kInvalidArgument, "ensemble pool is empty");
  for (const auto& [name, w] : weights) {
    if (w < 0) throw Error(ErrorCode::kInvalidArgument, "weight for '" + name + "' is negative");
  }

  // Normalize: dedupe, then shorter first, then canonical encoding.
  std::vector<std::pair<std::string, Scenario>> keyed;
  for (auto& s : pool) keyed.emplace_back(s.canonical(), std::move(s));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.events.size() != b.second.events.size()) {
      return a.second.events.size() < b.second.events.size();
    }
    return a.first < b.first;
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<Scenario> members;
  for (auto& [k, s] : keyed) members.push_back(std::move(s));

  const Criterion coverage_kind = criterion.kind() == CriterionKind::kDiversity
                                      ? Criterion(CriterionKind::kEvents)
                                      : criterion;
  std::vector<TargetSet> member_targets;
  TargetSet feasible;
  for (const auto& s : members) {
    member_targets.push_back(covered(s, coverage_kind, graph));
    feasible.insert(member_targets.back().begin(), member_targets.back().end());
  }
  if (graph_is_exact(graph)) {
    TargetSet exact = feasible_targets(*graph, coverage_kind);
    feasible.insert(exact.begin(), exact.end());
  }

  Ensemble out;
  out.criterion = criterion;
  out.feasible = feasible.size();
  std::vector<bool> taken(members.size(), false);

  auto accept = [&](std::size_t i) {
    taken[i] = true;
    out.scenarios.push_back(members[i]);
    out.covered.insert(member_targets[i].begin(), member_targets[i].end());
    out.ratio_trace.push_back(out.ratio());
  };

  if (criterion.kind() == CriterionKind::kDiversity) {
    std::map<std::string, std::uint32_t> ids;
    std::vector<std::vector<std::uint32_t>> seqs;
    for (const auto& s : members) {
      std::vector<std::uint32_t> seq;
      for (const auto& e : s.events) {
        seq.push_back(ids.emplace(e.display(), static_cast<std::uint32_t>(ids.size())).first->second);
      }
      seqs.push_back(std::move(seq));
    }
    std::size_t seed = 0;
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (members[i].events.size() > members[seed].events.size()) seed = i;
    }
    std::vector<std::size_t> min_distance(members.size());
    accept(seed);
    for (std::size_t i = 0; i < members.size(); ++i) min_distance[i] = levenshtein(seqs[i], seqs[seed]);
    while (out.scenarios.size() < budget) {
      std::size_t best = members.size();
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (taken[i] || min_distance[i] == 0) continue;
        if (best == members.size() || min_distance[i] > min_distance[best]) best = i;
      }
      if (best == members.size()) break;
      accept(best);
      for (std::size_t i = 0; i < members.size(); ++i) {
        min_distance[i] = std::min(min_distance[i], levenshtein(seqs[i], seqs[best]));
      }
    }
    return out;
  }

  while (out.scenarios.size() < budget) {
    std::size_t best = members.size();
    std::int64_t best_gain = -1;
    std::size_t best_new = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (taken[i]) continue;
      std::int64_t gain = 0;
      std::size_t fresh = 0;
      for (const auto& target : member_targets[i]) {
        if (out.covered.contains(target)) continue;
        ++fresh;
        gain += target_weight(target, graph, weights);
      }
      if (fresh == 0) continue;
      if (gain > best_gain || (gain == best_gain && fresh > best_new)) {
        best = i;
        best_gain = gain;
        best_new = fresh;
      }
    }
    if (best == members.size()) break;
    accept(best);
  }
  return out;
}

}  // namespace storyweave
