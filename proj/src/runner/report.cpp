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

#include "storyweave/runner/report.hpp"

#include <cstdio>
#include <map>

namespace storyweave {
namespace {

GroupStats finish(std::string tag, std::size_t runs, std::size_t failures) {
  GroupStats g;
  g.tag = std::move(tag);
  g.runs = runs;
  g.failures = failures;
  if (runs > 0) {
    g.p_hat = static_cast<double>(failures) / static_cast<double>(runs);
    g.variance = g.p_hat * (1.0 - g.p_hat) / static_cast<double>(runs);
    g.wilson = wilson95(failures, runs);
  }
  return g;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

Json GroupStats::to_json() const {
  Json out{{"tag", tag}, {"runs", runs}, {"failures", failures}};
  if (wilson) {
    out["p_hat"] = p_hat;
    out["variance"] = variance;
    out["wilson95"] = Json::array({wilson->lo, wilson->hi});
  } else {
    out["p_hat"] = nullptr;
    out["variance"] = nullptr;
    out["wilson95"] = nullptr;
  }
  return out;
}

Report make_report(const std::vector<RunResult>& results, std::string timestamp, Json config) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_tag;
  std::size_t failures = 0;
  for (const auto& r : results) {
    bool failed = r.overall != OutcomeStatus::kPass;
    failures += failed ? 1 : 0;
    for (const auto& tag : r.tags) {
      auto& [n, k] = by_tag[tag];
      ++n;
      k += failed ? 1 : 0;
    }
  }
  Report report;
  for (const auto& [tag, nk] : by_tag) report.groups.push_back(finish(tag, nk.first, nk.second));
  report.totals = finish("*", results.size(), failures);
  report.timestamp = std::move(timestamp);
  report.config = std::move(config);
  return report;
}

std::string Report::to_ndjson() const {
  auto dump = [](const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n"; };
  std::string out = dump(Json{{"kind", "header"}, {"timestamp", timestamp}, {"config", config}});
  for (const auto& g : groups) {
    Json j = g.to_json();
    j["kind"] = "group";
    out += dump(j);
  }
  Json t = totals.to_json();
  t["kind"] = "totals";
  t.erase("tag");
  out += dump(t);
  return out;
}

std::string Report::to_table() const {
  std::string out = "generated " + timestamp + "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %6s %6s %8s %10s %19s\n", "tag", "runs", "fail", "p_hat",
                "variance", "wilson95");
  out += line;
  auto row = [&](const GroupStats& g) {
    std::string interval = g.wilson ? "[" + fixed(g.wilson->lo, 4) + ", " + fixed(g.wilson->hi, 4) + "]" : "-";
    std::snprintf(line, sizeof line, "%-24s %6zu %6zu %8s %10s %19s\n", g.tag.c_str(), g.runs,
                  g.failures, g.wilson ? fixed(g.p_hat, 4).c_str() : "-",
                  g.wilson ? fixed(g.variance, 6).c_str() : "-", interval.c_str());
    out += line;
  };
  for (const auto& g : groups) row(g);
  GroupStats t = totals;
  t.tag = "(total)";
  row(t);
  return out;
}

}  // namespace storyweave
