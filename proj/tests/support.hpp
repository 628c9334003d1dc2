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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "storyweave/dsl/project.hpp"
#include "storyweave/engine/engine.hpp"
#include "storyweave/engine/random.hpp"

namespace storyweave::testing {

inline std::filesystem::path models_dir() { return STORYWEAVE_MODELS_DIR; }

// Compiles in-memory DSL text, throwing with the rendered diagnostics on error.
inline dsl::CheckedModel model_from(const std::string& text) {
  auto project = dsl::compile_sources({dsl::SourceFile{"test.story", text}});
  if (!project.model) {
    std::string msg;
    for (const auto& d : project.diagnostics) msg += dsl::format_diagnostic(d, project.files) + "\n";
    throw std::runtime_error(msg);
  }
  return *project.model;
}

inline dsl::CheckedModel load_model(const std::string& name) {
  auto project = dsl::compile_project(models_dir() / name);
  if (!project.model) throw std::runtime_error("model " + name + " does not compile");
  return *project.model;
}

// Naive recursive enumerator: follows every enabled event from every state
// with no deduplication and no path counting. Complete runs are the leaves
// where nothing is enabled and no request is pending.
inline std::set<std::string> naive_runs(const Engine& engine, std::size_t depth_cap = 64) {
  std::set<std::string> out;
  std::vector<Event> trace;
  std::function<void(const Configuration&)> walk = [&](const Configuration& c) {
    auto enabled = engine.enabled(c);
    if (enabled.empty()) {
      if (!engine.has_pending_requests(c)) out.insert(Scenario{trace, Terminal::kCompleted}.canonical());
      return;
    }
    if (trace.size() >= depth_cap) throw std::runtime_error("naive enumerator hit its depth cap");
    for (const auto& e : enabled) {
      trace.push_back(e);
      walk(engine.step(c, e));
      trace.pop_back();
    }
  };
  walk(engine.init());
  return out;
}

// Every interleaving of two sequences, built by choosing which positions
// take from `a`. Independent of the engine.
inline std::set<std::vector<std::string>> interleavings(const std::vector<std::string>& a,
                                                        const std::vector<std::string>& b) {
  std::set<std::vector<std::string>> out;
  std::size_t n = a.size() + b.size();
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(a.size()), true);
  std::sort(mask.begin(), mask.end());
  do {
    std::vector<std::string> seq;
    std::size_t i = 0, j = 0;
    for (bool from_a : mask) seq.push_back(from_a ? a[i++] : b[j++]);
    out.insert(seq);
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

// 'G'/'R' per push event of a button scenario.
inline std::string colors(const Scenario& s) {
  std::string out;
  for (const auto& e : s.events) {
    const auto& c = std::get<std::string>(e.fields.at("color"));
    out += c == "green" ? 'G' : 'R';
  }
  return out;
}

// Small random model text: at most 4 stories and at most `max_events`
// requested events counting repeat multiplicity. Uses requests, waitFor,
// block-until, repeat and choose; never forever, so graphs stay finite.
class ModelGenerator {
 public:
  explicit ModelGenerator(std::uint64_t seed) : rng_(seed) {}

  std::string next(std::size_t max_events = 10) {
    budget_ = max_events;
    std::string text;
    std::uint32_t stories = 1 + rng_.below(4);
    for (std::uint32_t s = 0; s < stories && budget_ > 0; ++s) {
      text += "story \"s" + std::to_string(s) + "\" {\n";
      std::uint32_t stmts = 1 + rng_.below(3);
      for (std::uint32_t i = 0; i < stmts; ++i) text += statement(0);
      text += "}\n";
    }
    return text;
  }

 private:
  std::string event() {
    static const char* names[] = {"a", "b", "c"};
    std::string e = names[rng_.below(3)];
    if (rng_.below(3) == 0) e += "(k: " + std::to_string(rng_.below(2)) + ")";
    return e;
  }

  std::string request() {
    if (budget_ == 0) return "";
    --budget_;
    return "request " + event() + "\n";
  }

  std::string statement(int depth) {
    switch (depth < 2 ? rng_.below(7) : 0) {
      case 0:
      case 1:
      case 2:
        return request();
      case 3:
        return "waitFor " + event() + "\n";
      case 4:
        return "block " + event() + " until " + event() + "\n";
      case 5: {
        // Repeat 2 of a single request costs two events.
        if (budget_ < 2) return request();
        budget_ -= 2;
        return "repeat 2 { request " + event() + " }\n";
      }
      default: {
        if (budget_ < 2) return request();
        // Each branch starts with a request so no branch is silent.
        std::string a = request(), b = request();
        return "choose {\n{ " + a + " }\nor { " + b + " }\n}\n";
      }
    }
  }

  Pcg32 rng_;
  std::size_t budget_ = 0;
};

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() /
           ("storyweave-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

}  // namespace storyweave::testing
