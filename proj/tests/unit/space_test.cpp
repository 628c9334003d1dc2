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

#include <gtest/gtest.h>

#include <map>

#include "storyweave/error.hpp"
#include "storyweave/space/explore.hpp"
#include "storyweave/space/runs.hpp"
#include "support.hpp"

namespace storyweave {
namespace {

using testing::load_model;
using testing::model_from;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kDomain;
}

// Binomial coefficient by Pascal's rule, independent of the graph code.
RunCount choose(unsigned n, unsigned k) {
  std::vector<RunCount> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = std::min(i, k); j > 0; --j) row[j] += row[j - 1];
  return row[k];
}

TEST(Explore, SingleRequest) {
  auto g = explore(Engine(model_from("story \"s\" { request a }")));
  EXPECT_EQ(g.nodes.size(), 2u);
  EXPECT_EQ(g.edges.size(), 1u);
  EXPECT_TRUE(g.acyclic);
  EXPECT_EQ(count_runs(g), 1);
}

TEST(Explore, ForeverIsASelfLoop) {
  auto g = explore(Engine(load_model("forever-loop")));
  EXPECT_EQ(g.nodes.size(), 1u);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0].from, g.edges[0].to);
  EXPECT_FALSE(g.acyclic);
  EXPECT_EQ(code_of([&] { count_runs(g); }), ErrorCode::kCyclicGraph);
  EXPECT_EQ(code_of([&] { enumerate_runs(g); }), ErrorCode::kCyclicGraph);
  EXPECT_EQ(code_of([&] { uniform_sample(g, 1, 0); }), ErrorCode::kCyclicGraph);
}

TEST(Explore, ButtonsLattice) {
  auto g = explore(Engine(load_model("buttons")));
  EXPECT_EQ(g.nodes.size(), 44u);
  // Green edges leave the g > 0 points, red edges the r > 0 points.
  EXPECT_EQ(g.edges.size(), 3u * 11 + 4u * 10);
  EXPECT_EQ(count_runs(g), 286);
}

TEST(Explore, DepthTruncation) {
  auto g = explore(Engine(load_model("buttons")), ExploreOptions{5, std::nullopt});
  EXPECT_TRUE(g.has_truncation());
  EXPECT_EQ(g.depth_bound, 5u);
  for (const auto& n : g.nodes) {
    EXPECT_LE(n.depth, 5u);
    EXPECT_EQ(n.truncated, n.depth == 5u);
  }
  EXPECT_EQ(code_of([&] { count_runs(g); }), ErrorCode::kTruncatedGraph);
}

TEST(Explore, NodeBudget) {
  try {
    explore(Engine(load_model("buttons")), ExploreOptions{std::nullopt, 10});
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
    EXPECT_LE(e.partial().nodes.size(), 10u);
    EXPECT_TRUE(e.partial().has_truncation());
  }
}

TEST(Runs, BinomialProperty) {
  for (unsigned a = 1; a <= 5; ++a) {
    for (unsigned b = 1; b <= 6; ++b) {
      std::string text = "story \"a\" { repeat " + std::to_string(a) +
                         " { request x } } story \"b\" { repeat " + std::to_string(b) +
                         " { request y } }";
      auto g = explore(Engine(model_from(text)));
      EXPECT_EQ(count_runs(g), choose(a + b, a)) << text;
      EXPECT_EQ(g.nodes.size(), (a + 1) * (b + 1));
    }
  }
}

TEST(Runs, Example2Counts) {
  auto g = explore(Engine(load_model("buttons-alternating")));
  EXPECT_EQ(count_runs(g), 165);
  std::size_t deadlocks = 0;
  for (const auto& n : g.nodes) deadlocks += n.deadlock ? 1 : 0;
  // Maximal paths into deadlocks are not tests.
  EXPECT_GT(deadlocks, 0u);
}

TEST(Runs, EnumerateMatchesNaiveOnModels) {
  for (const char* name : {"buttons", "buttons-alternating", "hot-cold-3", "pizza-search"}) {
    Engine engine(load_model(name));
    auto runs = enumerate_runs(explore(engine));
    std::set<std::string> got;
    for (const auto& r : runs) got.insert(r.canonical());
    EXPECT_EQ(got, testing::naive_runs(engine)) << name;
    EXPECT_EQ(got.size(), runs.size()) << name;
  }
}

TEST(Runs, EnumerateMatchesNaiveOnRandomModels) {
  testing::ModelGenerator gen(5);
  for (int i = 0; i < 60; ++i) {
    std::string text = gen.next(8);
    Engine engine(model_from(text));
    auto g = explore(engine);
    auto runs = enumerate_runs(g);
    std::set<std::string> got;
    for (const auto& r : runs) got.insert(r.canonical());
    EXPECT_EQ(got, testing::naive_runs(engine)) << text;
    EXPECT_EQ(RunCount(runs.size()), count_runs(g)) << text;
  }
}

TEST(Runs, EnumerationIsLexicographicAndLimited) {
  auto g = explore(Engine(load_model("hot-cold-3")));
  auto all = enumerate_runs(g);
  ASSERT_EQ(all.size(), 20u);
  auto some = enumerate_runs(g, 7);
  ASSERT_EQ(some.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(some[i], all[i]);
}

TEST(Runs, UniformTwoRunFrequencies) {
  auto g = explore(Engine(model_from("story \"s\" { choose { { request a } or { request b request c } } }")));
  ASSERT_EQ(count_runs(g), 2);
  auto samples = uniform_sample(g, 4000, 11);
  std::size_t short_runs = 0;
  for (const auto& s : samples) short_runs += s.events.size() == 1 ? 1 : 0;
  // Binomial(4000, 0.5): sd is about 32; allow 5 sd.
  EXPECT_NEAR(static_cast<double>(short_runs), 2000.0, 160.0);
}

TEST(Runs, UniformIsNotWalkBiased) {
  // A walk would pick 'a' half the time; uniform gives it 1 of 4 runs.
  auto g = explore(Engine(model_from(
      "story \"s\" { choose { { request a } or { request b choose { { request c } or { request d } or { request e } } } } }")));
  ASSERT_EQ(count_runs(g), 4);
  auto samples = uniform_sample(g, 4000, 3);
  std::size_t a = 0;
  for (const auto& s : samples) a += s.events.front().name == "a" ? 1 : 0;
  EXPECT_NEAR(static_cast<double>(a), 1000.0, 140.0);
}

TEST(Runs, UniformSamplingIsSeeded) {
  auto g = explore(Engine(load_model("hot-cold")));
  EXPECT_EQ(uniform_sample(g, 30, 5), uniform_sample(g, 30, 5));
  EXPECT_NE(uniform_sample(g, 30, 5), uniform_sample(g, 30, 6));
}

TEST(Runs, NoCompleteRuns) {
  auto g = explore(Engine(model_from("story \"s\" { request a } story \"b\" { block a until never }")));
  EXPECT_EQ(count_runs(g), 0);
  EXPECT_TRUE(enumerate_runs(g).empty());
  EXPECT_EQ(code_of([&] { uniform_sample(g, 1, 0); }), ErrorCode::kNoCompleteRuns);
}

TEST(Replay, FollowsEdges) {
  auto g = explore(Engine(load_model("hot-cold-3")));
  auto run = enumerate_runs(g)[3];
  auto r = replay(g, run.events);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.path.size(), run.events.size());
  auto broken = run.events;
  std::swap(broken[0], broken.back());
  EXPECT_FALSE(replay(g, broken).complete);
}

}  // namespace
}  // namespace storyweave
