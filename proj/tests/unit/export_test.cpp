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

#include <filesystem>
#include <fstream>

#include "storyweave/error.hpp"
#include "storyweave/export/dot.hpp"
#include "storyweave/export/render.hpp"
#include "storyweave/export/structured.hpp"
#include "storyweave/space/explore.hpp"
#include "storyweave/space/runs.hpp"
#include "support.hpp"

namespace storyweave {
namespace {

namespace fs = std::filesystem;
using testing::load_model;

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

fs::path script(const fs::path& dir, const std::string& name, const std::string& body) {
  fs::path p = dir / name;
  std::ofstream(p) << "#!/bin/sh\n" << body;
  fs::permissions(p, fs::perms::owner_all);
  return p;
}

TEST(Dot, ShapeOfOutput) {
  auto g = explore(Engine(load_model("hot-cold-3")));
  std::string dot = to_graph_description(g);
  EXPECT_EQ(dot.rfind("digraph runs {\n", 0), 0u);
  EXPECT_EQ(dot.substr(dot.size() - 2), "}\n");
  EXPECT_EQ(occurrences(dot, " -> "), g.edges.size());
  EXPECT_EQ(occurrences(dot, "doublecircle"), 1u);
  EXPECT_NE(dot.find("label=\"hot_1(session=S1)\""), std::string::npos);
  EXPECT_EQ(dot, to_graph_description(explore(Engine(load_model("hot-cold-3")))));
}

TEST(Dot, FrontierNodesAreDashed) {
  auto g = explore(Engine(load_model("buttons")), ExploreOptions{4, std::nullopt});
  std::string dot = to_graph_description(g);
  std::size_t frontier = 0;
  for (const auto& n : g.nodes) frontier += n.truncated ? 1 : 0;
  EXPECT_EQ(frontier, 4u);  // (g, r) splits of 4 presses with g <= 3
  EXPECT_EQ(occurrences(dot, "style=dashed"), frontier);
}

TEST(Dot, DeadlocksAreRed) {
  auto g = explore(Engine(load_model("buttons-alternating")));
  std::size_t deadlocks = 0;
  for (const auto& n : g.nodes) deadlocks += n.deadlock ? 1 : 0;
  EXPECT_EQ(occurrences(to_graph_description(g), ", color=red"), deadlocks);
}

TEST(Highlight, EdgesOfReplayedRuns) {
  auto g = explore(Engine(load_model("hot-cold-3")));
  auto runs = enumerate_runs(g);
  auto h = resolve_highlight(g, {runs[0]});
  EXPECT_EQ(h.edges.size(), runs[0].events.size());
  EXPECT_TRUE(h.problems.empty());
  EXPECT_EQ(occurrences(to_graph_description(g, &h), "penwidth=3"), h.edges.size());

  Scenario stray{{Event{"nope", {}}}, Terminal::kCompleted};
  auto bad = resolve_highlight(g, {stray});
  ASSERT_EQ(bad.problems.size(), 1u);
  EXPECT_FALSE(bad.problems[0].partial);

  auto shallow = explore(Engine(load_model("hot-cold-3")), ExploreOptions{2, std::nullopt});
  auto partial = resolve_highlight(shallow, {runs[0]});
  ASSERT_EQ(partial.problems.size(), 1u);
  EXPECT_TRUE(partial.problems[0].partial);
  EXPECT_EQ(partial.edges.size(), 2u);
}

TEST(Structured, RoundTripIsByteIdentical) {
  for (const char* name : {"buttons", "buttons-alternating", "forever-loop", "pizza-search"}) {
    auto g = explore(Engine(load_model(name)));
    Highlight h;
    if (g.acyclic) h = resolve_highlight(g, enumerate_runs(g, 1));
    std::string text = to_structured(g, &h);
    auto back = import_structured(text);
    EXPECT_EQ(to_structured(back.graph, back.highlighted), text) << name;
    EXPECT_EQ(back.highlighted, h.edges);
    ASSERT_EQ(back.graph.nodes.size(), g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      // The configuration hash is not part of the exported form.
      auto expected = g.nodes[i];
      expected.hash = back.graph.nodes[i].hash;
      EXPECT_EQ(back.graph.nodes[i], expected);
    }
    EXPECT_EQ(back.graph.edges, g.edges);
  }
  auto truncated = explore(Engine(load_model("buttons")), ExploreOptions{3, std::nullopt});
  std::string text = to_structured(truncated);
  EXPECT_EQ(to_structured(import_structured(text).graph), text);
}

TEST(Structured, Example1Fields) {
  auto j = Json::parse(to_structured(explore(Engine(load_model("buttons")))));
  EXPECT_EQ(j["nodes"].size(), 44u);
  EXPECT_TRUE(j["acyclic"].get<bool>());
  EXPECT_TRUE(j["depth_bound"].is_null());
  EXPECT_EQ(j["root"], 0);
}

TEST(Structured, ImportRejectsMalformedInput) {
  for (const char* text : {"", "[]", "{\"nodes\":[]}", "{not json",
                           R"({"acyclic":true,"depth_bound":null,"edges":[{"event":{"fields":{},"name":"a"},"from":0,"highlighted":false,"to":7}],"nodes":[{"deadlock":false,"depth":0,"id":0,"terminal":false,"truncated":false}],"root":0})"}) {
    try {
      import_structured(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kFormat) << text;
    }
  }
}

TEST(Render, MissingRenderer) {
  try {
    render_pdf("digraph {}", "/tmp/never.pdf", "storyweave-no-such-renderer");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRendererNotFound);
  }
}

TEST(Render, FakeRendererSucceedsAndFails) {
  testing::TempDir tmp;
  // Arguments arrive as -Tpdf -o <file>; the description arrives on stdin.
  auto ok = script(tmp.path, "ok.sh", "cat > \"$3\"\n");
  render_pdf("digraph { a }", tmp.path / "out.pdf", ok.string());
  std::ifstream in(tmp.path / "out.pdf");
  std::string content((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(content, "digraph { a }");

  auto bad = script(tmp.path, "bad.sh", "echo 'syntax error in line 1' >&2\nexit 1\n");
  try {
    render_pdf("digraph {", tmp.path / "bad.pdf", bad.string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRendererFailed);
    EXPECT_NE(std::string(e.what()).find("syntax error in line 1"), std::string::npos);
  }
}

}  // namespace
}  // namespace storyweave
