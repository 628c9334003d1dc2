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
#include <sstream>

#include "storyweave/cli/app.hpp"
#include "storyweave/cli/config.hpp"
#include "storyweave/error.hpp"
#include "storyweave/runner/process.hpp"
#include "support.hpp"

namespace storyweave {
namespace {

namespace fs = std::filesystem;
using cli::parse_config;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run_cli(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string model(const std::string& name) { return (testing::models_dir() / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t lines(const std::string& text) { return std::count(text.begin(), text.end(), '\n'); }

// The last report line holds the totals.
Json totals(const std::string& report) {
  auto start = report.rfind('\n', report.size() - 2);
  return Json::parse(report.substr(start == std::string::npos ? 0 : start + 1));
}

// Copies a model directory so commands that write next to it stay out of the tree.
fs::path copy_model(const std::string& name, const fs::path& into) {
  fs::path dest = into / name;
  fs::copy(testing::models_dir() / name, dest, fs::copy_options::recursive);
  return dest;
}

TEST(Config, DefaultsWhenEmpty) {
  auto c = parse_config("");
  EXPECT_EQ(c.seed, 0u);
  EXPECT_EQ(c.max_depth, 10000u);
  EXPECT_EQ(c.enumerate_limit, 10000u);
  EXPECT_EQ(c.adapter.kind, AdapterKind::kMock);
  EXPECT_TRUE(c.run.stop_on_failure);
  EXPECT_TRUE(c.tags.empty());
}

TEST(Config, AllSections) {
  auto c = parse_config(R"(# top
seed = 9
max_depth = 40
max_nodes = 500
renderer = "dot"

[ensemble]
enumerate_limit = 12
walk_samples = 34

[weights]
push = 3

[adapter]
kind = "http"

[mock]
click = "fail"

[exec]
command = "/bin/true"
timeout = 1.5

[http]
base_url = "http://localhost:9"
status_min = 200
status_max = 204

[run]
workers = 4
stop_on_failure = false
tags = "smoke, nightly"
)");
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.max_depth, 40u);
  EXPECT_EQ(c.max_nodes, 500u);
  EXPECT_EQ(c.renderer, "dot");
  EXPECT_EQ(c.enumerate_limit, 12u);
  EXPECT_EQ(c.walk_samples, 34u);
  EXPECT_EQ(c.weights.at("push"), 3);
  EXPECT_EQ(c.adapter.kind, AdapterKind::kHttp);
  EXPECT_EQ(c.adapter.mock.verdicts.at("click"), OutcomeStatus::kFail);
  EXPECT_EQ(c.adapter.exec.command, "/bin/true");
  EXPECT_DOUBLE_EQ(c.adapter.exec.timeout_seconds, 1.5);
  EXPECT_EQ(c.adapter.http.status_max, 204);
  EXPECT_EQ(c.run.workers, 4u);
  EXPECT_FALSE(c.run.stop_on_failure);
  EXPECT_EQ(c.tags, (std::vector<std::string>{"smoke", "nightly"}));
}

TEST(Config, ErrorsNameTheLine) {
  for (const char* text : {"bogus = 1", "[nowhere]", "seed = \"x\"", "seed = -1", "[mock]\nclick = \"maybe\"",
                           "[run]\nstop_on_failure = 1", "seed", "[adapter]\nkind = \"ftp\""}) {
    try {
      parse_config(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kFormat) << text;
      EXPECT_NE(std::string(e.what()).find("config.toml:"), std::string::npos) << e.what();
    }
  }
}

TEST(Cli, CheckAndCount) {
  auto o = cli_run({"check", model("buttons")});
  EXPECT_EQ(o.code, cli::kExitOk);
  EXPECT_EQ(o.out, "ok: 2 stories, 1 event names\n");
  EXPECT_EQ(cli_run({"count", model("buttons")}).out, "286\n");
  EXPECT_EQ(cli_run({"count", model("buttons-alternating")}).out, "165\n");
  EXPECT_EQ(cli_run({"count", model("forever-loop")}).out, "cyclic (1 nodes, 1 edges)\n");
  auto t = cli_run({"count", "--max-depth", "4", model("buttons")});
  EXPECT_EQ(t.code, cli::kExitOk);
  EXPECT_EQ(t.out.rfind("truncated at depth 4", 0), 0u) << t.out;
}

TEST(Cli, DslErrorsExitTwo) {
  testing::TempDir tmp;
  std::ofstream(tmp.path / "bad.story") << "story \"s\" { request }\n";
  auto o = cli_run({"check", tmp.path.string()});
  EXPECT_EQ(o.code, cli::kExitInputError);
  EXPECT_NE(o.err.find("bad.story:1:"), std::string::npos) << o.err;
  EXPECT_EQ(cli_run({"count", (tmp.path / "missing").string()}).code, cli::kExitInputError);
  std::ofstream(tmp.path / "bad.story") << "story \"s\" { request a }\n";
  std::ofstream(tmp.path / "config.toml") << "colour = 1\n";
  EXPECT_EQ(cli_run({"count", tmp.path.string()}).code, cli::kExitInputError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli_run({}).code, cli::kExitUsage);
  EXPECT_EQ(cli_run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(cli_run({"sample", model("buttons")}).code, cli::kExitUsage);
  EXPECT_EQ(cli_run({"sample", "-n", "0", model("buttons")}).code, cli::kExitUsage);
  EXPECT_EQ(cli_run({"run", model("buttons")}).code, cli::kExitUsage);
  EXPECT_EQ(cli_run({"run", "--input", "x", "--sample", "2", model("buttons")}).code, cli::kExitUsage);
  EXPECT_EQ(cli_run({"analyze", "-f", "png", model("buttons")}).code, cli::kExitUsage);
}

TEST(Cli, SampleWritesLinesAndIsDeterministic) {
  testing::TempDir tmp;
  auto a = tmp.path / "a.ndjson";
  auto b = tmp.path / "b.ndjson";
  EXPECT_EQ(cli_run({"sample", "-n", "5", "--seed", "4", "-o", a.string(), model("buttons")}).code, 0);
  EXPECT_EQ(cli_run({"sample", "-n", "5", "--seed", "4", "-o", b.string(), model("buttons")}).code, 0);
  EXPECT_EQ(lines(slurp(a)), 5u);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(cli_run({"sample", "-n", "5", "--uniform", "--seed", "4", "-o", b.string(), model("buttons")}).code, 0);
  EXPECT_EQ(lines(slurp(b)), 5u);

  auto project = copy_model("hot-cold-3", tmp.path);
  EXPECT_EQ(cli_run({"sample", "-n", "3", project.string()}).code, 0);
  EXPECT_EQ(lines(slurp(project / "samples.ndjson")), 3u);
}

TEST(Cli, UniformOnCyclicModelExitsThree) {
  auto o = cli_run({"sample", "-n", "2", "--uniform", "-o", "/dev/null", model("forever-loop")});
  EXPECT_EQ(o.code, cli::kExitNotSampleable);
  EXPECT_NE(o.err.find("--uniform"), std::string::npos) << o.err;
}

TEST(Cli, Ensemble) {
  testing::TempDir tmp;
  auto path = tmp.path / "e.ndjson";
  auto o = cli_run({"ensemble", "-c", "pairs", "-o", path.string(), model("buttons-alternating")});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("covered: 4/4"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("coverage_ratio: 1.000000"), std::string::npos) << o.out;

  auto one = cli_run({"ensemble", "-c", "triples", "--budget", "1", "-o", path.string(), model("hot-cold-3")});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(lines(slurp(path)), 1u);

  auto bad = cli_run({"ensemble", "-c", "complexity", "-o", path.string(), model("buttons")});
  EXPECT_EQ(bad.code, cli::kExitUnsupportedCriterion);
  EXPECT_NE(bad.err.find("events, pairs, triples, edges, diversity"), std::string::npos) << bad.err;
}

TEST(Cli, Analyze) {
  testing::TempDir tmp;
  auto gv = tmp.path / "m.gv";
  EXPECT_EQ(cli_run({"analyze", "-o", gv.string(), model("hot-cold-3")}).code, 0);
  EXPECT_EQ(slurp(gv).rfind("digraph runs {", 0), 0u);

  auto json = tmp.path / "m.json";
  EXPECT_EQ(cli_run({"analyze", "-f", "json", "-o", json.string(), model("buttons")}).code, 0);
  EXPECT_EQ(Json::parse(slurp(json))["nodes"].size(), 44u);

  auto samples = tmp.path / "s.ndjson";
  ASSERT_EQ(cli_run({"sample", "-n", "2", "-o", samples.string(), model("hot-cold-3")}).code, 0);
  EXPECT_EQ(cli_run({"analyze", "--highlight", samples.string(), "-o", gv.string(), model("hot-cold-3")}).code, 0);
  EXPECT_NE(slurp(gv).find("penwidth=3"), std::string::npos);
  EXPECT_EQ(cli_run({"analyze", "--highlight", "/nonexistent.ndjson", "-o", gv.string(), model("hot-cold-3")}).code,
            cli::kExitInputError);
}

TEST(Cli, PdfWithoutRendererExitsFive) {
  testing::TempDir tmp;
  auto project = copy_model("buttons", tmp.path);
  std::ofstream(project / "config.toml") << "renderer = \"storyweave-no-such-renderer\"\n";
  auto o = cli_run({"analyze", "-f", "pdf", project.string()});
  EXPECT_EQ(o.code, cli::kExitRendererNotFound);
  EXPECT_FALSE(fs::exists(project / "model.pdf"));
}

TEST(Cli, RunWithMockAdapter) {
  testing::TempDir tmp;
  auto project = copy_model("pizza-search", tmp.path);
  auto o = cli_run({"run", "--sample", "3", "--timestamp", "2026-01-01T00:00:00Z", "-o", tmp.path.string(),
                    project.string()});
  EXPECT_EQ(o.code, cli::kExitOk) << o.err;
  auto report = slurp(tmp.path / "report.ndjson");
  EXPECT_EQ(lines(report), 3u);  // header, one tag group, totals
  EXPECT_EQ(totals(report)["runs"], 3);
  EXPECT_EQ(totals(report)["failures"], 0);
  EXPECT_NE(report.find("2026-01-01T00:00:00Z"), std::string::npos);
  EXPECT_TRUE(fs::exists(tmp.path / "report.txt"));

  // Same seed and timestamp, same bytes.
  auto again = tmp.path / "again";
  fs::create_directories(again);
  cli_run({"run", "--sample", "3", "--timestamp", "2026-01-01T00:00:00Z", "-o", again.string(), project.string()});
  EXPECT_EQ(slurp(again / "report.ndjson"), report);

  std::ofstream(project / "config.toml") << "[mock]\ntype_query = \"fail\"\n";
  EXPECT_EQ(cli_run({"run", "--sample", "2", "-o", tmp.path.string(), project.string()}).code, cli::kExitTestFailures);
}

TEST(Cli, RunReplaysAnInputFile) {
  testing::TempDir tmp;
  auto samples = tmp.path / "s.ndjson";
  ASSERT_EQ(cli_run({"sample", "-n", "4", "-o", samples.string(), model("hot-cold-3")}).code, 0);
  EXPECT_EQ(cli_run({"run", "--input", samples.string(), "-o", tmp.path.string(), model("hot-cold-3")}).code, 0);
  EXPECT_EQ(totals(slurp(tmp.path / "report.ndjson"))["runs"], 4);
  // Scenarios the model cannot produce are rejected.
  EXPECT_EQ(cli_run({"run", "--input", samples.string(), "-o", tmp.path.string(), model("buttons")}).code,
            cli::kExitInputError);
}

TEST(Cli, MisconfiguredAdapterExitsSix) {
  testing::TempDir tmp;
  auto project = copy_model("buttons", tmp.path);
  std::ofstream(project / "config.toml") << "[exec]\ncommand = \"/nonexistent/sut\"\n";
  EXPECT_EQ(cli_run({"run", "--adapter", "exec", "--sample", "1", "-o", tmp.path.string(), project.string()}).code,
            cli::kExitAdapterMisconfigured);
  EXPECT_EQ(cli_run({"run", "--adapter", "http", "--sample", "1", "-o", tmp.path.string(), project.string()}).code,
            cli::kExitAdapterMisconfigured);
}

TEST(Cli, BudgetExceededExitsEight) {
  testing::TempDir tmp;
  auto project = copy_model("buttons", tmp.path);
  std::ofstream(project / "config.toml") << "max_nodes = 5\n";
  EXPECT_EQ(cli_run({"count", project.string()}).code, cli::kExitBudgetExceeded);
}

TEST(Cli, HelpMatchesGolden) {
  std::string golden = slurp(fs::path(STORYWEAVE_GOLDEN_DIR) / "help.txt");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(cli::full_help(), golden);
  auto o = cli_run({"--help-all"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, golden);
  for (const char* flag : {"-n", "--seed", "--uniform", "--criterion", "--budget", "--format", "--highlight",
                           "--max-depth", "--input", "--sample", "--adapter", "--timestamp", "--output"})
    EXPECT_NE(golden.find(flag), std::string::npos) << flag;
  EXPECT_NE(cli_run({"sample", "--help"}).out.find("--uniform"), std::string::npos);
}

TEST(Cli, BinaryExitCodes) {
  auto ok = run_process({{STORYWEAVE_CLI_BINARY, "count", model("buttons")}, {}, "", std::nullopt});
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.stdout_text, "286\n");
  auto usage = run_process({{STORYWEAVE_CLI_BINARY, "nope"}, {}, "", std::nullopt});
  EXPECT_EQ(usage.exit_code, cli::kExitUsage);
  auto criterion = run_process(
      {{STORYWEAVE_CLI_BINARY, "ensemble", "-c", "complexity", "-o", "/dev/null", model("buttons")}, {}, "",
       std::nullopt});
  EXPECT_EQ(criterion.exit_code, cli::kExitUnsupportedCriterion);
}

}  // namespace
}  // namespace storyweave
