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

#include "storyweave/cli/app.hpp"

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "storyweave/cli/config.hpp"
#include "storyweave/dsl/project.hpp"
#include "storyweave/engine/engine.hpp"
#include "storyweave/error.hpp"
#include "storyweave/export/dot.hpp"
#include "storyweave/export/render.hpp"
#include "storyweave/export/structured.hpp"
#include "storyweave/runner/execute.hpp"
#include "storyweave/runner/report.hpp"
#include "storyweave/space/explore.hpp"
#include "storyweave/space/runs.hpp"
#include "storyweave/tools/ensemble.hpp"
#include "storyweave/tools/sampling.hpp"
#include "storyweave/tools/scenario_io.hpp"

namespace storyweave::cli {
namespace {

namespace fs = std::filesystem;

// Unwinds a command with a fixed exit code after its message was printed.
struct Exit {
  int code;
};

struct Options {
  std::string project;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> max_depth;

  // sample
  std::size_t samples = 0;
  bool uniform = false;
  // ensemble
  std::string criterion;
  std::size_t budget = 10;
  // analyze
  std::string format = "gv";
  std::string highlight;
  // run
  std::string input;
  std::optional<std::size_t> run_samples;
  std::string adapter;
  std::string timestamp;
};

class Command {
 public:
  Command(Options options, std::ostream& out, std::ostream& err)
      : opt_(std::move(options)), out_(out), err_(err) {}

  int check();
  int count();
  int sample();
  int ensemble_cmd();
  int analyze();
  int run();

 private:
  void load() {
    try {
      config_ = load_config(opt_.project);
    } catch (const Error& e) {
      err_ << "error: " << fs::path(opt_.project) / kConfigFileName << ": " << e.what() << "\n";
      throw Exit{kExitInputError};
    }
  }

  // Compiles the project; diagnostics always go to stderr.
  const dsl::CheckedModel& compile() {
    project_ = dsl::compile_project(opt_.project);
    for (const auto& d : project_.diagnostics)
      err_ << dsl::format_diagnostic(d, project_.files) << "\n";
    if (!project_.model) throw Exit{kExitInputError};
    return *project_.model;
  }

  std::uint64_t seed() const { return opt_.seed.value_or(config_.seed); }
  std::uint32_t max_depth() const { return opt_.max_depth.value_or(config_.max_depth); }

  RunGraph explore_graph(const Engine& engine) const {
    return explore(engine, ExploreOptions{max_depth(), config_.max_nodes});
  }

  fs::path output_path(const std::string& default_name) const {
    if (!opt_.output.empty()) return opt_.output;
    return fs::path(opt_.project) / default_name;
  }

  Options opt_;
  std::ostream& out_;
  std::ostream& err_;
  ProjectConfig config_;
  dsl::CompiledProject project_;
};

std::string graph_size(const RunGraph& graph) {
  return std::to_string(graph.nodes.size()) + " nodes, " + std::to_string(graph.edges.size()) +
         " edges";
}

int Command::check() {
  load();
  const auto& model = compile();
  out_ << "ok: " << model.stories.size() << " stories, " << model.vocabulary.size()
       << " event names\n";
  return kExitOk;
}

int Command::count() {
  load();
  Engine engine(compile());
  RunGraph graph = explore_graph(engine);
  if (!graph.acyclic) {
    out_ << "cyclic (" << graph_size(graph) << ")\n";
  } else if (graph.has_truncation()) {
    out_ << "truncated at depth " << max_depth() << " (" << graph_size(graph) << ")\n";
  } else {
    out_ << count_runs(graph) << "\n";
  }
  return kExitOk;
}

int Command::sample() {
  load();
  if (opt_.samples < 1) {
    err_ << "error: -n must be at least 1\n";
    return kExitUsage;
  }
  Engine engine(compile());
  std::vector<Scenario> scenarios;
  if (opt_.uniform) {
    RunGraph graph = explore_graph(engine);
    try {
      require_exact(graph);
      scenarios = uniform_sample(graph, opt_.samples, seed());
    } catch (const Error& e) {
      err_ << "error: " << e.what() << " (" << graph_size(graph)
           << "); uniform sampling needs a finite acyclic run graph, drop --uniform to sample"
              " random walks\n";
      return kExitNotSampleable;
    }
  } else {
    scenarios = sample_walk(engine, opt_.samples, seed(), max_depth());
  }
  fs::path path = output_path("samples.ndjson");
  write_scenario_file(path, scenarios);
  out_ << "wrote " << scenarios.size() << " scenarios to " << path.string() << "\n";
  return kExitOk;
}

int Command::ensemble_cmd() {
  Criterion criterion = Criterion::parse(opt_.criterion);
  if (opt_.budget < 1) {
    err_ << "error: --budget must be at least 1\n";
    return kExitUsage;
  }
  load();
  Engine engine(compile());

  std::optional<RunGraph> graph;
  try {
    graph = explore_graph(engine);
  } catch (const BudgetExceeded&) {
    // Too large to explore; walks still work.
  }
  std::vector<Scenario> pool;
  bool exact = graph && graph->acyclic && !graph->has_truncation();
  if (exact && count_runs(*graph) <= config_.enumerate_limit) {
    pool = enumerate_runs(*graph);
  } else {
    pool = sample_walk(engine, config_.walk_samples, seed(), max_depth());
  }
  if (pool.empty()) {
    err_ << "error: the model has no complete runs to choose from\n";
    return kExitInputError;
  }
  Ensemble result = ensemble(std::move(pool), criterion, opt_.budget,
                             graph ? &*graph : nullptr, config_.weights);

  fs::path path = output_path("ensemble.ndjson");
  write_scenario_file(path, result.scenarios);
  std::ostringstream ratio;
  ratio << std::fixed << std::setprecision(6) << result.ratio();
  out_ << "criterion: " << criterion.name() << "\n"
       << "members: " << result.scenarios.size() << "\n"
       << "covered: " << result.covered.size() << "/" << result.feasible << "\n"
       << "coverage_ratio: " << ratio.str() << "\n"
       << "wrote " << path.string() << "\n";
  return kExitOk;
}

int Command::analyze() {
  load();
  Engine engine(compile());
  RunGraph graph = explore_graph(engine);

  std::optional<Highlight> highlight;
  if (!opt_.highlight.empty()) {
    std::vector<Scenario> scenarios;
    try {
      scenarios = read_scenario_file(opt_.highlight);
    } catch (const Error& e) {
      err_ << "error: " << opt_.highlight << ": " << e.what() << "\n";
      return kExitInputError;
    }
    highlight = resolve_highlight(graph, std::move(scenarios));
    for (const auto& p : highlight->problems)
      err_ << "warning: highlight scenario " << p.index + 1 << ": " << p.reason << "\n";
  }
  const Highlight* h = highlight ? &*highlight : nullptr;

  fs::path path;
  if (opt_.format == "json") {
    path = output_path("model.json");
    write_text_file(path, to_structured(graph, h));
  } else if (opt_.format == "gv") {
    path = output_path("model.gv");
    write_text_file(path, to_graph_description(graph, h));
  } else {
    path = output_path("model.pdf");
    render_pdf(to_graph_description(graph, h), path, config_.renderer);
  }
  out_ << "wrote " << path.string() << " (" << graph_size(graph) << ")\n";
  return kExitOk;
}

std::string utc_now() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

int Command::run() {
  load();
  AdapterSettings settings = config_.adapter;
  if (!opt_.adapter.empty()) settings.kind = parse_adapter_kind(opt_.adapter);
  // Misconfiguration surfaces here, before anything is dispatched.
  auto adapter = make_adapter(settings);

  Engine engine(compile());
  std::vector<Scenario> scenarios;
  if (!opt_.input.empty()) {
    try {
      scenarios = read_scenario_file(opt_.input);
    } catch (const Error& e) {
      err_ << "error: " << opt_.input << ": " << e.what() << "\n";
      return kExitInputError;
    }
  } else {
    scenarios = sample_walk(engine, *opt_.run_samples, seed(), max_depth());
  }

  std::vector<std::set<std::string>> tags;
  tags.reserve(scenarios.size());
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    try {
      auto t = engine.contributing_stories(scenarios[i]);
      t.insert(config_.tags.begin(), config_.tags.end());
      tags.push_back(std::move(t));
    } catch (const Error& e) {
      err_ << "error: scenario " << i + 1 << ": " << e.what() << "\n";
      return kExitInputError;
    }
  }
  // Tagging happens up front; the tagger just looks the result up.
  std::map<std::string, std::set<std::string>> by_scenario;
  for (std::size_t i = 0; i < scenarios.size(); ++i) by_scenario[scenarios[i].canonical()] = tags[i];
  Tagger tagger = [&by_scenario](const Scenario& s) { return by_scenario.at(s.canonical()); };

  auto results = execute_all(scenarios, *adapter, config_.run, tagger);

  Json echo{{"adapter", std::string(adapter_kind_name(settings.kind))},
            {"max_depth", max_depth()},
            {"scenarios", scenarios.size()},
            {"seed", seed()},
            {"source", opt_.input.empty() ? "sample" : "input"}};
  Report report = make_report(results, opt_.timestamp.empty() ? utc_now() : opt_.timestamp, echo);

  fs::path dir = opt_.output.empty() ? fs::path(opt_.project) : fs::path(opt_.output);
  write_text_file(dir / "report.ndjson", report.to_ndjson());
  write_text_file(dir / "report.txt", report.to_table());
  out_ << report.to_table();

  bool failed = false;
  for (const auto& r : results) failed = failed || r.overall != OutcomeStatus::kPass;
  return failed ? kExitTestFailures : kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCyclicGraph:
    case ErrorCode::kTruncatedGraph:
    case ErrorCode::kNoCompleteRuns:
      return kExitNotSampleable;
    case ErrorCode::kUnsupportedCriterion:
      return kExitUnsupportedCriterion;
    case ErrorCode::kRendererNotFound:
      return kExitRendererNotFound;
    case ErrorCode::kRendererFailed:
      return kExitRendererFailed;
    case ErrorCode::kAdapterMisconfigured:
      return kExitAdapterMisconfigured;
    case ErrorCode::kBudgetExceeded:
      return kExitBudgetExceeded;
    default:
      return kExitInputError;
  }
}

struct Cli {
  CLI::App app{"Weave scenario stories into a model of test runs; count, sample, ensemble, "
               "draw and execute them.",
               "storyweave"};
  Options opt;
  CLI::App* check = nullptr;
  CLI::App* count = nullptr;
  CLI::App* sample = nullptr;
  CLI::App* ensemble = nullptr;
  CLI::App* analyze = nullptr;
  CLI::App* run = nullptr;

  Cli() {
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Print help for every subcommand");

    auto project = [this](CLI::App* sub) {
      sub->add_option("path", opt.project, "Project directory (.story files, config.toml)")
          ->required();
    };
    auto depth = [this](CLI::App* sub) {
      sub->add_option("--max-depth", opt.max_depth,
                      "Events per run before exploration stops (default from config, 10000)");
    };
    auto seed = [this](CLI::App* sub) {
      sub->add_option("--seed", opt.seed, "Random seed (default from config, 0)");
    };
    auto output = [this](CLI::App* sub, const std::string& what) {
      sub->add_option("-o,--output", opt.output, what);
    };

    check = app.add_subcommand("check", "Parse and check the stories; print diagnostics");
    project(check);

    count = app.add_subcommand("count", "Print the number of complete runs");
    depth(count);
    project(count);

    sample = app.add_subcommand("sample", "Write sampled scenarios to samples.ndjson");
    sample->add_option("-n", opt.samples, "Number of scenarios (at least 1)")->required();
    seed(sample);
    sample->add_flag("--uniform", opt.uniform,
                     "Draw uniformly over complete runs (finite acyclic models only)");
    depth(sample);
    output(sample, "Scenario file (default <path>/samples.ndjson)");
    project(sample);

    ensemble = app.add_subcommand("ensemble", "Greedily pick a covering scenario set");
    ensemble
        ->add_option("-c,--criterion", opt.criterion,
                     "One of: " + Criterion::supported_names())
        ->required();
    ensemble->add_option("--budget", opt.budget, "Maximum members (default 10)");
    seed(ensemble);
    depth(ensemble);
    output(ensemble, "Ensemble file (default <path>/ensemble.ndjson)");
    project(ensemble);

    analyze = app.add_subcommand("analyze", "Export the run graph");
    analyze->add_option("-f,--format", opt.format, "json, gv or pdf (default gv)")
        ->check(CLI::IsMember({"json", "gv", "pdf"}));
    analyze->add_option("--highlight", opt.highlight, "Scenario file whose runs are highlighted");
    depth(analyze);
    output(analyze, "Graph file (default <path>/model.<format>)");
    project(analyze);

    run = app.add_subcommand("run", "Execute scenarios through an adapter and report");
    auto* input = run->add_option("--input", opt.input, "Scenario file to execute");
    auto* n = run->add_option("--sample", opt.run_samples, "Execute N sampled random walks");
    input->excludes(n);
    n->excludes(input);
    run->add_option("--adapter", opt.adapter, "mock, exec or http (default from config, mock)")
        ->check(CLI::IsMember({"mock", "exec", "http"}));
    seed(run);
    depth(run);
    run->add_option("--timestamp", opt.timestamp, "Report timestamp (default: current UTC time)");
    output(run, "Directory for report.ndjson and report.txt (default <path>)");
    project(run);
    run->callback([input, n] {
      if (input->count() == 0 && n->count() == 0)
        throw CLI::RequiredError("one of --input or --sample");
    });
  }
};

}  // namespace

std::string full_help() {
  Cli cli;
  std::string text = cli.app.help();
  for (CLI::App* sub : cli.app.get_subcommands({})) text += "\n" + sub->help();
  return text;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    cli.app.parse(reversed);
  } catch (const CLI::CallForAllHelp&) {
    out << full_help();
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    // Help for whichever subcommand was named, or the top level.
    CLI::App* target = &cli.app;
    for (CLI::App* sub : cli.app.get_subcommands({}))
      if (sub->parsed()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  Command command(cli.opt, out, err);
  try {
    if (cli.check->parsed()) return command.check();
    if (cli.count->parsed()) return command.count();
    if (cli.sample->parsed()) return command.sample();
    if (cli.ensemble->parsed()) return command.ensemble_cmd();
    if (cli.analyze->parsed()) return command.analyze();
    return command.run();
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace storyweave::cli
