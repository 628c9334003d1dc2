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

#include "storyweave/dsl/project.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "storyweave/dsl/parser.hpp"

namespace storyweave::dsl {

namespace fs = std::filesystem;

CompiledProject compile_project(const fs::path& dir) {
  std::vector<fs::path> paths;
  std::error_code ec;
  if (fs::is_directory(dir, ec)) {
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
      if (entry.is_regular_file() && entry.path().extension() == ".story") {
        paths.push_back(entry.path());
      }
    }
  }
  if (ec || paths.empty()) {
    CompiledProject out;
    out.diagnostics.push_back(Diagnostic{
        Severity::kError, "io",
        ec ? "cannot read project directory " + dir.string() + ": " + ec.message()
           : "no .story files in " + dir.string(),
        Span{}});
    return out;
  }
  std::sort(paths.begin(), paths.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  std::vector<SourceFile> files;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    files.push_back(SourceFile{p.string(), buf.str()});
  }
  return compile_sources(std::move(files));
}

CompiledProject compile_sources(std::vector<SourceFile> files) {
  CompiledProject out;
  ModelAst merged;
  for (std::uint32_t i = 0; i < files.size(); ++i) {
    ParseResult parsed = parse(files[i], i);
    out.diagnostics.insert(out.diagnostics.end(), parsed.diagnostics.begin(),
                           parsed.diagnostics.end());
    if (!parsed.ast) continue;
    auto& ast = *parsed.ast;
    std::move(ast.highlevel.begin(), ast.highlevel.end(), std::back_inserter(merged.highlevel));
    std::move(ast.event_defs.begin(), ast.event_defs.end(), std::back_inserter(merged.event_defs));
    std::move(ast.stories.begin(), ast.stories.end(), std::back_inserter(merged.stories));
  }
  out.files = std::move(files);
  if (has_errors(out.diagnostics)) return out;
  CheckResult checked = check(merged);
  out.diagnostics.insert(out.diagnostics.end(), checked.diagnostics.begin(),
                         checked.diagnostics.end());
  out.model = std::move(checked.model);
  return out;
}

}  // namespace storyweave::dsl
