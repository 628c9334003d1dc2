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

#include <filesystem>
#include <optional>
#include <vector>

#include "storyweave/dsl/checker.hpp"
#include "storyweave/dsl/source.hpp"

namespace storyweave::dsl {

struct CompiledProject {
  std::vector<SourceFile> files;
  std::optional<CheckedModel> model;
  std::vector<Diagnostic> diagnostics;
};

// Reads every `.story` file directly inside `dir` (lexicographic filename
// order), parses them as one model and checks it. Unreadable directories are
// reported as an `io` diagnostic.
CompiledProject compile_project(const std::filesystem::path& dir);

// Same pipeline for in-memory sources.
CompiledProject compile_sources(std::vector<SourceFile> files);

}  // namespace storyweave::dsl
