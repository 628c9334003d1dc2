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

#include <optional>
#include <vector>

#include "storyweave/dsl/ast.hpp"
#include "storyweave/dsl/source.hpp"

namespace storyweave::dsl {

struct ParseResult {
  std::optional<ModelAst> ast;  // set iff `diagnostics` holds no error
  std::vector<Diagnostic> diagnostics;
};

// Maximum nesting of blocks accepted before reporting `nesting-too-deep`.
inline constexpr int kMaxNesting = 128;

ParseResult parse(const SourceFile& source, std::uint32_t file = 0);

}  // namespace storyweave::dsl
