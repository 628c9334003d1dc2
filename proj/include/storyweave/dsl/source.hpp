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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace storyweave::dsl {

struct SourceFile {
  std::string path;
  std::string content;
};

// Byte range inside one source file. Line and column are 1-based.
struct Span {
  std::uint32_t file = 0;
  std::uint32_t offset = 0;
  std::uint32_t length = 0;
  std::uint32_t line = 1;
  std::uint32_t column = 1;

  // Spans are positional metadata only; they never take part in structural
  // comparison of syntax trees.
  friend bool operator==(const Span&, const Span&) { return true; }
};

// Maps byte offsets of a file to line/column pairs.
class LineIndex {
 public:
  explicit LineIndex(std::string_view content);

  Span span_at(std::uint32_t file, std::uint32_t offset, std::uint32_t length) const;

 private:
  std::vector<std::uint32_t> line_starts_;
};

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  Span span;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);

// "path:line:col: error[code]: message"
std::string format_diagnostic(const Diagnostic& diagnostic,
                              const std::vector<SourceFile>& files);

}  // namespace storyweave::dsl
