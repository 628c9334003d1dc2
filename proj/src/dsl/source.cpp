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

#include "storyweave/dsl/source.hpp"

#include <algorithm>

namespace storyweave::dsl {

LineIndex::LineIndex(std::string_view content) {
  line_starts_.push_back(0);
  for (std::uint32_t i = 0; i < content.size(); ++i) {
    if (content[i] == '\n') line_starts_.push_back(i + 1);
  }
}

Span LineIndex::span_at(std::uint32_t file, std::uint32_t offset, std::uint32_t length) const {
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  auto line = static_cast<std::uint32_t>(it - line_starts_.begin());
  std::uint32_t column = offset - line_starts_[line - 1] + 1;
  return Span{file, offset, length, line, column};
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

std::string format_diagnostic(const Diagnostic& d, const std::vector<SourceFile>& files) {
  std::string path = d.span.file < files.size() ? files[d.span.file].path : "<input>";
  return path + ":" + std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": " +
         (d.severity == Severity::kError ? "error" : "warning") + "[" + d.code + "]: " + d.message;
}

}  // namespace storyweave::dsl
