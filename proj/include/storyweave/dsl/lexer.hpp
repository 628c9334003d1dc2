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

#include "storyweave/dsl/source.hpp"

namespace storyweave::dsl {

enum class TokenKind {
  kIdent,
  kString,
  kInt,
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kColon,
  kEquals,
  // keywords
  kEvent,
  kStory,
  kHighlevel,
  kRequest,
  kWaitFor,
  kBlock,
  kUntil,
  kRepeat,
  kForever,
  kChoose,
  kOr,
  kSession,
  kEof,
};

std::string_view token_kind_name(TokenKind kind);
bool is_keyword(TokenKind kind);
// Returns kIdent when `word` is not reserved.
TokenKind keyword_kind(std::string_view word);

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string text;        // identifier/keyword spelling or decoded string
  std::int64_t value = 0;  // kInt only
  Span span;
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by kEof
  std::vector<Diagnostic> diagnostics;
};

LexResult lex(std::string_view content, std::uint32_t file = 0);

}  // namespace storyweave::dsl
