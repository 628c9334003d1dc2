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
#include <variant>
#include <vector>

#include "storyweave/dsl/source.hpp"

namespace storyweave::dsl {

struct Literal {
  enum class Kind { kString, kInt, kIdent };

  Kind kind = Kind::kString;
  std::string text;        // kString and kIdent
  std::int64_t number = 0; // kInt

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct FieldExpr {
  std::string key;
  Literal value;
  Span span;

  friend bool operator==(const FieldExpr&, const FieldExpr&) = default;
};

// `name(key: value, ...)`; used for requests, patterns and templates.
struct EventExpr {
  std::string name;
  std::vector<FieldExpr> fields;
  Span span;

  friend bool operator==(const EventExpr&, const EventExpr&) = default;
};

struct Stmt;
using Block = std::vector<Stmt>;

struct RequestStmt {
  EventExpr event;
  friend bool operator==(const RequestStmt&, const RequestStmt&) = default;
};

struct WaitForStmt {
  std::vector<EventExpr> patterns;
  friend bool operator==(const WaitForStmt&, const WaitForStmt&) = default;
};

struct BlockUntilStmt {
  std::vector<EventExpr> blocked;
  EventExpr release;
  friend bool operator==(const BlockUntilStmt&, const BlockUntilStmt&) = default;
};

struct RepeatStmt {
  std::int64_t count = 1;
  Block body;
  friend bool operator==(const RepeatStmt&, const RepeatStmt&) = default;
};

struct ForeverStmt {
  Block body;
  friend bool operator==(const ForeverStmt&, const ForeverStmt&) = default;
};

struct ChooseStmt {
  std::vector<Block> branches;
  friend bool operator==(const ChooseStmt&, const ChooseStmt&) = default;
};

struct SessionStmt {
  std::string id;
  Block body;
  friend bool operator==(const SessionStmt&, const SessionStmt&) = default;
};

struct Stmt {
  std::variant<RequestStmt, WaitForStmt, BlockUntilStmt, RepeatStmt, ForeverStmt, ChooseStmt,
               SessionStmt>
      node;
  Span span;

  friend bool operator==(const Stmt&, const Stmt&) = default;
};

struct EventDef {
  std::string name;
  std::vector<std::string> params;
  std::vector<EventExpr> body;
  Span span;

  friend bool operator==(const EventDef&, const EventDef&) = default;
};

struct StoryDef {
  std::string name;
  Block body;
  Span span;

  friend bool operator==(const StoryDef&, const StoryDef&) = default;
};

struct HighLevelDecl {
  std::vector<std::string> names;
  Span span;

  friend bool operator==(const HighLevelDecl&, const HighLevelDecl&) = default;
};

struct ModelAst {
  std::vector<HighLevelDecl> highlevel;
  std::vector<EventDef> event_defs;
  std::vector<StoryDef> stories;

  friend bool operator==(const ModelAst&, const ModelAst&) = default;
};

}  // namespace storyweave::dsl
