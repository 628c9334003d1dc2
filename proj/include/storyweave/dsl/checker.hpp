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
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "storyweave/dsl/ast.hpp"
#include "storyweave/dsl/source.hpp"
#include "storyweave/event.hpp"

namespace storyweave::dsl {

struct CheckedStmt;
using CheckedBlock = std::vector<CheckedStmt>;

struct Request {
  Event event;
  friend bool operator==(const Request&, const Request&) = default;
};

// A resolved high-level request that has not been macro-expanded yet.
struct Refinement {
  std::string name;
  std::vector<Event> expansion;
  friend bool operator==(const Refinement&, const Refinement&) = default;
};

struct WaitFor {
  std::vector<EventPattern> patterns;
  friend bool operator==(const WaitFor&, const WaitFor&) = default;
};

struct BlockUntil {
  std::vector<EventPattern> blocked;
  EventPattern release;
  friend bool operator==(const BlockUntil&, const BlockUntil&) = default;
};

struct Repeat {
  std::uint32_t count = 1;
  CheckedBlock body;
  friend bool operator==(const Repeat&, const Repeat&) = default;
};

struct Forever {
  CheckedBlock body;
  friend bool operator==(const Forever&, const Forever&) = default;
};

struct Choose {
  std::vector<CheckedBlock> branches;
  friend bool operator==(const Choose&, const Choose&) = default;
};

struct CheckedStmt {
  std::variant<Request, Refinement, WaitFor, BlockUntil, Repeat, Forever, Choose> node;
  friend bool operator==(const CheckedStmt&, const CheckedStmt&) = default;
};

struct CheckedStory {
  std::string name;
  CheckedBlock body;
  friend bool operator==(const CheckedStory&, const CheckedStory&) = default;
};

// Low-level model: session blocks are flattened into `session` fields and,
// after expand_refinements, no Refinement nodes remain.
struct CheckedModel {
  std::vector<CheckedStory> stories;
  // Names of every requested low-level event.
  std::set<std::string> vocabulary;

  Json to_json() const;
  std::string serialize() const;

  friend bool operator==(const CheckedModel&, const CheckedModel&) = default;
};

struct CheckResult {
  std::optional<CheckedModel> model;  // set iff no error diagnostics
  std::vector<Diagnostic> diagnostics;
};

// Resolves names, checks arity, attaches session tags and expands
// refinements.
CheckResult check(const ModelAst& ast);

// Replaces every Refinement by its low-level requests, in order. Idempotent.
CheckedModel expand_refinements(const CheckedModel& model);

// True when `block` can run to completion without reaching a sync point.
bool can_skip(const CheckedBlock& block);

}  // namespace storyweave::dsl
