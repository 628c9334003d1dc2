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
#include <vector>

#include "storyweave/dsl/checker.hpp"
#include "storyweave/event.hpp"

namespace storyweave {

enum class OpCode : std::uint8_t {
  kRequest,
  kWaitFor,
  kBlockUntil,
  kLoopEnter,  // push `count`
  kLoopNext,   // decrement top; jump to `target` while nonzero, else pop
  kJump,
  kChoose,     // branch entry points in `targets`
  kEnd,
};

struct Instruction {
  OpCode op = OpCode::kEnd;
  Event event;                          // kRequest
  std::vector<EventPattern> patterns;   // kWaitFor, kBlockUntil (blocked)
  EventPattern release;                 // kBlockUntil
  std::uint32_t count = 0;              // kLoopEnter
  std::uint32_t target = 0;             // kLoopNext, kJump
  std::vector<std::uint32_t> targets;   // kChoose
};

// A story compiled to a flat step machine; always terminated by kEnd.
struct Program {
  std::string story;
  std::vector<Instruction> code;
};

// Expects a model without Refinement nodes (see dsl::expand_refinements).
Program compile_story(const dsl::CheckedStory& story);

}  // namespace storyweave
