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

#include "storyweave/engine/program.hpp"

#include <utility>

namespace storyweave {
namespace {

class Compiler {
 public:
  Program run(const dsl::CheckedStory& story) {
    program_.story = story.name;
    block(story.body);
    emit(Instruction{});
    return std::move(program_);
  }

 private:
  std::uint32_t here() const { return static_cast<std::uint32_t>(program_.code.size()); }

  std::uint32_t emit(Instruction ins) {
    program_.code.push_back(std::move(ins));
    return here() - 1;
  }

  void block(const dsl::CheckedBlock& body) {
    for (const auto& stmt : body) std::visit([this](const auto& n) { node(n); }, stmt.node);
  }

  void node(const dsl::Request& r) {
    Instruction ins;
    ins.op = OpCode::kRequest;
    ins.event = r.event;
    emit(std::move(ins));
  }

  void node(const dsl::Refinement& r) {
    for (const auto& ev : r.expansion) node(dsl::Request{ev});
  }

  void node(const dsl::WaitFor& w) {
    Instruction ins;
    ins.op = OpCode::kWaitFor;
    ins.patterns = w.patterns;
    emit(std::move(ins));
  }

  void node(const dsl::BlockUntil& b) {
    Instruction ins;
    ins.op = OpCode::kBlockUntil;
    ins.patterns = b.blocked;
    ins.release = b.release;
    emit(std::move(ins));
  }

  void node(const dsl::Repeat& r) {
    // A body without sync statements has no observable effect.
    if (dsl::can_skip(r.body)) return;
    Instruction enter;
    enter.op = OpCode::kLoopEnter;
    enter.count = r.count;
    emit(std::move(enter));
    std::uint32_t start = here();
    block(r.body);
    Instruction next;
    next.op = OpCode::kLoopNext;
    next.target = start;
    emit(std::move(next));
  }

  void node(const dsl::Forever& f) {
    std::uint32_t start = here();
    block(f.body);
    Instruction jump;
    jump.op = OpCode::kJump;
    jump.target = start;
    emit(std::move(jump));
  }

  void node(const dsl::Choose& c) {
    Instruction choose;
    choose.op = OpCode::kChoose;
    std::uint32_t at = emit(std::move(choose));
    std::vector<std::uint32_t> exits;
    for (const auto& branch : c.branches) {
      program_.code[at].targets.push_back(here());
      block(branch);
      Instruction jump;
      jump.op = OpCode::kJump;
      exits.push_back(emit(std::move(jump)));
    }
    for (auto j : exits) program_.code[j].target = here();
  }

  Program program_;
};

}  // namespace

Program compile_story(const dsl::CheckedStory& story) { return Compiler().run(story); }

}  // namespace storyweave
