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

#include "storyweave/engine/engine.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "storyweave/engine/random.hpp"
#include "storyweave/error.hpp"

namespace storyweave {
namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

}  // namespace

Configuration::Configuration(std::vector<ThreadState> threads) : threads_(std::move(threads)) {
  for (const auto& t : threads_) {
    put_u32(key_, t.story);
    put_u32(key_, t.pc);
    put_u32(key_, static_cast<std::uint32_t>(t.loop_counters.size()));
    for (auto c : t.loop_counters) put_u32(key_, c);
    put_u32(key_, t.block_register ? *t.block_register + 1 : 0);
  }
}

std::uint64_t Configuration::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : key_) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Event> enabled_events(const std::vector<SyncStatement>& statements) {
  std::vector<Event> requested;
  for (const auto& s : statements) {
    requested.insert(requested.end(), s.requested.begin(), s.requested.end());
  }
  canonicalize(requested);
  std::erase_if(requested, [&](const Event& e) {
    return std::any_of(statements.begin(), statements.end(),
                       [&](const SyncStatement& s) { return matches_any(s.blocked, e); });
  });
  return requested;
}

Engine::Engine(const dsl::CheckedModel& model) {
  dsl::CheckedModel expanded = dsl::expand_refinements(model);
  for (const auto& story : expanded.stories) programs_.push_back(compile_story(story));
}

Configuration Engine::init() const {
  std::vector<ThreadState> threads;
  for (std::uint32_t i = 0; i < programs_.size(); ++i) {
    ThreadState t;
    t.story = i;
    threads.push_back(settle(std::move(t)));
  }
  return Configuration(std::move(threads));
}

ThreadState Engine::settle(ThreadState state) const {
  const auto& code = programs_[state.story].code;
  state.block_register.reset();
  while (true) {
    const Instruction& ins = code[state.pc];
    switch (ins.op) {
      case OpCode::kLoopEnter:
        state.loop_counters.push_back(ins.count);
        ++state.pc;
        continue;
      case OpCode::kLoopNext:
        if (--state.loop_counters.back() > 0) {
          state.pc = ins.target;
        } else {
          state.loop_counters.pop_back();
          ++state.pc;
        }
        continue;
      case OpCode::kJump:
        state.pc = ins.target;
        continue;
      case OpCode::kBlockUntil:
        state.block_register = state.pc;
        return state;
      default:
        return state;
    }
  }
}

void Engine::alternatives(const ThreadState& state, std::vector<ThreadState>& out) const {
  const Instruction& ins = programs_[state.story].code[state.pc];
  if (ins.op != OpCode::kChoose) {
    out.push_back(state);
    return;
  }
  for (auto target : ins.targets) {
    ThreadState branch = state;
    branch.pc = target;
    alternatives(settle(std::move(branch)), out);
  }
}

SyncStatement Engine::leaf_statement(const ThreadState& state) const {
  const Instruction& ins = programs_[state.story].code[state.pc];
  SyncStatement s;
  switch (ins.op) {
    case OpCode::kRequest:
      s.requested.push_back(ins.event);
      break;
    case OpCode::kWaitFor:
      s.waited = ins.patterns;
      break;
    case OpCode::kBlockUntil:
      s.blocked = ins.patterns;
      s.waited.push_back(ins.release);
      break;
    default:
      break;
  }
  return s;
}

SyncStatement Engine::statement(const ThreadState& state) const {
  std::vector<ThreadState> alts;
  alternatives(state, alts);
  if (alts.size() == 1) return leaf_statement(alts.front());
  SyncStatement merged;
  for (const auto& alt : alts) {
    SyncStatement s = leaf_statement(alt);
    for (auto& e : s.requested) {
      if (std::find(merged.requested.begin(), merged.requested.end(), e) == merged.requested.end()) {
        merged.requested.push_back(std::move(e));
      }
    }
    merged.waited.insert(merged.waited.end(), s.waited.begin(), s.waited.end());
    merged.blocked.insert(merged.blocked.end(), s.blocked.begin(), s.blocked.end());
  }
  return merged;
}

std::vector<SyncStatement> Engine::sync_snapshot(const Configuration& config) const {
  std::vector<SyncStatement> out;
  out.reserve(config.threads().size());
  for (const auto& t : config.threads()) out.push_back(statement(t));
  return out;
}

bool Engine::has_pending_requests(const Configuration& config) const {
  for (const auto& s : sync_snapshot(config)) {
    if (!s.requested.empty()) return true;
  }
  return false;
}

bool Engine::responds(const ThreadState& leaf, const Event& event) const {
  const Instruction& ins = programs_[leaf.story].code[leaf.pc];
  switch (ins.op) {
    case OpCode::kRequest: return ins.event == event;
    case OpCode::kWaitFor: return matches_any(ins.patterns, event);
    case OpCode::kBlockUntil: return ins.release.matches(event);
    default: return false;
  }
}

std::optional<ThreadState> Engine::advance(const ThreadState& state, const Event& event) const {
  std::vector<ThreadState> alts;
  alternatives(state, alts);
  for (const auto& alt : alts) {
    if (responds(alt, event)) {
      ThreadState next = alt;
      ++next.pc;
      return settle(std::move(next));
    }
  }
  return std::nullopt;
}

Configuration Engine::step_unchecked(const Configuration& config, const Event& event) const {
  std::vector<ThreadState> next;
  next.reserve(config.threads().size());
  for (const auto& t : config.threads()) {
    auto moved = advance(t, event);
    next.push_back(moved ? std::move(*moved) : t);
  }
  return Configuration(std::move(next));
}

Configuration Engine::step(const Configuration& config, const Event& event) const {
  auto enabled_now = enabled(config);
  if (std::find(enabled_now.begin(), enabled_now.end(), event) == enabled_now.end()) {
    throw Error(ErrorCode::kNotEnabled, "event " + event.display() + " is not enabled");
  }
  return step_unchecked(config, event);
}

Scenario Engine::run(const Strategy& strategy, std::optional<std::size_t> max_depth) const {
  Pcg32 rng(strategy.seed);
  Scenario scenario;
  Configuration config = init();
  while (true) {
    auto statements = sync_snapshot(config);
    auto choices = enabled_events(statements);
    if (choices.empty()) {
      bool pending = std::any_of(statements.begin(), statements.end(),
                                 [](const SyncStatement& s) { return !s.requested.empty(); });
      scenario.terminal = pending ? Terminal::kDeadlock : Terminal::kCompleted;
      return scenario;
    }
    if (max_depth && scenario.events.size() >= *max_depth) {
      scenario.terminal = Terminal::kDepthCapped;
      return scenario;
    }
    std::size_t index = 0;
    if (strategy.kind == SelectionKind::kSeededRandom) index = rng.below(static_cast<std::uint32_t>(choices.size()));
    config = step_unchecked(config, choices[index]);
    scenario.events.push_back(std::move(choices[index]));
  }
}

std::set<std::string> Engine::contributing_stories(const Scenario& scenario) const {
  std::set<std::string> out;
  Configuration config = init();
  for (std::size_t i = 0; i < scenario.events.size(); ++i) {
    const Event& event = scenario.events[i];
    auto statements = sync_snapshot(config);
    auto choices = enabled_events(statements);
    if (std::find(choices.begin(), choices.end(), event) == choices.end()) {
      throw Error(ErrorCode::kReplayMismatch,
                  "event #" + std::to_string(i + 1) + " " + event.display() + " is not enabled");
    }
    for (std::size_t t = 0; t < statements.size(); ++t) {
      const auto& req = statements[t].requested;
      if (std::find(req.begin(), req.end(), event) != req.end()) out.insert(programs_[t].story);
    }
    config = step_unchecked(config, event);
  }
  return out;
}

}  // namespace storyweave
