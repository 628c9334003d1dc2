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
#include <vector>

#include "storyweave/dsl/checker.hpp"
#include "storyweave/engine/program.hpp"
#include "storyweave/engine/scenario.hpp"
#include "storyweave/event.hpp"

namespace storyweave {

// One thread's declaration at a sync point.
struct SyncStatement {
  std::vector<Event> requested;
  std::vector<EventPattern> waited;
  std::vector<EventPattern> blocked;

  bool empty() const { return requested.empty() && waited.empty() && blocked.empty(); }
};

// State of one story's step machine, always parked at a sync instruction
// (request, waitFor, block-until, choose) or at the end.
struct ThreadState {
  std::uint32_t story = 0;
  std::uint32_t pc = 0;
  std::vector<std::uint32_t> loop_counters;  // innermost last
  // Index of the active block-until instruction, if any.
  std::optional<std::uint32_t> block_register;

  friend bool operator==(const ThreadState&, const ThreadState&) = default;
};

class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<ThreadState> threads);

  const std::vector<ThreadState>& threads() const { return threads_; }
  // Injective byte encoding; equal keys mean equal configurations.
  const std::string& key() const { return key_; }
  std::uint64_t hash() const;

  friend bool operator==(const Configuration& a, const Configuration& b) { return a.key_ == b.key_; }

 private:
  std::vector<ThreadState> threads_;
  std::string key_;
};

// Deduplicated union of requests minus anything matched by a blocked
// pattern, in canonical-encoding order.
std::vector<Event> enabled_events(const std::vector<SyncStatement>& statements);

enum class SelectionKind { kFirst, kSeededRandom };

struct Strategy {
  SelectionKind kind = SelectionKind::kFirst;
  std::uint64_t seed = 0;

  static Strategy first() { return {}; }
  static Strategy seeded(std::uint64_t seed) { return {SelectionKind::kSeededRandom, seed}; }
};

// Executes a checked model as one step machine per story under the
// request/wait/block synchronization cycle.
class Engine {
 public:
  explicit Engine(const dsl::CheckedModel& model);

  std::size_t thread_count() const { return programs_.size(); }
  const std::vector<Program>& programs() const { return programs_; }

  Configuration init() const;
  std::vector<SyncStatement> sync_snapshot(const Configuration& config) const;
  std::vector<Event> enabled(const Configuration& config) const {
    return enabled_events(sync_snapshot(config));
  }
  // True when some thread still requests an event.
  bool has_pending_requests(const Configuration& config) const;

  // Throws Error(kNotEnabled) when `event` is not selectable in `config`.
  Configuration step(const Configuration& config, const Event& event) const;
  // Same as step() without the enabledness check; callers guarantee it.
  Configuration step_unchecked(const Configuration& config, const Event& event) const;

  // Repeats select+step until no event is enabled or `max_depth` events
  // have been selected.
  Scenario run(const Strategy& strategy, std::optional<std::size_t> max_depth) const;

  // Names of the stories that requested at least one event of `scenario`.
  // Throws Error(kReplayMismatch) when the scenario is not a legal run prefix.
  std::set<std::string> contributing_stories(const Scenario& scenario) const;

 private:
  ThreadState settle(ThreadState state) const;
  void alternatives(const ThreadState& state, std::vector<ThreadState>& out) const;
  SyncStatement leaf_statement(const ThreadState& state) const;
  SyncStatement statement(const ThreadState& state) const;
  bool responds(const ThreadState& leaf, const Event& event) const;
  std::optional<ThreadState> advance(const ThreadState& state, const Event& event) const;

  std::vector<Program> programs_;
};

inline Configuration init(const Engine& engine) { return engine.init(); }

}  // namespace storyweave
