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

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "storyweave/engine/scenario.hpp"
#include "storyweave/runner/adapter.hpp"

namespace storyweave {

struct EventOutcome {
  Event event;
  OutcomeStatus status = OutcomeStatus::kPass;
  double duration_ms = 0.0;
  std::string detail;
};

struct RunResult {
  Scenario scenario;
  std::vector<EventOutcome> outcomes;
  OutcomeStatus overall = OutcomeStatus::kPass;  // never kSkipped
  std::set<std::string> tags;
};

struct ExecuteOptions {
  bool stop_on_failure = true;
  std::size_t workers = 1;
};

// Dispatches events in order. With stop_on_failure the events after the
// first fail/error are recorded as skipped. Overall is the status of the
// first non-passing event, or pass.
RunResult execute(const Scenario& scenario, const Adapter& adapter,
                  const ExecuteOptions& options = {});

using Tagger = std::function<std::set<std::string>(const Scenario&)>;

// Runs scenarios on up to `options.workers` threads; results keep input order.
std::vector<RunResult> execute_all(const std::vector<Scenario>& scenarios, const Adapter& adapter,
                                   const ExecuteOptions& options, const Tagger& tagger);

}  // namespace storyweave
