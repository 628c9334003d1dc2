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

#include "storyweave/runner/execute.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace storyweave {

RunResult execute(const Scenario& scenario, const Adapter& adapter, const ExecuteOptions& options) {
  RunResult result;
  result.scenario = scenario;
  bool stopped = false;
  for (const auto& event : scenario.events) {
    EventOutcome outcome;
    outcome.event = event;
    if (stopped) {
      outcome.status = OutcomeStatus::kSkipped;
      result.outcomes.push_back(std::move(outcome));
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    Dispatch d = adapter.dispatch(event);
    if (adapter.kind() != AdapterKind::kMock) {
      outcome.duration_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    outcome.status = d.status;
    outcome.detail = std::move(d.detail);
    if (outcome.status != OutcomeStatus::kPass) {
      if (result.overall == OutcomeStatus::kPass) result.overall = outcome.status;
      if (options.stop_on_failure) stopped = true;
    }
    result.outcomes.push_back(std::move(outcome));
  }
  return result;
}

std::vector<RunResult> execute_all(const std::vector<Scenario>& scenarios, const Adapter& adapter,
                                   const ExecuteOptions& options, const Tagger& tagger) {
  std::vector<RunResult> results(scenarios.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < scenarios.size(); i = next++) {
      results[i] = execute(scenarios[i], adapter, options);
      if (tagger) results[i].tags = tagger(scenarios[i]);
    }
  };
  std::size_t count = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(1, scenarios.size()));
  if (count == 1) {
    worker();
    return results;
  }
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < count; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return results;
}

}  // namespace storyweave
