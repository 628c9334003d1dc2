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

#include <string>
#include <string_view>
#include <vector>

#include "storyweave/event.hpp"

namespace storyweave {

// How a scenario ended. `kCompleted` and `kDeadlock` both mean no event was
// enabled; a deadlock still had requested (but blocked) events.
enum class Terminal { kCompleted, kDeadlock, kDepthCapped };

std::string_view terminal_name(Terminal terminal);
Terminal parse_terminal(std::string_view text);

struct Scenario {
  std::vector<Event> events;
  Terminal terminal = Terminal::kCompleted;

  // {"events":[...],"terminal":"completed"}, canonical single line.
  Json to_json() const;
  std::string canonical() const;
  static Scenario from_json(const Json& json);

  std::vector<std::string> names() const;
  // Event display labels (name plus fields); the alphabet of coverage.
  std::vector<std::string> labels() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

}  // namespace storyweave
