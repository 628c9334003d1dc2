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

#include "storyweave/engine/scenario.hpp"

#include "storyweave/error.hpp"

namespace storyweave {

std::string_view terminal_name(Terminal terminal) {
  switch (terminal) {
    case Terminal::kCompleted: return "completed";
    case Terminal::kDeadlock: return "deadlock";
    case Terminal::kDepthCapped: return "depth-capped";
  }
  return "completed";
}

Terminal parse_terminal(std::string_view text) {
  if (text == "completed") return Terminal::kCompleted;
  if (text == "deadlock") return Terminal::kDeadlock;
  if (text == "depth-capped") return Terminal::kDepthCapped;
  throw Error(ErrorCode::kFormat, "unknown terminal flag \"" + std::string(text) + "\"");
}

Json Scenario::to_json() const {
  Json evs = Json::array();
  for (const auto& e : events) evs.push_back(e.to_json());
  return Json{{"events", std::move(evs)}, {"terminal", terminal_name(terminal)}};
}

std::string Scenario::canonical() const {
  return to_json().dump(-1, ' ', false, Json::error_handler_t::replace);
}

Scenario Scenario::from_json(const Json& json) {
  if (!json.is_object() || !json.contains("events") || !json["events"].is_array()) {
    throw Error(ErrorCode::kFormat, "scenario record needs an \"events\" array");
  }
  Scenario s;
  for (const auto& e : json["events"]) s.events.push_back(Event::from_json(e));
  if (json.contains("terminal")) {
    if (!json["terminal"].is_string()) throw Error(ErrorCode::kFormat, "\"terminal\" must be a string");
    s.terminal = parse_terminal(json["terminal"].get<std::string>());
  }
  return s;
}

std::vector<std::string> Scenario::names() const {
  std::vector<std::string> out;
  out.reserve(events.size());
  for (const auto& e : events) out.push_back(e.name);
  return out;
}

std::vector<std::string> Scenario::labels() const {
  std::vector<std::string> out;
  out.reserve(events.size());
  for (const auto& e : events) out.push_back(e.display());
  return out;
}

}  // namespace storyweave
