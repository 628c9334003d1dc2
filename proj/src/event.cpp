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

#include "storyweave/event.hpp"

#include <algorithm>

#include "storyweave/error.hpp"

namespace storyweave {
namespace {

Json value_json(const FieldValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return *i;
  return std::get<std::string>(value);
}

std::string fields_display(const std::string& name, const FieldMap& fields) {
  if (fields.empty()) return name;
  std::string out = name + "(";
  bool first = true;
  for (const auto& [key, value] : fields) {
    if (!first) out += ", ";
    first = false;
    out += key + "=" + field_value_text(value);
  }
  return out + ")";
}

}  // namespace

std::string field_value_text(const FieldValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  return std::get<std::string>(value);
}

std::optional<std::string> Event::session() const {
  auto it = fields.find(kSessionField);
  if (it == fields.end()) return std::nullopt;
  if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
  return std::nullopt;
}

Json Event::to_json() const {
  Json out = Json::object();
  Json field_json = Json::object();
  for (const auto& [key, value] : fields) {
    if (key == kSessionField && std::holds_alternative<std::string>(value)) {
      out[kSessionField] = std::get<std::string>(value);
    } else {
      field_json[key] = value_json(value);
    }
  }
  out["fields"] = std::move(field_json);
  out["name"] = name;
  return out;
}

Event Event::from_json(const Json& json) {
  if (!json.is_object() || !json.contains("name") || !json["name"].is_string()) {
    throw Error(ErrorCode::kFormat, "event record needs a string \"name\"");
  }
  Event event;
  event.name = json["name"].get<std::string>();
  if (json.contains("fields")) {
    const Json& fields = json["fields"];
    if (!fields.is_object()) throw Error(ErrorCode::kFormat, "event \"fields\" must be an object");
    for (const auto& [key, value] : fields.items()) {
      if (value.is_number_integer()) {
        event.fields[key] = value.get<std::int64_t>();
      } else if (value.is_string()) {
        event.fields[key] = value.get<std::string>();
      } else {
        throw Error(ErrorCode::kFormat, "field \"" + key + "\" must be a string or integer");
      }
    }
  }
  if (json.contains(kSessionField)) {
    if (!json[kSessionField].is_string()) {
      throw Error(ErrorCode::kFormat, "event \"session\" must be a string");
    }
    event.fields[kSessionField] = json[kSessionField].get<std::string>();
  }
  return event;
}

std::string Event::canonical() const {
  return to_json().dump(-1, ' ', false, Json::error_handler_t::replace);
}

std::string Event::display() const { return fields_display(name, fields); }

bool canonical_less(const Event& a, const Event& b) { return a.canonical() < b.canonical(); }

void canonicalize(std::vector<Event>& events) {
  std::vector<std::pair<std::string, Event>> keyed;
  keyed.reserve(events.size());
  for (auto& e : events) keyed.emplace_back(e.canonical(), std::move(e));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  events.clear();
  for (auto& [key, e] : keyed) events.push_back(std::move(e));
}

bool EventPattern::matches(const Event& event) const {
  if (name != event.name) return false;
  for (const auto& [key, value] : constraints) {
    auto it = event.fields.find(key);
    if (it == event.fields.end() || it->second != value) return false;
  }
  return true;
}

std::string EventPattern::display() const { return fields_display(name, constraints); }

Json EventPattern::to_json() const {
  Json constraint_json = Json::object();
  for (const auto& [key, value] : constraints) constraint_json[key] = value_json(value);
  return Json{{"constraints", std::move(constraint_json)}, {"name", name}};
}

bool matches_any(const std::vector<EventPattern>& patterns, const Event& event) {
  return std::any_of(patterns.begin(), patterns.end(),
                     [&](const EventPattern& p) { return p.matches(event); });
}

}  // namespace storyweave
