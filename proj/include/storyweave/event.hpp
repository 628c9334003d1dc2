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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace storyweave {

using Json = nlohmann::json;

// Field values are restricted to strings and integers.
using FieldValue = std::variant<std::int64_t, std::string>;
using FieldMap = std::map<std::string, FieldValue>;

inline constexpr const char* kSessionField = "session";

std::string field_value_text(const FieldValue& value);

// A concrete occurrence. The session tag, when present, lives in `fields`
// under "session".
struct Event {
  std::string name;
  FieldMap fields;

  std::optional<std::string> session() const;

  // {"fields":{...},"name":...,"session":...} with sorted keys and no
  // whitespace; "session" is lifted out of `fields` when it is a string.
  Json to_json() const;
  static Event from_json(const Json& json);

  std::string canonical() const;
  // Short human-readable form, e.g. push(color=green).
  std::string display() const;

  friend bool operator==(const Event&, const Event&) = default;
};

// Total order consistent with canonical-encoding byte order.
bool canonical_less(const Event& a, const Event& b);

// Sorts by canonical encoding and drops duplicates.
void canonicalize(std::vector<Event>& events);

struct EventPattern {
  std::string name;
  FieldMap constraints;

  bool matches(const Event& event) const;
  std::string display() const;
  Json to_json() const;

  friend bool operator==(const EventPattern&, const EventPattern&) = default;
};

bool matches_any(const std::vector<EventPattern>& patterns, const Event& event);

}  // namespace storyweave
