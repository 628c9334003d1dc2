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

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "storyweave/event.hpp"

namespace storyweave {

enum class AdapterKind { kMock, kExec, kHttp };

enum class OutcomeStatus { kPass, kFail, kError, kSkipped };

std::string_view status_name(OutcomeStatus status);
AdapterKind parse_adapter_kind(std::string_view name);
std::string_view adapter_kind_name(AdapterKind kind);

struct MockSettings {
  // Verdict per event name (pass, fail or error); unlisted names pass.
  std::map<std::string, OutcomeStatus> verdicts;
};

struct ExecSettings {
  std::string command;  // executable path or PATH-resolved name
  double timeout_seconds = 30.0;
};

struct HttpSettings {
  std::string base_url;  // http://host[:port][/prefix]
  double timeout_seconds = 10.0;
  int status_min = 200;
  int status_max = 299;
};

struct AdapterSettings {
  AdapterKind kind = AdapterKind::kMock;
  MockSettings mock;
  ExecSettings exec;
  HttpSettings http;
};

struct Dispatch {
  OutcomeStatus status = OutcomeStatus::kPass;
  std::string detail;
};

// Delivers one event to the system under test. Implementations are safe to
// call from several threads at once.
class Adapter {
 public:
  virtual ~Adapter() = default;
  virtual AdapterKind kind() const = 0;
  virtual Dispatch dispatch(const Event& event) const = 0;
};

// Validates settings before any dispatch; throws Error(kAdapterMisconfigured).
std::unique_ptr<Adapter> make_adapter(const AdapterSettings& settings);

}  // namespace storyweave
