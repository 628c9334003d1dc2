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

#include "storyweave/runner/adapter.hpp"

#include <chrono>
#include <cmath>

#include "httplib.h"
#include "storyweave/error.hpp"
#include "storyweave/runner/process.hpp"

namespace storyweave {
namespace {

class MockAdapter : public Adapter {
 public:
  explicit MockAdapter(MockSettings settings) : settings_(std::move(settings)) {}
  AdapterKind kind() const override { return AdapterKind::kMock; }

  Dispatch dispatch(const Event& event) const override {
    auto it = settings_.verdicts.find(event.name);
    if (it == settings_.verdicts.end() || it->second == OutcomeStatus::kPass) return {};
    return Dispatch{it->second, "mock verdict"};
  }

 private:
  MockSettings settings_;
};

class ExecAdapter : public Adapter {
 public:
  ExecAdapter(std::filesystem::path program, double timeout_seconds)
      : program_(std::move(program)), timeout_seconds_(timeout_seconds) {}
  AdapterKind kind() const override { return AdapterKind::kExec; }

  Dispatch dispatch(const Event& event) const override {
    ProcessRequest req;
    req.argv = {program_.string(), event.name};
    for (const auto& [key, value] : event.fields) {
      req.extra_env.push_back(key + "=" + field_value_text(value));
    }
    req.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_seconds_ * 1000.0));
    ProcessResult res = run_process(req);
    if (res.spawn_failed) return Dispatch{OutcomeStatus::kError, res.stderr_text};
    if (res.timed_out) {
      return Dispatch{OutcomeStatus::kError, "timed out after " + std::to_string(timeout_seconds_) + "s"};
    }
    if (res.exit_code != 0) {
      std::string detail = "exit " + std::to_string(res.exit_code);
      if (!res.stderr_text.empty()) detail += ": " + res.stderr_text;
      return Dispatch{OutcomeStatus::kFail, detail};
    }
    return {};
  }

 private:
  std::filesystem::path program_;
  double timeout_seconds_;
};

class HttpAdapter : public Adapter {
 public:
  HttpAdapter(std::string origin, std::string prefix, HttpSettings settings)
      : origin_(std::move(origin)), path_(std::move(prefix) + "/events"), settings_(std::move(settings)) {}
  AdapterKind kind() const override { return AdapterKind::kHttp; }

  Dispatch dispatch(const Event& event) const override {
    httplib::Client client(origin_);
    auto seconds = static_cast<time_t>(settings_.timeout_seconds);
    auto micros = static_cast<time_t>((settings_.timeout_seconds - static_cast<double>(seconds)) * 1e6);
    client.set_connection_timeout(seconds, micros);
    client.set_read_timeout(seconds, micros);
    client.set_write_timeout(seconds, micros);
    auto res = client.Post(path_, event.canonical(), "application/json");
    if (!res) {
      return Dispatch{OutcomeStatus::kError, "transport error: " + httplib::to_string(res.error())};
    }
    if (res->status < settings_.status_min || res->status > settings_.status_max) {
      return Dispatch{OutcomeStatus::kFail, std::to_string(res->status)};
    }
    return Dispatch{OutcomeStatus::kPass, std::to_string(res->status)};
  }

 private:
  std::string origin_;
  std::string path_;
  HttpSettings settings_;
};

void require_timeout(double seconds, std::string_view kind) {
  if (!(seconds > 0.0) || !std::isfinite(seconds)) {
    throw Error(ErrorCode::kAdapterMisconfigured,
                std::string(kind) + " adapter timeout must be positive");
  }
}

}  // namespace

std::string_view status_name(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::kPass: return "pass";
    case OutcomeStatus::kFail: return "fail";
    case OutcomeStatus::kError: return "error";
    case OutcomeStatus::kSkipped: return "skipped";
  }
  return "pass";
}

AdapterKind parse_adapter_kind(std::string_view name) {
  if (name == "mock") return AdapterKind::kMock;
  if (name == "exec") return AdapterKind::kExec;
  if (name == "http") return AdapterKind::kHttp;
  throw Error(ErrorCode::kAdapterMisconfigured,
              "unknown adapter '" + std::string(name) + "'; expected mock, exec or http");
}

std::string_view adapter_kind_name(AdapterKind kind) {
  switch (kind) {
    case AdapterKind::kMock: return "mock";
    case AdapterKind::kExec: return "exec";
    case AdapterKind::kHttp: return "http";
  }
  return "mock";
}

std::unique_ptr<Adapter> make_adapter(const AdapterSettings& settings) {
  switch (settings.kind) {
    case AdapterKind::kMock:
      for (const auto& [name, verdict] : settings.mock.verdicts) {
        if (verdict == OutcomeStatus::kSkipped) {
          throw Error(ErrorCode::kAdapterMisconfigured,
                      "mock verdict for '" + name + "' must be pass, fail or error");
        }
      }
      return std::make_unique<MockAdapter>(settings.mock);
    case AdapterKind::kExec: {
      require_timeout(settings.exec.timeout_seconds, "exec");
      if (settings.exec.command.empty()) {
        throw Error(ErrorCode::kAdapterMisconfigured, "exec adapter needs a command");
      }
      auto program = find_executable(settings.exec.command);
      if (!program) {
        throw Error(ErrorCode::kAdapterMisconfigured,
                    "exec adapter command '" + settings.exec.command + "' is not an executable");
      }
      return std::make_unique<ExecAdapter>(*program, settings.exec.timeout_seconds);
    }
    case AdapterKind::kHttp: {
      require_timeout(settings.http.timeout_seconds, "http");
      const std::string& url = settings.http.base_url;
      constexpr std::string_view scheme = "http://";
      if (url.rfind(scheme, 0) != 0 || url.size() == scheme.size()) {
        throw Error(ErrorCode::kAdapterMisconfigured,
                    "http adapter base URL must look like http://host[:port][/prefix]");
      }
      if (settings.http.status_min > settings.http.status_max) {
        throw Error(ErrorCode::kAdapterMisconfigured, "http status range is empty");
      }
      auto slash = url.find('/', scheme.size());
      std::string origin = url.substr(0, slash);
      std::string prefix = slash == std::string::npos ? "" : url.substr(slash);
      while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
      return std::make_unique<HttpAdapter>(std::move(origin), std::move(prefix), settings.http);
    }
  }
  throw Error(ErrorCode::kAdapterMisconfigured, "unknown adapter kind");
}

}  // namespace storyweave
