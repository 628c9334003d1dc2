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

#include "storyweave/error.hpp"

namespace storyweave {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotEnabled: return "not-enabled";
    case ErrorCode::kCyclicGraph: return "cyclic-graph";
    case ErrorCode::kTruncatedGraph: return "truncated-graph";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
    case ErrorCode::kNoCompleteRuns: return "no-complete-runs";
    case ErrorCode::kReplayMismatch: return "replay-mismatch";
    case ErrorCode::kUnsupportedCriterion: return "unsupported-criterion";
    case ErrorCode::kRendererNotFound: return "renderer-not-found";
    case ErrorCode::kRendererFailed: return "renderer-failed";
    case ErrorCode::kAdapterMisconfigured: return "adapter-misconfigured";
    case ErrorCode::kDomain: return "domain-error";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kIo: return "io-error";
    case ErrorCode::kFormat: return "format-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace storyweave
