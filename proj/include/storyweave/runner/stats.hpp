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

namespace storyweave {

inline constexpr double kZ95 = 1.959964;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Wilson score interval for k failures in n runs at 95% confidence, clamped
// to [0, 1]. Throws Error(kDomain) unless 0 <= k <= n and n >= 1.
Interval wilson95(std::uint64_t k, std::uint64_t n);

}  // namespace storyweave
