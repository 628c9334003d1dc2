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

#include "storyweave/runner/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "storyweave/error.hpp"

namespace storyweave {

Interval wilson95(std::uint64_t k, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "wilson95 needs at least one run");
  if (k > n) {
    throw Error(ErrorCode::kDomain,
                "failures (" + std::to_string(k) + ") exceed runs (" + std::to_string(n) + ")");
  }
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = (kZ95 / denom) * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  Interval out{std::clamp(center - half, 0.0, 1.0), std::clamp(center + half, 0.0, 1.0)};
  // Keep the estimate inside its own interval despite rounding at k=0 / k=n.
  out.lo = std::min(out.lo, p);
  out.hi = std::max(out.hi, p);
  return out;
}

}  // namespace storyweave
