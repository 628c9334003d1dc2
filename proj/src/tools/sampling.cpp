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

#include "storyweave/tools/sampling.hpp"

#include "storyweave/engine/random.hpp"

namespace storyweave {

std::vector<Scenario> sample_walk(const Engine& engine, std::size_t n, std::uint64_t seed,
                                  std::optional<std::size_t> max_depth) {
  std::vector<Scenario> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(engine.run(Strategy::seeded(splitmix64(seed + i)), max_depth));
  }
  return out;
}

}  // namespace storyweave
