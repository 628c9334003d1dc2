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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "storyweave/engine/engine.hpp"

namespace storyweave {

// n independent seeded-random runs; run i uses seed splitmix64(seed + i).
// Works on cyclic models since every run is capped at `max_depth`.
std::vector<Scenario> sample_walk(const Engine& engine, std::size_t n, std::uint64_t seed,
                                  std::optional<std::size_t> max_depth);

}  // namespace storyweave
