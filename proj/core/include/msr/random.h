// Copyright 2026 The MSR Ranking Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSR_RANDOM_H_
#define MSR_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace msr {

using Rng = std::mt19937_64;

// Counter-based seed splitting: the child seed depends only on (seed, label,
// index), so adding a new consumer never shifts another consumer's draws.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view label,
                         std::uint64_t index = 0);

inline Rng MakeRng(std::uint64_t seed, std::string_view label,
                   std::uint64_t index = 0) {
  return Rng(DeriveSeed(seed, label, index));
}

// Uniform integer in [lo, hi]. Implemented without std::uniform_int_distribution
// so that draws are identical across standard library implementations.
std::int64_t UniformInt(Rng& rng, std::int64_t lo, std::int64_t hi);

// Uniform real in [0, 1).
double UniformReal(Rng& rng);

}  // namespace msr

#endif  // MSR_RANDOM_H_
