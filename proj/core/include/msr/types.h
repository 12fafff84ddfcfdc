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

#ifndef MSR_TYPES_H_
#define MSR_TYPES_H_

#include <compare>
#include <cstdint>
#include <functional>

namespace msr {

// Index of an item in the universe [0, n). The value n itself is the dummy
// sentinel meaning "nothing placed"; every oracle gives it zero gain.
using ItemId = std::int32_t;

// 1-based position in a ranking.
using Rank = std::int32_t;

// Absolute tolerance for comparing objective values.
inline constexpr double kTolerance = 1e-9;

// An (item, rank) pair: one element of the lifted universe items x ranks.
struct ExtendedElement {
  ItemId item = 0;
  Rank rank = 1;

  friend auto operator<=>(const ExtendedElement&,
                          const ExtendedElement&) = default;
};

}  // namespace msr

template <>
struct std::hash<msr::ExtendedElement> {
  std::size_t operator()(const msr::ExtendedElement& e) const noexcept {
    return std::hash<std::int64_t>()(
        (static_cast<std::int64_t>(e.item) << 32) ^
        static_cast<std::uint32_t>(e.rank));
  }
};

#endif  // MSR_TYPES_H_
