// Copyright 2026 The CCCP Authors
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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

namespace cccp {

/// Largest supported combination strength.
inline constexpr unsigned kMaxStrength = 4;

/// C(n, k), saturating at the maximum of std::uint64_t.
constexpr std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    // result * num / i is exact at every step; guard the multiplication.
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * num / i;
  }
  return result;
}

/// Visits every strictly increasing k-subset of {0, ..., n-1} in
/// lexicographic order. `visit` receives a span of k indices.
template <typename Visitor>
void ForEachIndexCombination(std::size_t n, unsigned k, Visitor&& visit) {
  if (k == 0 || k > n || k > kMaxStrength) return;
  std::array<std::uint32_t, kMaxStrength> idx{};
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  const std::span<const std::uint32_t> view(idx.data(), k);
  while (true) {
    visit(view);
    // Advance the rightmost index that still has room.
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 &&
           idx[pos] == static_cast<std::uint32_t>(n - k + pos)) {
      --pos;
    }
    if (pos < 0) return;
    ++idx[pos];
    for (unsigned j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace cccp
