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

#include "combination_index.hpp"

#include <algorithm>
#include <string>

#include "cccp/combinations.hpp"
#include "cccp/errors.hpp"

namespace cccp::internal {

CombinationIndex::CombinationIndex(const CoverageMatrix& matrix,
                                   unsigned strength)
    : n_tests_(matrix.n_tests()),
      ranks_(0),
      strength_(strength),
      n_patterns_(std::size_t{1} << strength) {
  if (strength == 0 || strength > kMaxStrength ||
      strength > matrix.n_units()) {
    throw DomainError("combination strength " + std::to_string(strength) +
                      " is invalid for " + std::to_string(matrix.n_units()) +
                      " code units");
  }
  const std::uint64_t ranks = Binomial(matrix.n_units(), strength);
  if (ranks > kMaxCells / n_tests_) {
    throw DomainError("combination space of " + std::to_string(n_tests_) +
                      " tests x C(" + std::to_string(matrix.n_units()) + ", " +
                      std::to_string(strength) + ") is too large");
  }
  ranks_ = static_cast<std::size_t>(ranks);
  patterns_.resize(ranks_ * n_tests_);
  offsets_.resize(ranks_ * (n_patterns_ + 1));
  members_.resize(ranks_ * n_tests_);

  // Unpack coverage column-wise once; each combination then reads bytes.
  const std::size_t m = matrix.n_units();
  std::vector<std::uint8_t> cover(m * n_tests_);
  for (TestIndex t = 0; t < n_tests_; ++t) {
    const auto row = matrix.row_bits(t);
    for (std::size_t u = 0; u < m; ++u) {
      cover[u * n_tests_ + t] = (row[u / 64] >> (u % 64)) & 1U;
    }
  }

  std::vector<std::uint32_t> counts(n_patterns_);
  std::size_t rank = 0;
  ForEachIndexCombination(m, strength, [&](std::span<const std::uint32_t> idx) {
    std::uint8_t* pat = patterns_.data() + rank * n_tests_;
    for (TestIndex t = 0; t < n_tests_; ++t) {
      std::uint8_t p = 0;
      for (unsigned k = 0; k < strength; ++k) {
        p |= static_cast<std::uint8_t>(cover[idx[k] * n_tests_ + t] << k);
      }
      pat[t] = p;
    }
    // Counting sort of the tests by pattern.
    std::fill(counts.begin(), counts.end(), 0);
    for (TestIndex t = 0; t < n_tests_; ++t) ++counts[pat[t]];
    std::uint32_t* off = offsets_.data() + rank * (n_patterns_ + 1);
    off[0] = 0;
    for (std::size_t p = 0; p < n_patterns_; ++p) off[p + 1] = off[p] + counts[p];
    std::uint32_t* mem = members_.data() + rank * n_tests_;
    std::fill(counts.begin(), counts.end(), 0);
    for (TestIndex t = 0; t < n_tests_; ++t) {
      mem[off[pat[t]] + counts[pat[t]]++] = static_cast<std::uint32_t>(t);
    }
    ++rank;
  });
}

}  // namespace cccp::internal
