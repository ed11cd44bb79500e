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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cccp/coverage.hpp"

namespace cccp::internal {

// Dense form of every test's combination set.
//
// Index combinations of the code units are ranked lexicographically. At each
// rank a test holds exactly one of 2^strength value patterns (bit k set when
// the k-th unit of the combination is covered), so a combination is the pair
// (rank, pattern). For each rank the tests are bucketed by pattern, which
// lets the greedy loop decrement exactly the tests that share a newly
// claimed combination.
class CombinationIndex {
 public:
  // Throws DomainError when n_tests * C(m, strength) exceeds kMaxCells.
  CombinationIndex(const CoverageMatrix& matrix, unsigned strength);

  static constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 28;

  std::size_t n_tests() const noexcept { return n_tests_; }
  std::size_t ranks() const noexcept { return ranks_; }
  unsigned strength() const noexcept { return strength_; }

  std::uint8_t pattern(std::size_t rank, TestIndex test) const {
    return patterns_[rank * n_tests_ + test];
  }

  // Tests whose pattern at `rank` equals `pattern`.
  std::span<const std::uint32_t> bucket(std::size_t rank,
                                        std::uint8_t pattern) const {
    const std::size_t base = rank * (n_patterns_ + 1);
    const std::uint32_t begin = offsets_[base + pattern];
    const std::uint32_t end = offsets_[base + pattern + 1];
    return {members_.data() + rank * n_tests_ + begin, end - begin};
  }

 private:
  std::size_t n_tests_;
  std::size_t ranks_;
  unsigned strength_;
  std::size_t n_patterns_;
  std::vector<std::uint8_t> patterns_;   // rank-major, n_tests per rank
  std::vector<std::uint32_t> offsets_;   // (n_patterns + 1) per rank
  std::vector<std::uint32_t> members_;   // n_tests per rank, grouped
};

}  // namespace cccp::internal
