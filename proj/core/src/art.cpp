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

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <vector>

#include "cccp/errors.hpp"
#include "cccp/prioritizers.hpp"

namespace cccp {

void ArtParams::Validate() const {
  if (candidate_set_size == 0) {
    throw ConfigError("art candidate_set_size must be at least 1");
  }
}

double jaccard_distance(const CoverageMatrix& matrix, TestIndex a,
                        TestIndex b) {
  const auto ra = matrix.row_bits(a);
  const auto rb = matrix.row_bits(b);
  std::size_t both = 0;
  std::size_t either = 0;
  for (std::size_t w = 0; w < ra.size(); ++w) {
    both += std::popcount(ra[w] & rb[w]);
    either += std::popcount(ra[w] | rb[w]);
  }
  if (either == 0) return 0.0;
  return 1.0 - static_cast<double>(both) / static_cast<double>(either);
}

PrioritizedOrder prioritize_art(const CoverageMatrix& matrix, RngStream& rng,
                                const ArtParams& params) {
  params.Validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = matrix.n_tests();

  PrioritizedOrder result;
  result.technique = Technique::kArt;
  result.seed = rng.seed();
  result.order.reserve(n);

  std::vector<TestIndex> remaining(n);
  std::iota(remaining.begin(), remaining.end(), TestIndex{0});
  const auto take = [&](std::size_t pos) {
    result.order.push_back(remaining[pos]);
    remaining[pos] = remaining.back();
    remaining.pop_back();
  };
  take(rng.uniform_index(remaining.size()));

  std::vector<std::size_t> best_positions;
  while (!remaining.empty()) {
    // Partial Fisher-Yates: the first `c` slots become a sample without
    // replacement from the remaining tests.
    const std::size_t c = std::min(params.candidate_set_size, remaining.size());
    for (std::size_t i = 0; i < c; ++i) {
      const std::size_t j = i + rng.uniform_index(remaining.size() - i);
      std::swap(remaining[i], remaining[j]);
    }
    double best = -1.0;
    best_positions.clear();
    for (std::size_t i = 0; i < c; ++i) {
      double farthest = 0.0;
      for (const TestIndex s : result.order) {
        farthest = std::max(farthest, jaccard_distance(matrix, remaining[i], s));
        if (farthest == 1.0) break;
      }
      if (farthest > best) {
        best = farthest;
        best_positions.assign(1, i);
      } else if (farthest == best) {
        best_positions.push_back(i);
      }
    }
    take(best_positions[rng.uniform_index(best_positions.size())]);
  }
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace cccp
