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
#include <cstdint>
#include <numeric>
#include <vector>

#include "cccp/prioritizers.hpp"
#include "combination_index.hpp"

namespace cccp {
namespace {

using Clock = std::chrono::steady_clock;

// Collects every unselected test attaining the maximum of `score`.
template <typename Score>
std::vector<TestIndex> ArgmaxSet(const std::vector<bool>& selected,
                                 Score&& score, std::uint64_t* best_out) {
  std::vector<TestIndex> ties;
  std::uint64_t best = 0;
  for (TestIndex t = 0; t < selected.size(); ++t) {
    if (selected[t]) continue;
    const std::uint64_t s = score(t);
    if (ties.empty() || s > best) {
      best = s;
      ties.clear();
      ties.push_back(t);
    } else if (s == best) {
      ties.push_back(t);
    }
  }
  if (best_out != nullptr) *best_out = best;
  return ties;
}

void Record(GreedyTrace* trace, const std::vector<TestIndex>& ties,
            bool restarted) {
  if (trace == nullptr) return;
  trace->argmax.push_back(ties);
  trace->restarted.push_back(restarted);
}

std::vector<std::size_t> CoveredCounts(const CoverageMatrix& matrix) {
  std::vector<std::size_t> counts(matrix.n_tests());
  for (TestIndex t = 0; t < counts.size(); ++t) {
    counts[t] = matrix.covered_count(t);
  }
  return counts;
}

}  // namespace

PrioritizedOrder prioritize_cccp(const CoverageMatrix& matrix,
                                 unsigned strength, RngStream& rng,
                                 GreedyTrace* trace) {
  const auto start = Clock::now();
  const internal::CombinationIndex index(matrix, strength);
  const std::size_t n = matrix.n_tests();
  const std::size_t ranks = index.ranks();
  const std::vector<std::size_t> units = CoveredCounts(matrix);

  // claimed[r] has bit p set once combination (r, p) is covered by a pick.
  std::vector<std::uint16_t> claimed(ranks, 0);
  // unclaimed[t] == ccc value of t against the current claimed set.
  std::vector<std::uint64_t> unclaimed(n, ranks);
  std::vector<bool> selected(n, false);
  bool fresh = true;

  PrioritizedOrder result;
  result.technique = Technique::kCccp;
  result.seed = rng.seed();
  result.strength = strength;
  result.order.reserve(n);

  for (std::size_t step = 0; step < n; ++step) {
    std::vector<TestIndex> ties;
    bool restarted = false;
    if (!fresh) {
      std::uint64_t best = 0;
      ties = ArgmaxSet(selected, [&](TestIndex t) { return unclaimed[t]; },
                       &best);
      if (best == 0) {
        std::fill(claimed.begin(), claimed.end(), 0);
        std::fill(unclaimed.begin(), unclaimed.end(), ranks);
        fresh = true;
        restarted = true;
      }
    }
    if (fresh) {
      // Every remaining test ties on combinations; fall back to units.
      ties = ArgmaxSet(selected, [&](TestIndex t) { return units[t]; },
                       nullptr);
    }
    Record(trace, ties, restarted);
    const TestIndex pick = ties[rng.uniform_index(ties.size())];
    selected[pick] = true;
    result.order.push_back(pick);
    fresh = false;

    for (std::size_t r = 0; r < ranks; ++r) {
      const std::uint8_t p = index.pattern(r, pick);
      const auto bit = static_cast<std::uint16_t>(1U << p);
      if ((claimed[r] & bit) != 0) continue;
      claimed[r] |= bit;
      for (const std::uint32_t t : index.bucket(r, p)) --unclaimed[t];
    }
  }
  result.wall_time = Clock::now() - start;
  return result;
}

PrioritizedOrder prioritize_total(const CoverageMatrix& matrix,
                                  RngStream& rng, GreedyTrace* trace) {
  const auto start = Clock::now();
  const std::size_t n = matrix.n_tests();
  const std::vector<std::size_t> units = CoveredCounts(matrix);

  PrioritizedOrder result;
  result.technique = Technique::kTotal;
  result.seed = rng.seed();
  // A uniformly random permutation stably sorted by count gives a uniformly
  // random order within each tie class.
  result.order.resize(n);
  std::iota(result.order.begin(), result.order.end(), TestIndex{0});
  rng.shuffle(std::span<TestIndex>(result.order));
  std::stable_sort(result.order.begin(), result.order.end(),
                   [&](TestIndex a, TestIndex b) { return units[a] > units[b]; });

  if (trace != nullptr) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<TestIndex> ties;
      for (std::size_t j = i; j < n && units[result.order[j]] ==
                                           units[result.order[i]];
           ++j) {
        ties.push_back(result.order[j]);
      }
      std::sort(ties.begin(), ties.end());
      Record(trace, ties, false);
    }
  }
  result.wall_time = Clock::now() - start;
  return result;
}

PrioritizedOrder prioritize_additional(const CoverageMatrix& matrix,
                                       RngStream& rng, GreedyTrace* trace) {
  const auto start = Clock::now();
  const std::size_t n = matrix.n_tests();
  const std::size_t words = matrix.words_per_row();
  std::vector<std::uint64_t> covered(words, 0);
  std::vector<bool> selected(n, false);

  const auto gain = [&](TestIndex t) {
    const auto row = matrix.row_bits(t);
    std::uint64_t g = 0;
    for (std::size_t w = 0; w < words; ++w) g += std::popcount(row[w] & ~covered[w]);
    return g;
  };

  PrioritizedOrder result;
  result.technique = Technique::kAdditional;
  result.seed = rng.seed();
  result.order.reserve(n);

  bool fresh = true;
  for (std::size_t step = 0; step < n; ++step) {
    std::uint64_t best = 0;
    std::vector<TestIndex> ties = ArgmaxSet(selected, gain, &best);
    bool restarted = false;
    if (best == 0 && !fresh) {
      std::fill(covered.begin(), covered.end(), 0);
      ties = ArgmaxSet(selected, gain, &best);
      restarted = true;
    }
    Record(trace, ties, restarted);
    const TestIndex pick = ties[rng.uniform_index(ties.size())];
    selected[pick] = true;
    result.order.push_back(pick);
    const auto row = matrix.row_bits(pick);
    for (std::size_t w = 0; w < words; ++w) covered[w] |= row[w];
    fresh = std::all_of(covered.begin(), covered.end(),
                        [](std::uint64_t w) { return w == 0; });
  }
  result.wall_time = Clock::now() - start;
  return result;
}

}  // namespace cccp
