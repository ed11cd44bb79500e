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

#include "cccp/fault_reduction.hpp"

#include <algorithm>
#include <map>
#include <span>

namespace cccp {
namespace {

bool IsSubset(std::span<const TestIndex> a, std::span<const TestIndex> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<std::size_t> subsuming_faults(const FaultData& faults) {
  const std::size_t k = faults.n_faults();

  std::vector<std::size_t> unique;
  std::map<std::vector<TestIndex>, std::size_t> seen;
  for (std::size_t f = 0; f < k; ++f) {
    const auto d = faults.detectors(f);
    if (seen.emplace(std::vector<TestIndex>(d.begin(), d.end()), f).second) {
      unique.push_back(f);
    }
  }

  // implies[i] lists the positions j != i in `unique` whose kill set
  // contains that of unique[i].
  const std::size_t u = unique.size();
  std::vector<std::vector<std::size_t>> implies(u);
  for (std::size_t i = 0; i < u; ++i) {
    for (std::size_t j = 0; j < u; ++j) {
      if (i != j && IsSubset(faults.detectors(unique[i]),
                             faults.detectors(unique[j]))) {
        implies[i].push_back(j);
      }
    }
  }

  std::vector<bool> alive(u, true);
  std::vector<std::size_t> kept;
  while (true) {
    std::size_t best = u;
    std::size_t best_count = 0;
    for (std::size_t i = 0; i < u; ++i) {
      if (!alive[i]) continue;
      const auto count = static_cast<std::size_t>(
          std::count_if(implies[i].begin(), implies[i].end(),
                        [&](std::size_t j) { return alive[j]; }));
      if (best == u || count > best_count) {
        best = i;
        best_count = count;
      }
    }
    if (best == u) break;
    kept.push_back(unique[best]);
    alive[best] = false;
    for (const std::size_t j : implies[best]) alive[j] = false;
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

FaultData reduce_faults(const FaultData& faults) {
  const std::vector<std::size_t> kept = subsuming_faults(faults);
  return faults.select_faults(kept);
}

}  // namespace cccp
