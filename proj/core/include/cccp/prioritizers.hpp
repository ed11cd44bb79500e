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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cccp/coverage.hpp"
#include "cccp/rng.hpp"

namespace cccp {

enum class Technique { kTotal, kAdditional, kArt, kSearch, kCccp };

std::string_view TechniqueName(Technique technique);
std::optional<Technique> ParseTechnique(std::string_view name);

/// A permutation of test indices produced by one prioritization run.
struct PrioritizedOrder {
  std::vector<TestIndex> order;
  Technique technique = Technique::kTotal;
  std::uint64_t seed = 0;
  unsigned strength = 0;  // cccp only
  std::chrono::nanoseconds wall_time{0};
};

/// Adaptive random prioritization knobs.
struct ArtParams {
  std::size_t candidate_set_size = 10;

  void Validate() const;  // throws ConfigError
};

/// Genetic search knobs.
struct GaParams {
  std::size_t population = 50;
  std::size_t generations = 100;
  double crossover_rate = 0.8;
  double mutation_rate = 0.1;
  std::size_t elites = 1;

  void Validate() const;  // throws ConfigError
};

/// Optional per-step record kept by the greedy techniques: the full set of
/// tied best candidates the pick was drawn from, and whether the step began
/// by resetting the already-covered state.
struct GreedyTrace {
  std::vector<std::vector<TestIndex>> argmax;
  std::vector<bool> restarted;
};

/// Code combinations coverage prioritization.
///
/// The first pick maximizes the number of covered units. Every later pick
/// maximizes the number of its strength-wise code-unit-value combinations
/// not yet claimed by tests picked since the last reset. When no remaining
/// test adds a combination, the claimed set is cleared and the first-pick
/// rule applies again over the remaining tests. Ties are broken uniformly
/// at random.
///
/// Throws DomainError when the strength is invalid for the matrix or the
/// combination index would exceed its memory budget.
PrioritizedOrder prioritize_cccp(const CoverageMatrix& matrix,
                                 unsigned strength, RngStream& rng,
                                 GreedyTrace* trace = nullptr);

/// Descending covered-unit count, random tie order.
PrioritizedOrder prioritize_total(const CoverageMatrix& matrix,
                                  RngStream& rng,
                                  GreedyTrace* trace = nullptr);

/// Greedy on units not yet covered by the picked tests, resetting the
/// covered set once no remaining test adds coverage.
PrioritizedOrder prioritize_additional(const CoverageMatrix& matrix,
                                       RngStream& rng,
                                       GreedyTrace* trace = nullptr);

/// Adaptive random prioritization over Jaccard distance of covered-unit sets.
PrioritizedOrder prioritize_art(const CoverageMatrix& matrix, RngStream& rng,
                                const ArtParams& params = {});

/// Genetic search over permutations maximizing unit_coverage_rate.
PrioritizedOrder prioritize_search(const CoverageMatrix& matrix,
                                   RngStream& rng,
                                   const GaParams& params = {});

/// Jaccard distance between the covered-unit sets of two tests. Two tests
/// that cover nothing are at distance 0.
double jaccard_distance(const CoverageMatrix& matrix, TestIndex a,
                        TestIndex b);

/// Average percentage of code units covered along `order`: the fault-blind
/// analogue of APFD with units in place of faults. Units no test covers are
/// ignored; returns 0 when no unit is covered at all.
double unit_coverage_rate(const CoverageMatrix& matrix,
                          std::span<const TestIndex> order);

/// Everything needed to dispatch one technique.
struct PrioritizerConfig {
  Technique technique = Technique::kCccp;
  unsigned strength = 1;
  ArtParams art;
  GaParams ga;
};

PrioritizedOrder prioritize(const CoverageMatrix& matrix,
                            const PrioritizerConfig& config,
                            std::uint64_t seed);

}  // namespace cccp
