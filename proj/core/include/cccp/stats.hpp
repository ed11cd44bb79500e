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
#include <optional>
#include <span>
#include <string_view>

namespace cccp {

/// Outcome of comparing technique X against technique Y.
enum class Verdict { kBetter, kWorse, kTie };

std::string_view VerdictName(Verdict verdict);  // "better" / "worse" / "tie"
std::optional<Verdict> ParseVerdict(std::string_view name);

struct ComparisonVerdict {
  double p_value = 1.0;
  double a12 = 0.5;
  Verdict verdict = Verdict::kTie;

  friend bool operator==(const ComparisonVerdict&,
                         const ComparisonVerdict&) = default;
};

inline constexpr double kDefaultAlpha = 0.05;

/// Below this many observations on either side the rank-sum test
/// enumerates the exact null distribution.
inline constexpr std::size_t kExactRankSumLimit = 20;

/// Two-tailed Wilcoxon-Mann-Whitney rank-sum test with mid-ranks for ties.
/// Dispatches to the exact or normal-approximation path by sample size.
/// Throws DomainError on an empty sample.
double rank_sum_test(std::span<const double> x, std::span<const double> y);

/// Exact two-tailed p: the null probability of a rank sum at least as far
/// from its mean as the observed one, enumerated over every assignment of
/// the pooled (mid-)ranks to x.
double rank_sum_exact(std::span<const double> x, std::span<const double> y);

/// Normal approximation with tie and continuity correction.
double rank_sum_normal(std::span<const double> x, std::span<const double> y);

/// Vargha-Delaney A12: P(X > Y) + P(X = Y) / 2 over all pairs.
double vargha_delaney_a12(std::span<const double> x,
                          std::span<const double> y);

/// better iff p < alpha and A12 > 0.5; worse iff p < alpha and A12 < 0.5;
/// tie otherwise.
ComparisonVerdict classify(std::span<const double> x,
                           std::span<const double> y,
                           double alpha = kDefaultAlpha);

}  // namespace cccp
