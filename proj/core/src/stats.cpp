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

#include "cccp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "cccp/errors.hpp"

namespace cccp {
namespace {

void CheckNonEmpty(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) {
    throw DomainError("rank statistics need two non-empty samples");
  }
}

struct PooledRanks {
  // Doubled mid-ranks so that every rank is an integer.
  std::vector<std::int64_t> doubled;  // x first, then y
  double tie_term = 0.0;              // sum over tie groups of t^3 - t
};

PooledRanks Rank(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size() + y.size();
  std::vector<double> values(n);
  std::copy(x.begin(), x.end(), values.begin());
  std::copy(y.begin(), y.end(), values.begin() + x.size());
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  PooledRanks out;
  out.doubled.resize(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
    // Ranks i+1 .. j+1 share the mid-rank (i + j + 2) / 2.
    const auto twice_mid = static_cast<std::int64_t>(i + j + 2);
    for (std::size_t k = i; k <= j; ++k) out.doubled[idx[k]] = twice_mid;
    const double t = static_cast<double>(j - i + 1);
    out.tie_term += t * t * t - t;
    i = j + 1;
  }
  return out;
}

}  // namespace

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kBetter:
      return "better";
    case Verdict::kWorse:
      return "worse";
    case Verdict::kTie:
      return "tie";
  }
  return "tie";
}

std::optional<Verdict> ParseVerdict(std::string_view name) {
  if (name == "better") return Verdict::kBetter;
  if (name == "worse") return Verdict::kWorse;
  if (name == "tie") return Verdict::kTie;
  return std::nullopt;
}

double rank_sum_exact(std::span<const double> x, std::span<const double> y) {
  CheckNonEmpty(x, y);
  // Enumerate subsets of the smaller side; the two-tailed criterion is
  // symmetric in which sample is labelled x.
  const bool swap = y.size() < x.size();
  const PooledRanks ranks = swap ? Rank(y, x) : Rank(x, y);
  const std::size_t nx = swap ? y.size() : x.size();
  const std::size_t n = ranks.doubled.size();

  std::int64_t observed = 0;
  for (std::size_t i = 0; i < nx; ++i) observed += ranks.doubled[i];
  const std::int64_t total =
      std::accumulate(ranks.doubled.begin(), ranks.doubled.end(),
                      std::int64_t{0});
  std::vector<std::int64_t> sorted = ranks.doubled;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::int64_t max_sum =
      std::accumulate(sorted.begin(), sorted.begin() + nx, std::int64_t{0});

  // ways[k][s]: number of k-subsets of the ranks seen so far with doubled
  // sum s. Doubles hold C(n, k) without overflow for any practical n.
  std::vector<std::vector<double>> ways(
      nx + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
  ways[0][0] = 1.0;
  std::int64_t reach = 0;
  for (std::size_t item = 0; item < n; ++item) {
    const std::int64_t r = ranks.doubled[item];
    reach = std::min(reach + r, max_sum);
    const std::size_t kmax = std::min(nx, item + 1);
    for (std::size_t k = kmax; k >= 1; --k) {
      auto& dst = ways[k];
      const auto& src = ways[k - 1];
      for (std::int64_t s = reach; s >= r; --s) {
        dst[static_cast<std::size_t>(s)] += src[static_cast<std::size_t>(s - r)];
      }
    }
  }

  // |n * S - nx * total| is n times the distance of S from its null mean,
  // so the comparison stays in integers.
  const auto distance = [&](std::int64_t s) {
    const std::int64_t d = static_cast<std::int64_t>(n) * s -
                           static_cast<std::int64_t>(nx) * total;
    return d < 0 ? -d : d;
  };
  const std::int64_t observed_distance = distance(observed);
  double extreme = 0.0;
  double all = 0.0;
  for (std::int64_t s = 0; s <= max_sum; ++s) {
    const double w = ways[nx][static_cast<std::size_t>(s)];
    if (w == 0.0) continue;
    all += w;
    if (distance(s) >= observed_distance) extreme += w;
  }
  return std::min(1.0, extreme / all);
}

double rank_sum_normal(std::span<const double> x, std::span<const double> y) {
  CheckNonEmpty(x, y);
  const PooledRanks ranks = Rank(x, y);
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  const double n = nx + ny;

  double rank_sum_x = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    rank_sum_x += static_cast<double>(ranks.doubled[i]) / 2.0;
  }
  const double u = rank_sum_x - nx * (nx + 1.0) / 2.0;
  const double mean = nx * ny / 2.0;
  double variance = nx * ny / 12.0 * (n + 1.0);
  if (n > 1.0) variance -= nx * ny * ranks.tie_term / (12.0 * n * (n - 1.0));
  if (variance <= 0.0) return 1.0;  // every observation tied
  const double z = std::max(0.0, std::abs(u - mean) - 0.5) / std::sqrt(variance);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

double rank_sum_test(std::span<const double> x, std::span<const double> y) {
  CheckNonEmpty(x, y);
  if (x.size() < kExactRankSumLimit || y.size() < kExactRankSumLimit) {
    return rank_sum_exact(x, y);
  }
  return rank_sum_normal(x, y);
}

double vargha_delaney_a12(std::span<const double> x,
                          std::span<const double> y) {
  CheckNonEmpty(x, y);
  // Sort y once; for each x count strictly-smaller and equal elements.
  std::vector<double> sorted(y.begin(), y.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t greater = 0;
  std::uint64_t equal = 0;
  for (const double v : x) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), v);
    const auto hi = std::upper_bound(lo, sorted.end(), v);
    greater += static_cast<std::uint64_t>(lo - sorted.begin());
    equal += static_cast<std::uint64_t>(hi - lo);
  }
  // Half-units keep the counts integral. Values above one half are formed
  // as 1 - (complement) so that a12(x, y) + a12(y, x) == 1 holds exactly in
  // floating point.
  const std::uint64_t twice_wins = 2 * greater + equal;
  const std::uint64_t twice_pairs =
      2 * static_cast<std::uint64_t>(x.size()) * y.size();
  const std::uint64_t twice_losses = twice_pairs - twice_wins;
  const auto denom = static_cast<double>(twice_pairs);
  if (twice_wins > twice_losses) {
    return 1.0 - static_cast<double>(twice_losses) / denom;
  }
  return static_cast<double>(twice_wins) / denom;
}

ComparisonVerdict classify(std::span<const double> x,
                           std::span<const double> y, double alpha) {
  ComparisonVerdict out;
  out.p_value = rank_sum_test(x, y);
  out.a12 = vargha_delaney_a12(x, y);
  if (out.p_value < alpha && out.a12 > 0.5) {
    out.verdict = Verdict::kBetter;
  } else if (out.p_value < alpha && out.a12 < 0.5) {
    out.verdict = Verdict::kWorse;
  } else {
    out.verdict = Verdict::kTie;
  }
  return out;
}

}  // namespace cccp
