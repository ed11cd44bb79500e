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
namespace {

using Permutation = std::vector<TestIndex>;

// Davis order crossover: the child keeps parent_a's slice [lo, hi] in
// place and fills the other slots with parent_b's genes in parent_b order,
// starting just after the slice and wrapping around.
Permutation OrderCrossover(const Permutation& parent_a,
                           const Permutation& parent_b, RngStream& rng) {
  const std::size_t n = parent_a.size();
  if (n < 2) return parent_a;
  std::size_t lo = rng.uniform_index(n);
  std::size_t hi = rng.uniform_index(n);
  if (lo > hi) std::swap(lo, hi);

  Permutation child(n);
  std::vector<bool> taken(n, false);
  for (std::size_t i = lo; i <= hi; ++i) {
    child[i] = parent_a[i];
    taken[parent_a[i]] = true;
  }
  std::size_t write = (hi + 1) % n;
  for (std::size_t k = 0; k < n; ++k) {
    const TestIndex gene = parent_b[(hi + 1 + k) % n];
    if (taken[gene]) continue;
    child[write] = gene;
    write = (write + 1) % n;
  }
  return child;
}

void SwapMutation(Permutation& p, RngStream& rng) {
  if (p.size() < 2) return;
  const std::size_t i = rng.uniform_index(p.size());
  std::size_t j = rng.uniform_index(p.size() - 1);
  if (j >= i) ++j;
  std::swap(p[i], p[j]);
}

}  // namespace

void GaParams::Validate() const {
  if (population == 0) throw ConfigError("ga population must be at least 1");
  if (elites > population) {
    throw ConfigError("ga elites cannot exceed the population size");
  }
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
    throw ConfigError("ga crossover_rate must lie in [0, 1]");
  }
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw ConfigError("ga mutation_rate must lie in [0, 1]");
  }
}

double unit_coverage_rate(const CoverageMatrix& matrix,
                          std::span<const TestIndex> order) {
  const std::size_t words = matrix.words_per_row();
  std::vector<std::uint64_t> covered(words, 0);
  std::uint64_t position_sum = 0;
  std::uint64_t units = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto row = matrix.row_bits(order[pos]);
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t fresh = row[w] & ~covered[w];
      if (fresh == 0) continue;
      const auto k = static_cast<std::uint64_t>(std::popcount(fresh));
      position_sum += k * (pos + 1);
      units += k;
      covered[w] |= fresh;
    }
  }
  if (units == 0 || order.empty()) return 0.0;
  const double n = static_cast<double>(order.size());
  return 1.0 - static_cast<double>(position_sum) /
                   (n * static_cast<double>(units)) +
         1.0 / (2.0 * n);
}

PrioritizedOrder prioritize_search(const CoverageMatrix& matrix,
                                   RngStream& rng, const GaParams& params) {
  params.Validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = matrix.n_tests();

  std::vector<Permutation> population(params.population, Permutation(n));
  for (auto& individual : population) {
    std::iota(individual.begin(), individual.end(), TestIndex{0});
    rng.shuffle(std::span<TestIndex>(individual));
  }
  std::vector<double> fitness(population.size());
  const auto evaluate = [&] {
    for (std::size_t i = 0; i < population.size(); ++i) {
      fitness[i] = unit_coverage_rate(matrix, population[i]);
    }
  };
  evaluate();

  Permutation best = population.front();
  double best_fitness = fitness.front();
  const auto track_best = [&] {
    for (std::size_t i = 0; i < population.size(); ++i) {
      if (fitness[i] > best_fitness) {
        best_fitness = fitness[i];
        best = population[i];
      }
    }
  };
  track_best();

  // Binary tournament; the earlier index wins fitness ties.
  const auto tournament = [&]() -> const Permutation& {
    const std::size_t a = rng.uniform_index(population.size());
    const std::size_t b = rng.uniform_index(population.size());
    const bool pick_a = fitness[a] > fitness[b] ||
                        (fitness[a] == fitness[b] && a <= b);
    return population[pick_a ? a : b];
  };

  std::vector<std::size_t> ranking(population.size());
  for (std::size_t gen = 0; gen < params.generations; ++gen) {
    std::iota(ranking.begin(), ranking.end(), std::size_t{0});
    std::stable_sort(ranking.begin(), ranking.end(),
                     [&](std::size_t a, std::size_t b) {
                       return fitness[a] > fitness[b];
                     });
    std::vector<Permutation> next;
    next.reserve(population.size());
    for (std::size_t e = 0; e < params.elites; ++e) {
      next.push_back(population[ranking[e]]);
    }
    while (next.size() < population.size()) {
      const Permutation& mother = tournament();
      const Permutation& father = tournament();
      Permutation first = mother;
      Permutation second = father;
      if (rng.bernoulli(params.crossover_rate)) {
        first = OrderCrossover(mother, father, rng);
        second = OrderCrossover(father, mother, rng);
      }
      if (rng.bernoulli(params.mutation_rate)) SwapMutation(first, rng);
      if (rng.bernoulli(params.mutation_rate)) SwapMutation(second, rng);
      next.push_back(std::move(first));
      if (next.size() < population.size()) next.push_back(std::move(second));
    }
    population = std::move(next);
    evaluate();
    track_best();
  }

  PrioritizedOrder result;
  result.technique = Technique::kSearch;
  result.seed = rng.seed();
  result.order = std::move(best);
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace cccp
