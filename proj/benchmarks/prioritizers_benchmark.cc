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

#include <cstdint>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "cccp/metrics.hpp"
#include "cccp/prioritizers.hpp"
#include "cccp/rng.hpp"

namespace {

cccp::CoverageMatrix Synthetic(std::size_t tests, std::size_t units) {
  std::mt19937_64 gen(tests * 1000003 + units);
  std::bernoulli_distribution cell(0.3);
  std::vector<std::vector<std::uint8_t>> rows(tests, std::vector<std::uint8_t>(units));
  for (auto& row : rows) {
    for (auto& c : row) c = cell(gen) ? 1 : 0;
  }
  return cccp::CoverageMatrix::FromRows(rows);
}

void BM_Cccp(benchmark::State& state) {
  const auto m = Synthetic(state.range(0), state.range(1));
  const auto strength = static_cast<unsigned>(state.range(2));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cccp::RngStream rng(seed++);
    benchmark::DoNotOptimize(cccp::prioritize_cccp(m, strength, rng));
  }
}
BENCHMARK(BM_Cccp)
    ->Args({100, 500, 1})
    ->Args({500, 2000, 1})
    ->Args({100, 100, 2})
    ->Args({500, 150, 2})
    ->Args({50, 30, 3})
    ->Unit(benchmark::kMillisecond);

void BM_Additional(benchmark::State& state) {
  const auto m = Synthetic(state.range(0), state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cccp::RngStream rng(seed++);
    benchmark::DoNotOptimize(cccp::prioritize_additional(m, rng));
  }
}
BENCHMARK(BM_Additional)->Args({100, 500})->Args({500, 2000})->Unit(benchmark::kMillisecond);

void BM_Total(benchmark::State& state) {
  const auto m = Synthetic(state.range(0), state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cccp::RngStream rng(seed++);
    benchmark::DoNotOptimize(cccp::prioritize_total(m, rng));
  }
}
BENCHMARK(BM_Total)->Args({500, 2000})->Unit(benchmark::kMillisecond);

void BM_Art(benchmark::State& state) {
  const auto m = Synthetic(state.range(0), state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cccp::RngStream rng(seed++);
    benchmark::DoNotOptimize(cccp::prioritize_art(m, rng));
  }
}
BENCHMARK(BM_Art)->Args({100, 500})->Args({500, 2000})->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  const auto m = Synthetic(state.range(0), state.range(1));
  cccp::GaParams params;
  params.population = 20;
  params.generations = 20;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cccp::RngStream rng(seed++);
    benchmark::DoNotOptimize(cccp::prioritize_search(m, rng, params));
  }
}
BENCHMARK(BM_Search)->Args({50, 200})->Unit(benchmark::kMillisecond);

void BM_Apfd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 gen(3);
  std::bernoulli_distribution cell(0.05);
  std::vector<std::vector<std::uint8_t>> kills(n, std::vector<std::uint8_t>(n));
  for (std::size_t f = 0; f < n; ++f) {
    for (auto& row : kills) row[f] = cell(gen);
    kills[f][f] = 1;
  }
  const auto faults = cccp::FaultData::Create(kills);
  std::vector<cccp::TestIndex> order(n);
  for (cccp::TestIndex t = 0; t < n; ++t) order[t] = t;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cccp::apfd(order, faults));
    benchmark::DoNotOptimize(cccp::apfd_c(order, faults));
  }
}
BENCHMARK(BM_Apfd)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
