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
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "cccp/errors.hpp"
#include "cccp/metrics.hpp"

namespace cccp {
namespace {

using Grid = std::vector<std::vector<std::uint8_t>>;

TEST(Apfd, SingleFaultAtFirstPosition) {
  const auto f = FaultData::Create({{1}, {0}});
  EXPECT_DOUBLE_EQ(apfd(std::vector<TestIndex>{0, 1}, f), 0.75);
}

TEST(Apfd, TwoFaultsFoundAtPositionsOneAndThree) {
  // fault 0 by test 0, fault 1 only by test 2; order <0, 1, 2>.
  const auto f = FaultData::Create({{1, 0}, {0, 0}, {0, 1}});
  EXPECT_DOUBLE_EQ(apfd(std::vector<TestIndex>{0, 1, 2}, f), 0.5);
}

TEST(Apfd, WorstCasePosition) {
  const auto f = FaultData::Create({{0}, {0}, {0}, {1}});
  EXPECT_DOUBLE_EQ(apfd(std::vector<TestIndex>{0, 1, 2, 3}, f), 0.125);
}

TEST(Apfd, Errors) {
  const auto none = FaultData::Create({{}, {}});
  EXPECT_THROW(apfd(std::vector<TestIndex>{0, 1}, none), DomainError);
  const auto undetected = FaultData::Create({{1, 0}, {0, 0}});
  EXPECT_THROW(apfd(std::vector<TestIndex>{0, 1}, undetected), DomainError);
  const auto ok = FaultData::Create({{1}, {0}});
  EXPECT_THROW(apfd(std::vector<TestIndex>{0}, ok), ShapeError);
  EXPECT_THROW(apfd(std::vector<TestIndex>{0, 0}, ok), DomainError);
  EXPECT_THROW(apfd(std::vector<TestIndex>{0, 2}, ok), DomainError);
}

TEST(ApfdC, UniformCostsEqualApfd) {
  const auto f = FaultData::Create({{1, 0}, {0, 0}, {0, 1}}, {1, 1, 1});
  const std::vector<TestIndex> order{0, 1, 2};
  EXPECT_DOUBLE_EQ(apfd_c(order, f), 0.5);
  EXPECT_NEAR(apfd_c(order, f), apfd(order, f), 1e-12);
}

TEST(ApfdC, CostsFollowTheOrder) {
  // Executed costs (2, 1, 1), one fault found at position 1:
  // (4 - 2/2) / (1 * 4) = 0.75.
  const auto f = FaultData::Create({{0}, {1}, {0}}, {1, 2, 1});
  EXPECT_DOUBLE_EQ(apfd_c(std::vector<TestIndex>{1, 0, 2}, f), 0.75);
}

TEST(ApfdC, ScaleInvariant) {
  const auto f = FaultData::Create({{0, 1}, {1, 0}, {0, 1}}, {3, 0.5, 2});
  const auto g = FaultData::Create({{0, 1}, {1, 0}, {0, 1}}, {30, 5, 20});
  const std::vector<TestIndex> order{2, 0, 1};
  EXPECT_NEAR(apfd_c(order, f), apfd_c(order, g), 1e-12);
}

TEST(FaultDataType, Validation) {
  EXPECT_THROW(FaultData::Create({}), ShapeError);
  EXPECT_THROW(FaultData::Create({{1}, {1}}, {1}), ShapeError);
  EXPECT_THROW(FaultData::Create({{1}, {1}}, {1, 0}), DomainError);
  EXPECT_THROW(FaultData::Create({{1}, {1}}, {1, -2}), DomainError);
  EXPECT_THROW(FaultData::Create({{1, 0}, {1}}), ShapeError);
  EXPECT_THROW(FaultData::Create({{3}}), DomainError);
}

// Property tests over fuzzed instances.

struct Instance {
  std::vector<TestIndex> order;
  Grid kills;
  std::vector<double> costs;
};

Instance RandomInstance(std::mt19937_64& gen) {
  std::uniform_int_distribution<std::size_t> size(1, 15);
  const std::size_t n = size(gen);
  const std::size_t k = size(gen);
  std::bernoulli_distribution cell(0.3);
  std::uniform_real_distribution<double> cost(0.01, 10.0);
  Instance inst;
  inst.kills.assign(n, std::vector<std::uint8_t>(k, 0));
  for (std::size_t f = 0; f < k; ++f) {
    bool any = false;
    for (std::size_t t = 0; t < n; ++t) {
      inst.kills[t][f] = cell(gen);
      any |= inst.kills[t][f] != 0;
    }
    if (!any) inst.kills[std::uniform_int_distribution<std::size_t>(0, n - 1)(gen)][f] = 1;
  }
  inst.order.resize(n);
  std::iota(inst.order.begin(), inst.order.end(), TestIndex{0});
  std::shuffle(inst.order.begin(), inst.order.end(), gen);
  for (std::size_t t = 0; t < n; ++t) inst.costs.push_back(cost(gen));
  return inst;
}

TEST(MetricProperties, RangeAndFaultPermutationInvariance) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 500; ++trial) {
    const Instance inst = RandomInstance(gen);
    const auto f = FaultData::Create(inst.kills, inst.costs);
    const double n = static_cast<double>(inst.order.size());
    const double a = apfd(inst.order, f);
    EXPECT_GT(a, 1.0 / (2.0 * n) - 1e-15);
    EXPECT_LT(a, 1.0);

    std::vector<std::size_t> columns(f.n_faults());
    std::iota(columns.begin(), columns.end(), std::size_t{0});
    std::shuffle(columns.begin(), columns.end(), gen);
    const auto shuffled = f.select_faults(columns);
    EXPECT_NEAR(apfd(inst.order, shuffled), a, 1e-12);
    EXPECT_NEAR(apfd_c(inst.order, shuffled), apfd_c(inst.order, f), 1e-12);
  }
}

TEST(MetricProperties, PromotingADominatingTestNeverHurts) {
  // If the later of two adjacent tests detects every fault the earlier one
  // does, swapping them cannot delay any first detection.
  std::mt19937_64 gen(47);
  for (int trial = 0; trial < 500; ++trial) {
    Instance inst = RandomInstance(gen);
    if (inst.order.size() < 2) continue;
    const std::size_t pos = std::uniform_int_distribution<std::size_t>(
        0, inst.order.size() - 2)(gen);
    const TestIndex early = inst.order[pos];
    const TestIndex late = inst.order[pos + 1];
    for (std::size_t f = 0; f < inst.kills[early].size(); ++f) {
      inst.kills[late][f] |= inst.kills[early][f];
    }
    const auto faults = FaultData::Create(inst.kills);
    const double before = apfd(inst.order, faults);
    std::swap(inst.order[pos], inst.order[pos + 1]);
    EXPECT_GE(apfd(inst.order, faults), before - 1e-12);
  }
}

TEST(MetricProperties, EqualCostIdentityAndScaleInvariance) {
  std::mt19937_64 gen(59);
  std::uniform_real_distribution<double> scale(0.001, 1000.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Instance inst = RandomInstance(gen);
    const auto uniform = FaultData::Create(inst.kills);
    EXPECT_NEAR(apfd_c(inst.order, uniform), apfd(inst.order, uniform), 1e-12);
    const auto costed = FaultData::Create(inst.kills, inst.costs);
    std::vector<double> scaled = inst.costs;
    const double c = scale(gen);
    for (auto& v : scaled) v *= c;
    EXPECT_NEAR(apfd_c(inst.order, FaultData::Create(inst.kills, scaled)),
                apfd_c(inst.order, costed), 1e-12);
  }
}

}  // namespace
}  // namespace cccp
