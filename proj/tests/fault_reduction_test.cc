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
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "cccp/fault_reduction.hpp"

namespace cccp {
namespace {

using Grid = std::vector<std::vector<std::uint8_t>>;

std::vector<TestIndex> KillSet(const FaultData& f, std::size_t fault) {
  const auto d = f.detectors(fault);
  return {d.begin(), d.end()};
}

bool Subset(const std::vector<TestIndex>& a, const std::vector<TestIndex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

TEST(ReduceFaults, DuplicatesCollapse) {
  const auto f = FaultData::Create({{1, 1}, {0, 0}, {1, 1}}, {}, {},
                                   {"a", "b"});
  const auto r = reduce_faults(f);
  EXPECT_EQ(r.n_faults(), 1u);
  EXPECT_EQ(r.fault_labels(), (std::vector<std::string>{"a"}));
}

TEST(ReduceFaults, SubsumingFaultIsKept) {
  // A = {t1, t2}, B = {t1, t2, t3}: killing A kills B.
  const auto f = FaultData::Create({{1, 1}, {1, 1}, {0, 1}}, {}, {}, {"A", "B"});
  const auto r = reduce_faults(f);
  EXPECT_EQ(r.fault_labels(), (std::vector<std::string>{"A"}));
}

TEST(ReduceFaults, IncomparableFaultsSurvive) {
  const auto f = FaultData::Create({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}, {0, 0, 0}});
  EXPECT_EQ(subsuming_faults(f), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ReduceFaults, GreedyPrefersTheMostImplyingFault) {
  // Fault 2 ({t0}) is contained in faults 0, 1 and 3; fault 4 ({t2}) is
  // contained only in fault 3, which fault 2 already removed.
  const Grid kills{{1, 1, 1, 1, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 1, 1}};
  const auto f = FaultData::Create(kills);
  EXPECT_EQ(subsuming_faults(f), (std::vector<std::size_t>{2, 4}));
}

TEST(ReduceFaults, KeepsCostsAndTests) {
  const auto f = FaultData::Create({{1, 1}, {0, 1}}, {2.0, 3.0}, {"x", "y"});
  const auto r = reduce_faults(f);
  EXPECT_EQ(r.n_tests(), 2u);
  EXPECT_EQ(r.costs()[1], 3.0);
  EXPECT_EQ(r.test_labels(), f.test_labels());
}

class ReductionProperties : public ::testing::Test {
 protected:
  FaultData RandomFaults() {
    std::uniform_int_distribution<std::size_t> tests(1, 12), faults(1, 20);
    std::bernoulli_distribution cell(0.35);
    const std::size_t n = tests(gen_), k = faults(gen_);
    Grid kills(n, std::vector<std::uint8_t>(k));
    for (std::size_t f = 0; f < k; ++f) {
      bool any = false;
      for (std::size_t t = 0; t < n; ++t) {
        kills[t][f] = cell(gen_);
        any |= kills[t][f] != 0;
      }
      if (!any) kills[f % n][f] = 1;
    }
    return FaultData::Create(kills);
  }

  std::mt19937_64 gen_{616};
};

TEST_F(ReductionProperties, OutputIsDuplicateAndSubsumptionFree) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = reduce_faults(RandomFaults());
    for (std::size_t i = 0; i < r.n_faults(); ++i) {
      for (std::size_t j = 0; j < r.n_faults(); ++j) {
        if (i != j) ASSERT_FALSE(Subset(KillSet(r, i), KillSet(r, j)));
      }
    }
  }
}

TEST_F(ReductionProperties, EveryDroppedFaultIsImpliedByAKeptOne) {
  // A suite that kills every kept fault therefore kills every original one.
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = RandomFaults();
    const auto kept = subsuming_faults(f);
    for (std::size_t y = 0; y < f.n_faults(); ++y) {
      const bool implied = std::any_of(kept.begin(), kept.end(), [&](std::size_t x) {
        return Subset(KillSet(f, x), KillSet(f, y));
      });
      ASSERT_TRUE(implied) << "fault " << y << " trial " << trial;
    }
  }
}

}  // namespace
}  // namespace cccp
