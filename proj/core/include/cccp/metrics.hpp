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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cccp/coverage.hpp"
#include "cccp/prioritizers.hpp"

namespace cccp {

/// Kill matrix (test i detects fault j) plus a positive execution cost per
/// test. Costs stay attached to test identity; metrics map them through the
/// evaluated order.
class FaultData {
 public:
  /// `kills` is n_tests rows of n_faults 0/1 cells. Empty `costs` means unit
  /// cost for every test. Throws ShapeError on ragged input, wrong cost or
  /// label counts, or zero tests; DomainError on non-binary cells, costs
  /// that are not finite and positive, or duplicate labels.
  static FaultData Create(const std::vector<std::vector<std::uint8_t>>& kills,
                          std::vector<double> costs = {},
                          std::vector<std::string> test_labels = {},
                          std::vector<std::string> fault_labels = {});

  std::size_t n_tests() const noexcept { return n_tests_; }
  std::size_t n_faults() const noexcept { return detectors_.size(); }

  bool kills(TestIndex test, std::size_t fault) const;

  /// Tests detecting `fault`, ascending.
  std::span<const TestIndex> detectors(std::size_t fault) const {
    return detectors_.at(fault);
  }

  std::span<const double> costs() const noexcept { return costs_; }
  const std::vector<std::string>& test_labels() const noexcept {
    return test_labels_;
  }
  const std::vector<std::string>& fault_labels() const noexcept {
    return fault_labels_;
  }

  /// Row-major 0/1 grid, n_tests x n_faults.
  std::vector<std::vector<std::uint8_t>> kill_rows() const;

  /// Same tests and costs restricted to the given fault columns, in order.
  FaultData select_faults(std::span<const std::size_t> faults) const;

  friend bool operator==(const FaultData&, const FaultData&) = default;

 private:
  FaultData() = default;

  std::size_t n_tests_ = 0;
  std::vector<std::vector<TestIndex>> detectors_;
  std::vector<double> costs_;
  std::vector<std::string> test_labels_;
  std::vector<std::string> fault_labels_;
};

/// Average percentage of faults detected:
///   1 - sum(TF_i) / (n * m) + 1 / (2n)
/// with TF_i the 1-based position of the first test detecting fault i.
///
/// Throws ShapeError when the order length differs from the kill matrix,
/// DomainError when `order` is not a permutation, when there are no faults,
/// or when a fault has no detecting test.
double apfd(std::span<const TestIndex> order, const FaultData& faults);
double apfd(const PrioritizedOrder& order, const FaultData& faults);

/// Cost-cognizant APFD with equal fault severities:
///   sum_i (sum_{j >= TF_i} beta_j - beta_{TF_i} / 2) / (m * sum_j beta_j)
/// where beta_j is the cost of the test at position j of `order`.
/// Errors as for apfd().
double apfd_c(std::span<const TestIndex> order, const FaultData& faults);
double apfd_c(const PrioritizedOrder& order, const FaultData& faults);

}  // namespace cccp
