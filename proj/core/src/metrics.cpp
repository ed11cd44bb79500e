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

#include "cccp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "cccp/errors.hpp"

namespace cccp {
namespace {

void CheckUnique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw DomainError(std::string("duplicate ") + what + " label '" + label +
                        "'");
    }
  }
}

// positions[t] = 0-based position of test t in `order`.
std::vector<std::size_t> Positions(std::span<const TestIndex> order,
                                   const FaultData& faults) {
  if (order.size() != faults.n_tests()) {
    throw ShapeError("order has " + std::to_string(order.size()) +
                     " tests but the kill matrix has " +
                     std::to_string(faults.n_tests()));
  }
  if (faults.n_faults() == 0) {
    throw DomainError("fault detection rate is undefined without faults");
  }
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> positions(order.size(), kUnset);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const TestIndex t = order[pos];
    if (t >= order.size() || positions[t] != kUnset) {
      throw DomainError("order is not a permutation of the test indices");
    }
    positions[t] = pos;
  }
  return positions;
}

// 0-based position of the first test in the order detecting `fault`.
std::size_t FirstDetection(const FaultData& faults, std::size_t fault,
                           const std::vector<std::size_t>& positions) {
  const auto detectors = faults.detectors(fault);
  if (detectors.empty()) {
    throw DomainError("fault " + std::to_string(fault) +
                      " is not detected by any test");
  }
  std::size_t first = std::numeric_limits<std::size_t>::max();
  for (const TestIndex t : detectors) first = std::min(first, positions[t]);
  return first;
}

}  // namespace

FaultData FaultData::Create(
    const std::vector<std::vector<std::uint8_t>>& kills,
    std::vector<double> costs, std::vector<std::string> test_labels,
    std::vector<std::string> fault_labels) {
  if (kills.empty()) throw ShapeError("kill matrix has no tests");
  const std::size_t n = kills.size();
  const std::size_t k = kills.front().size();
  if (costs.empty()) costs.assign(n, 1.0);
  if (costs.size() != n) {
    throw ShapeError("expected " + std::to_string(n) + " test costs, got " +
                     std::to_string(costs.size()));
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (!(std::isfinite(costs[t]) && costs[t] > 0.0)) {
      throw DomainError("cost of test " + std::to_string(t) +
                        " must be positive");
    }
  }
  if (!test_labels.empty() && test_labels.size() != n) {
    throw ShapeError("expected " + std::to_string(n) + " test labels, got " +
                     std::to_string(test_labels.size()));
  }
  if (!fault_labels.empty() && fault_labels.size() != k) {
    throw ShapeError("expected " + std::to_string(k) + " fault labels, got " +
                     std::to_string(fault_labels.size()));
  }
  CheckUnique(test_labels, "test");
  CheckUnique(fault_labels, "fault");

  FaultData out;
  out.n_tests_ = n;
  out.detectors_.resize(k);
  for (std::size_t t = 0; t < n; ++t) {
    if (kills[t].size() != k) {
      throw ShapeError("kill matrix row " + std::to_string(t) + " has " +
                       std::to_string(kills[t].size()) + " cells, expected " +
                       std::to_string(k));
    }
    for (std::size_t f = 0; f < k; ++f) {
      if (kills[t][f] > 1) {
        throw DomainError("kill cell (" + std::to_string(t) + ", " +
                          std::to_string(f) + ") is not 0/1");
      }
      if (kills[t][f] != 0) out.detectors_[f].push_back(t);
    }
  }
  out.costs_ = std::move(costs);
  out.test_labels_ = std::move(test_labels);
  out.fault_labels_ = std::move(fault_labels);
  return out;
}

bool FaultData::kills(TestIndex test, std::size_t fault) const {
  if (test >= n_tests_ || fault >= detectors_.size()) {
    throw IndexError("kill cell out of range");
  }
  const auto& d = detectors_[fault];
  return std::binary_search(d.begin(), d.end(), test);
}

std::vector<std::vector<std::uint8_t>> FaultData::kill_rows() const {
  std::vector<std::vector<std::uint8_t>> rows(
      n_tests_, std::vector<std::uint8_t>(detectors_.size(), 0));
  for (std::size_t f = 0; f < detectors_.size(); ++f) {
    for (const TestIndex t : detectors_[f]) rows[t][f] = 1;
  }
  return rows;
}

FaultData FaultData::select_faults(std::span<const std::size_t> faults) const {
  FaultData out;
  out.n_tests_ = n_tests_;
  out.costs_ = costs_;
  out.test_labels_ = test_labels_;
  for (const std::size_t f : faults) {
    if (f >= detectors_.size()) throw IndexError("fault index out of range");
    out.detectors_.push_back(detectors_[f]);
    if (!fault_labels_.empty()) out.fault_labels_.push_back(fault_labels_[f]);
  }
  return out;
}

double apfd(std::span<const TestIndex> order, const FaultData& faults) {
  const auto positions = Positions(order, faults);
  double tf_sum = 0.0;
  for (std::size_t f = 0; f < faults.n_faults(); ++f) {
    tf_sum += static_cast<double>(FirstDetection(faults, f, positions) + 1);
  }
  const double n = static_cast<double>(order.size());
  const double m = static_cast<double>(faults.n_faults());
  return 1.0 - tf_sum / (n * m) + 1.0 / (2.0 * n);
}

double apfd(const PrioritizedOrder& order, const FaultData& faults) {
  return apfd(order.order, faults);
}

double apfd_c(std::span<const TestIndex> order, const FaultData& faults) {
  const auto positions = Positions(order, faults);
  const auto costs = faults.costs();
  // suffix[j] = sum of costs at positions j..n-1 of the order.
  std::vector<double> suffix(order.size() + 1, 0.0);
  for (std::size_t j = order.size(); j-- > 0;) {
    suffix[j] = suffix[j + 1] + costs[order[j]];
  }
  double numerator = 0.0;
  for (std::size_t f = 0; f < faults.n_faults(); ++f) {
    const std::size_t tf = FirstDetection(faults, f, positions);
    numerator += suffix[tf] - 0.5 * costs[order[tf]];
  }
  const double m = static_cast<double>(faults.n_faults());
  return numerator / (m * suffix[0]);
}

double apfd_c(const PrioritizedOrder& order, const FaultData& faults) {
  return apfd_c(order.order, faults);
}

}  // namespace cccp
