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

#include "cccp/coverage.hpp"

#include <algorithm>
#include <bit>
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

void CheckStrength(unsigned strength) {
  if (strength == 0 || strength > kMaxStrength) {
    throw DomainError("combination strength must be in [1, " +
                      std::to_string(kMaxStrength) + "], got " +
                      std::to_string(strength));
  }
}

CombinationTuple Pack(std::span<const std::uint32_t> values) {
  CombinationTuple t{};
  std::copy(values.begin(), values.end(), t.begin());
  return t;
}

}  // namespace

CoverageMatrix CoverageMatrix::FromRows(
    const std::vector<std::vector<std::uint8_t>>& rows,
    std::vector<std::string> test_labels,
    std::vector<std::string> unit_labels) {
  if (rows.empty()) throw ShapeError("coverage matrix has no tests");
  const std::size_t m = rows.front().size();
  if (m == 0) throw ShapeError("coverage matrix has no code units");
  if (!test_labels.empty() && test_labels.size() != rows.size()) {
    throw ShapeError("expected " + std::to_string(rows.size()) +
                     " test labels, got " + std::to_string(test_labels.size()));
  }
  if (!unit_labels.empty() && unit_labels.size() != m) {
    throw ShapeError("expected " + std::to_string(m) + " unit labels, got " +
                     std::to_string(unit_labels.size()));
  }
  CheckUnique(test_labels, "test");
  CheckUnique(unit_labels, "unit");

  CoverageMatrix out;
  out.n_tests_ = rows.size();
  out.n_units_ = m;
  out.words_per_row_ = (m + 63) / 64;
  out.bits_.assign(out.n_tests_ * out.words_per_row_, 0);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (rows[t].size() != m) {
      throw ShapeError("row " + std::to_string(t) + " has " +
                       std::to_string(rows[t].size()) + " cells, expected " +
                       std::to_string(m));
    }
    std::uint64_t* words = out.bits_.data() + t * out.words_per_row_;
    for (std::size_t u = 0; u < m; ++u) {
      const std::uint8_t cell = rows[t][u];
      if (cell > 1) {
        throw DomainError("cell (" + std::to_string(t) + ", " +
                          std::to_string(u) + ") is not 0/1");
      }
      if (cell != 0) words[u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
  out.test_labels_ = std::move(test_labels);
  out.unit_labels_ = std::move(unit_labels);
  return out;
}

bool CoverageMatrix::covers(TestIndex test, std::size_t unit) const {
  if (test >= n_tests_ || unit >= n_units_) {
    throw IndexError("coverage cell (" + std::to_string(test) + ", " +
                     std::to_string(unit) + ") out of range");
  }
  return (bits_[test * words_per_row_ + unit / 64] >> (unit % 64)) & 1U;
}

std::size_t CoverageMatrix::covered_count(TestIndex test) const {
  std::size_t count = 0;
  for (const std::uint64_t w : row_bits(test)) count += std::popcount(w);
  return count;
}

std::span<const std::uint64_t> CoverageMatrix::row_bits(TestIndex test) const {
  if (test >= n_tests_) {
    throw IndexError("test index " + std::to_string(test) + " out of range");
  }
  return {bits_.data() + test * words_per_row_, words_per_row_};
}

EncodedTest::EncodedTest(std::vector<std::uint32_t> values)
    : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const std::uint32_t v = values_[i];
    if (v != 2 * i + 1 && v != 2 * i + 2) {
      throw DomainError("encoded value " + std::to_string(v) +
                        " is invalid at position " + std::to_string(i));
    }
  }
}

std::size_t CombinationTupleHash::operator()(
    const CombinationTuple& t) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (const std::uint32_t v : t) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

CombinationSet::CombinationSet(unsigned strength) : strength_(strength) {
  CheckStrength(strength);
}

bool CombinationSet::insert(std::span<const std::uint32_t> tuple) {
  if (tuple.size() != strength_) {
    throw DomainError("tuple width " + std::to_string(tuple.size()) +
                      " does not match strength " + std::to_string(strength_));
  }
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i] <= tuple[i - 1]) {
      throw DomainError("tuple values must be strictly increasing");
    }
  }
  return tuples_.insert(Pack(tuple)).second;
}

bool CombinationSet::contains(std::span<const std::uint32_t> tuple) const {
  if (tuple.size() != strength_) return false;
  return tuples_.find(Pack(tuple)) != tuples_.end();
}

void CombinationSet::merge(const CombinationSet& other) {
  if (other.strength_ != strength_) {
    throw DomainError("cannot merge combination sets of strength " +
                      std::to_string(strength_) + " and " +
                      std::to_string(other.strength_));
  }
  tuples_.insert(other.tuples_.begin(), other.tuples_.end());
}

EncodedTest encode_test(const CoverageMatrix& matrix, TestIndex row) {
  if (row >= matrix.n_tests()) {
    throw IndexError("test index " + std::to_string(row) +
                     " out of range for " + std::to_string(matrix.n_tests()) +
                     " tests");
  }
  std::vector<std::uint32_t> values(matrix.n_units());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto odd = static_cast<std::uint32_t>(2 * i + 1);
    values[i] = matrix.covers(row, i) ? odd : odd + 1;
  }
  return EncodedTest(std::move(values));
}

CombinationSet comb_set(const EncodedTest& tc, unsigned strength) {
  CheckStrength(strength);
  if (strength > tc.size()) {
    throw DomainError("strength " + std::to_string(strength) +
                      " exceeds the number of code units " +
                      std::to_string(tc.size()));
  }
  CombinationSet out(strength);
  std::array<std::uint32_t, kMaxStrength> tuple{};
  ForEachIndexCombination(
      tc.size(), strength, [&](std::span<const std::uint32_t> idx) {
        for (unsigned k = 0; k < strength; ++k) tuple[k] = tc[idx[k]];
        out.insert({tuple.data(), strength});
      });
  return out;
}

CombinationSet comb_set_union(std::span<const EncodedTest> tests,
                              unsigned strength) {
  CombinationSet out(strength);
  if (tests.empty()) return out;
  const std::size_t m = tests.front().size();
  for (const auto& tc : tests) {
    if (tc.size() != m) {
      throw ShapeError("encoded tests disagree on the number of code units");
    }
  }
  for (const auto& tc : tests) out.merge(comb_set(tc, strength));
  return out;
}

std::size_t ccc_value(const EncodedTest& tc, const CombinationSet& selected,
                      unsigned strength) {
  if (selected.strength() != strength) {
    throw DomainError("selected set has strength " +
                      std::to_string(selected.strength()) + ", expected " +
                      std::to_string(strength));
  }
  std::size_t missing = 0;
  for (const auto& tuple : comb_set(tc, strength)) {
    if (!selected.contains({tuple.data(), strength})) ++missing;
  }
  return missing;
}

}  // namespace cccp
