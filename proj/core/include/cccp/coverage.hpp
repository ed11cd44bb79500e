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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "cccp/combinations.hpp"

namespace cccp {

using TestIndex = std::size_t;

/// Binary "test covers code unit" relation for a regression suite.
///
/// Rows are tests, columns are code units (statements, branches, methods).
/// Rows are stored bit-packed, 64 units per word, so that set algebra over
/// units is word-parallel. Immutable after construction.
class CoverageMatrix {
 public:
  /// Builds a matrix from 0/1 rows. Throws ShapeError on an empty matrix,
  /// ragged rows or label lists of the wrong length, DomainError on a cell
  /// other than 0/1 or on duplicate labels.
  static CoverageMatrix FromRows(
      const std::vector<std::vector<std::uint8_t>>& rows,
      std::vector<std::string> test_labels = {},
      std::vector<std::string> unit_labels = {});

  std::size_t n_tests() const noexcept { return n_tests_; }
  std::size_t n_units() const noexcept { return n_units_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  bool covers(TestIndex test, std::size_t unit) const;

  /// Number of units covered by `test`.
  std::size_t covered_count(TestIndex test) const;

  /// Packed row; bits past n_units() are zero.
  std::span<const std::uint64_t> row_bits(TestIndex test) const;

  const std::vector<std::string>& test_labels() const noexcept {
    return test_labels_;
  }
  const std::vector<std::string>& unit_labels() const noexcept {
    return unit_labels_;
  }

  friend bool operator==(const CoverageMatrix&,
                         const CoverageMatrix&) = default;

 private:
  CoverageMatrix() = default;

  std::size_t n_tests_ = 0;
  std::size_t n_units_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> test_labels_;
  std::vector<std::string> unit_labels_;
};

/// A test rewritten as an abstract test case over its code units: position i
/// (0-based) holds 2i+1 when unit i is covered and 2i+2 when it is not, so
/// odd means covered and the tuple is strictly increasing.
class EncodedTest {
 public:
  /// Validates the odd/even position invariant; throws DomainError.
  explicit EncodedTest(std::vector<std::uint32_t> values);

  std::span<const std::uint32_t> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::uint32_t operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const EncodedTest&, const EncodedTest&) = default;

 private:
  std::vector<std::uint32_t> values_;
};

/// Fixed-width tuple of encoded values; slots past the strength are zero.
using CombinationTuple = std::array<std::uint32_t, kMaxStrength>;

struct CombinationTupleHash {
  std::size_t operator()(const CombinationTuple& t) const noexcept;
};

/// A set of strength-wise code-unit-value combinations.
///
/// The strength is fixed at construction. Every stored tuple holds exactly
/// `strength` strictly increasing encoded values.
class CombinationSet {
 public:
  using Storage = std::unordered_set<CombinationTuple, CombinationTupleHash>;

  /// Throws DomainError unless 1 <= strength <= kMaxStrength.
  explicit CombinationSet(unsigned strength);

  unsigned strength() const noexcept { return strength_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  bool empty() const noexcept { return tuples_.empty(); }

  /// Inserts a tuple; throws DomainError if its width differs from the
  /// strength or its values are not strictly increasing.
  bool insert(std::span<const std::uint32_t> tuple);
  bool contains(std::span<const std::uint32_t> tuple) const;

  /// In-place union. Throws DomainError on strength mismatch.
  void merge(const CombinationSet& other);

  Storage::const_iterator begin() const { return tuples_.begin(); }
  Storage::const_iterator end() const { return tuples_.end(); }

  friend bool operator==(const CombinationSet& a, const CombinationSet& b) {
    return a.strength_ == b.strength_ && a.tuples_ == b.tuples_;
  }

 private:
  unsigned strength_;
  Storage tuples_;
};

/// Encodes row `row` of `matrix`. Throws IndexError when out of range.
EncodedTest encode_test(const CoverageMatrix& matrix, TestIndex row);

/// All C(m, strength) index-increasing tuples drawn from `tc`.
/// Throws DomainError for strength 0, above m, or above kMaxStrength.
CombinationSet comb_set(const EncodedTest& tc, unsigned strength);

/// Union of comb_set over `tests`. Throws ShapeError when tests disagree on
/// m, DomainError on an invalid strength.
CombinationSet comb_set_union(std::span<const EncodedTest> tests,
                              unsigned strength);

/// Number of strength-wise combinations of `tc` absent from `selected`.
/// Uncovered (even) values participate like covered ones.
std::size_t ccc_value(const EncodedTest& tc, const CombinationSet& selected,
                      unsigned strength);

}  // namespace cccp
