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

#include <stdexcept>
#include <string>

namespace cccp {

// Error taxonomy. The CLI maps FormatError/ShapeError/IoError to exit code 2
// and ConfigError to exit code 3.

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure in an input file. `row`/`column` are 1-based positions in the
// source file; 0 means "not applicable".
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t row = 0,
              std::size_t column = 0)
      : std::runtime_error(Decorate(what, row, column)),
        row_(row),
        column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string Decorate(const std::string& what, std::size_t row,
                              std::size_t column) {
    if (row == 0) return what;
    std::string out = "line " + std::to_string(row);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t row_;
  std::size_t column_;
};

}  // namespace cccp
