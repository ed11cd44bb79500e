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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cccp/coverage.hpp"
#include "cccp/metrics.hpp"

namespace cccp {

enum class TableFormat { kCsv, kJson };

/// Picks the format from the file extension: ".json" is JSON, anything else
/// is CSV.
TableFormat FormatFromPath(const std::filesystem::path& path);

// CSV dialect shared by every table: comma separated, UTF-8, LF or CRLF line
// ends, blank lines and lines starting with '#' ignored. Each data row is a
// row label followed by 0/1 cells. The first row is a header of column
// labels when any of its cells after the first is not 0/1.
//
// JSON tables are objects {"<columns>": [...], "tests": [...], "rows":
// [[0, 1, ...], ...]} with both label arrays optional; <columns> is "units"
// for coverage and "faults" for kill matrices.

/// Throws IoError when the file cannot be read, FormatError on malformed
/// content (with line/column diagnostics for CSV), ShapeError/DomainError on
/// invalid labels.
CoverageMatrix load_coverage(const std::filesystem::path& path,
                             std::optional<TableFormat> format = std::nullopt);
CoverageMatrix parse_coverage(std::istream& in, TableFormat format);

void write_coverage(std::ostream& out, const CoverageMatrix& matrix,
                    TableFormat format);

/// Loads a kill matrix and optional costs. Fault columns that no test
/// detects are dropped; one warning per dropped column is appended to
/// `warnings`, or printed to stderr when `warnings` is null. Without a cost
/// file every test costs 1.
///
/// Cost files hold one cost per line, optionally as `label,cost`. When every
/// line is labelled and the labels match the kill matrix's test labels, costs
/// are matched by label; otherwise they are taken in row order.
FaultData load_faults(const std::filesystem::path& kill_path,
                      const std::optional<std::filesystem::path>& cost_path =
                          std::nullopt,
                      std::vector<std::string>* warnings = nullptr);
FaultData parse_faults(std::istream& kills, TableFormat format,
                       std::istream* costs = nullptr,
                       std::vector<std::string>* warnings = nullptr);

void write_faults(std::ostream& out, const FaultData& faults,
                  TableFormat format);

/// Reads a test order. Accepts the JSON written by `cccp prioritize`
/// (its "indices" array), the CSV it writes (header position,index,label),
/// or a plain list of tokens separated by whitespace or commas where each
/// token is a test label of `matrix` or a 0-based index.
std::vector<TestIndex> load_order(const std::filesystem::path& path,
                                  const CoverageMatrix& matrix);
std::vector<TestIndex> parse_order(std::istream& in,
                                   const CoverageMatrix& matrix);

}  // namespace cccp
