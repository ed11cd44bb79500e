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

#include "cccp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "cccp/errors.hpp"

namespace cccp {
namespace {

using Json = nlohmann::json;

struct BinaryTable {
  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
};

std::string Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits one CSV record. Double-quoted fields may contain commas; a doubled
// quote inside them is a literal quote.
std::vector<std::string> SplitCsv(std::string_view line, std::size_t line_no) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"' && Trim(cell).empty()) {
      quoted = true;
      was_quoted = true;
      cell.clear();
    } else if (c == ',') {
      cells.push_back(was_quoted ? cell : Trim(cell));
      cell.clear();
      was_quoted = false;
    } else {
      cell += c;
    }
  }
  if (quoted) throw FormatError("unterminated quoted field", line_no);
  cells.push_back(was_quoted ? cell : Trim(cell));
  return cells;
}

struct CsvLine {
  std::size_t number;
  std::vector<std::string> cells;
};

std::vector<CsvLine> ReadCsv(std::istream& in) {
  std::vector<CsvLine> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (number == 1 && raw.rfind("\xEF\xBB\xBF", 0) == 0) raw.erase(0, 3);
    const std::string trimmed = Trim(raw);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    lines.push_back({number, SplitCsv(raw, number)});
  }
  return lines;
}

bool IsBinary(const std::string& cell) { return cell == "0" || cell == "1"; }

BinaryTable ParseCsvTable(std::istream& in, const char* what) {
  const std::vector<CsvLine> lines = ReadCsv(in);
  if (lines.empty()) throw FormatError(std::string(what) + " file is empty");

  BinaryTable table;
  std::size_t first_data = 0;
  const auto& head = lines.front().cells;
  const bool has_header =
      std::any_of(head.begin() + 1, head.end(),
                  [](const std::string& c) { return !IsBinary(c); });
  if (has_header) {
    table.column_labels.assign(head.begin() + 1, head.end());
    first_data = 1;
  }
  if (first_data >= lines.size()) {
    throw FormatError(std::string(what) + " file has a header but no rows",
                      lines.front().number);
  }

  const std::size_t width = lines[first_data].cells.size();
  if (width < 2) {
    throw FormatError("row needs a test label and at least one cell",
                      lines[first_data].number);
  }
  if (has_header && head.size() != width) {
    throw FormatError("header has " + std::to_string(head.size() - 1) +
                          " column labels but rows have " +
                          std::to_string(width - 1) + " cells",
                      lines.front().number);
  }
  for (std::size_t i = first_data; i < lines.size(); ++i) {
    const CsvLine& line = lines[i];
    if (line.cells.size() != width) {
      throw FormatError("expected " + std::to_string(width) +
                            " fields, found " +
                            std::to_string(line.cells.size()),
                        line.number);
    }
    std::vector<std::uint8_t> row(width - 1);
    for (std::size_t c = 1; c < width; ++c) {
      const std::string& cell = line.cells[c];
      if (!IsBinary(cell)) {
        throw FormatError("cell value '" + cell + "' is not 0 or 1",
                          line.number, c + 1);
      }
      row[c - 1] = cell == "1" ? 1 : 0;
    }
    table.row_labels.push_back(line.cells.front());
    table.rows.push_back(std::move(row));
  }
  return table;
}

BinaryTable ParseJsonTable(std::istream& in, const char* columns_key,
                           const char* what) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string(what) + " JSON is malformed: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw FormatError(std::string(what) +
                      " JSON must be an object with a \"rows\" array");
  }
  BinaryTable table;
  const auto labels = [&](const char* key) {
    std::vector<std::string> out;
    if (!doc.contains(key)) return out;
    if (!doc[key].is_array()) {
      throw FormatError(std::string("\"") + key + "\" must be an array");
    }
    for (const auto& v : doc[key]) {
      if (!v.is_string()) {
        throw FormatError(std::string("\"") + key + "\" entries must be strings");
      }
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  table.row_labels = labels("tests");
  table.column_labels = labels(columns_key);

  const auto& rows = doc["rows"];
  if (rows.empty()) throw FormatError(std::string(what) + " has no rows");
  std::size_t width = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array()) {
      throw FormatError("row " + std::to_string(r) + " is not an array");
    }
    if (r == 0) width = rows[r].size();
    if (rows[r].size() != width) {
      throw FormatError("row " + std::to_string(r) + " has " +
                        std::to_string(rows[r].size()) + " cells, expected " +
                        std::to_string(width));
    }
    std::vector<std::uint8_t> row(width);
    for (std::size_t c = 0; c < width; ++c) {
      const auto& v = rows[r][c];
      if (!v.is_number_integer() || (v.get<long long>() != 0 &&
                                     v.get<long long>() != 1)) {
        throw FormatError("cell [" + std::to_string(r) + "][" +
                          std::to_string(c) + "] is not 0 or 1");
      }
      row[c] = static_cast<std::uint8_t>(v.get<int>());
    }
    table.rows.push_back(std::move(row));
  }
  if (width == 0) throw FormatError(std::string(what) + " rows are empty");
  return table;
}

BinaryTable ParseTable(std::istream& in, TableFormat format,
                       const char* columns_key, const char* what) {
  return format == TableFormat::kJson ? ParseJsonTable(in, columns_key, what)
                                      : ParseCsvTable(in, what);
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

std::string QuoteCsv(const std::string& s) {
  if (s.find_first_of(",\"\n\r#") == std::string::npos &&
      Trim(s).size() == s.size()) {
    return s;
  }
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void WriteTable(std::ostream& out, TableFormat format,
                const std::vector<std::vector<std::uint8_t>>& rows,
                const std::vector<std::string>& row_labels,
                const std::vector<std::string>& column_labels,
                const char* columns_key) {
  if (format == TableFormat::kJson) {
    Json doc = Json::object();
    if (!row_labels.empty()) doc["tests"] = row_labels;
    if (!column_labels.empty()) doc[columns_key] = column_labels;
    doc["rows"] = Json::array();
    for (const auto& row : rows) {
      Json r = Json::array();
      for (const auto cell : row) r.push_back(static_cast<int>(cell));
      doc["rows"].push_back(std::move(r));
    }
    out << doc.dump(2) << '\n';
    return;
  }
  if (!column_labels.empty()) {
    out << "test";
    for (const auto& label : column_labels) out << ',' << QuoteCsv(label);
    out << '\n';
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << (row_labels.empty() ? "t" + std::to_string(r)
                               : QuoteCsv(row_labels[r]));
    for (const auto cell : rows[r]) out << ',' << static_cast<int>(cell);
    out << '\n';
  }
}

std::optional<double> ParseDouble(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

std::vector<double> ParseCosts(std::istream& in,
                               const std::vector<std::string>& test_labels,
                               std::size_t n_tests) {
  const std::vector<CsvLine> lines = ReadCsv(in);
  std::vector<double> values;
  std::vector<std::string> labels;
  bool all_labelled = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const CsvLine& line = lines[i];
    if (line.cells.size() > 2) {
      throw FormatError("cost line must be 'cost' or 'label,cost'",
                        line.number);
    }
    const std::string& text = line.cells.back();
    const auto value = ParseDouble(text);
    if (!value) {
      // A leading non-numeric line such as "test,cost" is a header.
      if (i == 0) continue;
      throw FormatError("cost '" + text + "' is not a number", line.number,
                        line.cells.size());
    }
    if (!(std::isfinite(*value) && *value > 0.0)) {
      throw FormatError("cost " + text + " must be positive", line.number,
                        line.cells.size());
    }
    values.push_back(*value);
    if (line.cells.size() == 2) {
      labels.push_back(line.cells.front());
    } else {
      all_labelled = false;
    }
  }
  if (values.size() != n_tests) {
    throw ShapeError("cost file lists " + std::to_string(values.size()) +
                     " costs for " + std::to_string(n_tests) + " tests");
  }
  if (!all_labelled || test_labels.empty()) return values;

  std::unordered_map<std::string, double> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]] = values[i];
  std::vector<double> mapped;
  for (const auto& label : test_labels) {
    const auto it = by_label.find(label);
    if (it == by_label.end()) return values;  // labels do not line up
    mapped.push_back(it->second);
  }
  return mapped;
}

}  // namespace

TableFormat FormatFromPath(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".json" ? TableFormat::kJson : TableFormat::kCsv;
}

CoverageMatrix parse_coverage(std::istream& in, TableFormat format) {
  BinaryTable table = ParseTable(in, format, "units", "coverage");
  return CoverageMatrix::FromRows(table.rows, std::move(table.row_labels),
                                  std::move(table.column_labels));
}

CoverageMatrix load_coverage(const std::filesystem::path& path,
                             std::optional<TableFormat> format) {
  std::ifstream in = OpenInput(path);
  return parse_coverage(in, format.value_or(FormatFromPath(path)));
}

void write_coverage(std::ostream& out, const CoverageMatrix& matrix,
                    TableFormat format) {
  std::vector<std::vector<std::uint8_t>> rows(
      matrix.n_tests(), std::vector<std::uint8_t>(matrix.n_units()));
  for (TestIndex t = 0; t < matrix.n_tests(); ++t) {
    for (std::size_t u = 0; u < matrix.n_units(); ++u) {
      rows[t][u] = matrix.covers(t, u) ? 1 : 0;
    }
  }
  WriteTable(out, format, rows, matrix.test_labels(), matrix.unit_labels(),
             "units");
}

FaultData parse_faults(std::istream& kills, TableFormat format,
                       std::istream* costs,
                       std::vector<std::string>* warnings) {
  BinaryTable table = ParseTable(kills, format, "faults", "kill matrix");
  const std::size_t n = table.rows.size();
  const std::size_t k = table.rows.front().size();

  std::vector<std::size_t> detected;
  for (std::size_t f = 0; f < k; ++f) {
    const bool any = std::any_of(table.rows.begin(), table.rows.end(),
                                 [f](const auto& row) { return row[f] != 0; });
    if (any) {
      detected.push_back(f);
      continue;
    }
    const std::string name = table.column_labels.empty()
                                 ? "#" + std::to_string(f)
                                 : "'" + table.column_labels[f] + "'";
    const std::string message =
        "fault " + name + " is not detected by any test; dropped";
    if (warnings != nullptr) {
      warnings->push_back(message);
    } else {
      std::cerr << "warning: " << message << '\n';
    }
  }

  std::vector<double> cost_values;
  if (costs != nullptr) cost_values = ParseCosts(*costs, table.row_labels, n);

  FaultData all = FaultData::Create(table.rows, std::move(cost_values),
                                    std::move(table.row_labels),
                                    std::move(table.column_labels));
  if (detected.size() == k) return all;
  return all.select_faults(detected);
}

FaultData load_faults(const std::filesystem::path& kill_path,
                      const std::optional<std::filesystem::path>& cost_path,
                      std::vector<std::string>* warnings) {
  std::ifstream kills = OpenInput(kill_path);
  if (!cost_path) {
    return parse_faults(kills, FormatFromPath(kill_path), nullptr, warnings);
  }
  std::ifstream costs = OpenInput(*cost_path);
  return parse_faults(kills, FormatFromPath(kill_path), &costs, warnings);
}

void write_faults(std::ostream& out, const FaultData& faults,
                  TableFormat format) {
  WriteTable(out, format, faults.kill_rows(), faults.test_labels(),
             faults.fault_labels(), "faults");
}

std::vector<TestIndex> parse_order(std::istream& in,
                                   const CoverageMatrix& matrix) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  const std::string trimmed = Trim(text);
  std::vector<TestIndex> order;

  const auto index_of = [&](const std::string& token) -> TestIndex {
    const auto& labels = matrix.test_labels();
    const auto it = std::find(labels.begin(), labels.end(), token);
    if (it != labels.end()) return static_cast<TestIndex>(it - labels.begin());
    TestIndex value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw FormatError("order entry '" + token +
                        "' is neither a test label nor an index");
    }
    if (value >= matrix.n_tests()) {
      throw FormatError("order index " + token + " is out of range");
    }
    return value;
  };

  if (!trimmed.empty() && trimmed.front() == '{') {
    Json doc;
    try {
      doc = Json::parse(trimmed);
    } catch (const Json::parse_error& e) {
      throw FormatError(std::string("order JSON is malformed: ") + e.what());
    }
    if (!doc.contains("indices") || !doc["indices"].is_array()) {
      throw FormatError("order JSON needs an \"indices\" array");
    }
    for (const auto& v : doc["indices"]) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= matrix.n_tests()) {
        throw FormatError("order JSON index out of range");
      }
      order.push_back(v.get<TestIndex>());
    }
    return order;
  }

  std::istringstream lines(text);
  const std::vector<CsvLine> csv = ReadCsv(lines);
  const bool prioritize_csv =
      !csv.empty() && csv.front().cells.size() >= 2 &&
      csv.front().cells[0] == "position" && csv.front().cells[1] == "index";
  for (std::size_t i = prioritize_csv ? 1 : 0; i < csv.size(); ++i) {
    if (prioritize_csv) {
      if (csv[i].cells.size() < 2) {
        throw FormatError("order row needs position and index", csv[i].number);
      }
      order.push_back(index_of(csv[i].cells[1]));
      continue;
    }
    for (const auto& cell : csv[i].cells) {
      std::istringstream words(cell);
      std::string token;
      while (words >> token) order.push_back(index_of(token));
    }
  }
  return order;
}

std::vector<TestIndex> load_order(const std::filesystem::path& path,
                                  const CoverageMatrix& matrix) {
  std::ifstream in = OpenInput(path);
  return parse_order(in, matrix);
}

}  // namespace cccp
