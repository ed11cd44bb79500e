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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cccp/experiment.hpp"

namespace cccp {

struct MetricSummary {
  double mean = 0.0;
  double median = 0.0;

  friend bool operator==(const MetricSummary&, const MetricSummary&) = default;
};

struct ArmSummary {
  std::string name;
  std::string technique;
  unsigned strength = 0;
  std::size_t samples = 0;
  MetricSummary apfd;
  MetricSummary apfd_c;
  // Prioritization time in milliseconds as mean / sample standard deviation;
  // absent when the run was configured without timings.
  std::optional<double> time_mean_ms;
  std::optional<double> time_stddev_ms;

  friend bool operator==(const ArmSummary&, const ArmSummary&) = default;
};

/// The aggregate view written to the JSON report.
struct ReportSummary {
  std::size_t repetitions = 0;
  std::uint64_t base_seed = 0;
  double alpha = 0.0;
  std::vector<ArmSummary> arms;
  std::vector<PairComparison> comparisons;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

ReportSummary Summarize(const RunReport& report, bool timings);

/// One row per (technique, repetition):
///   technique,repetition,seed,apfd,apfd_c[,millis]
/// Reals are printed with 17 significant digits.
void write_report_csv(std::ostream& out, const RunReport& report,
                      bool timings);

/// Summary JSON: means, medians, optional timing and the cccp comparison
/// grid with verdicts "better", "worse" or "tie".
void write_report_json(std::ostream& out, const ReportSummary& summary);

/// Inverse of write_report_json. Throws FormatError.
ReportSummary parse_report_json(std::istream& in);

/// Writes whichever of the two files is requested. Throws IoError when a
/// path cannot be written.
void emit_report(const RunReport& report,
                 const std::optional<std::filesystem::path>& csv_path,
                 const std::optional<std::filesystem::path>& json_path,
                 bool timings);

}  // namespace cccp
