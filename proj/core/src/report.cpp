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

#include "cccp/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "cccp/errors.hpp"

namespace cccp {
namespace {

using Json = nlohmann::json;

std::string Real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

MetricSummary Describe(std::vector<double> values) {
  MetricSummary out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (const double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  out.median = values.size() % 2 == 1 ? values[mid]
                                      : (values[mid - 1] + values[mid]) / 2.0;
  return out;
}

double Millis(std::chrono::nanoseconds ns) {
  return static_cast<double>(ns.count()) / 1e6;
}

}  // namespace

ReportSummary Summarize(const RunReport& report, bool timings) {
  ReportSummary out;
  out.repetitions = report.repetitions;
  out.base_seed = report.base_seed;
  out.alpha = report.alpha;
  for (const auto& arm : report.arms) {
    ArmSummary s;
    s.name = arm.name;
    s.technique = std::string(TechniqueName(arm.technique));
    s.strength = arm.strength;
    s.samples = arm.samples.size();
    std::vector<double> apfd_values;
    std::vector<double> apfdc_values;
    for (const auto& sample : arm.samples) {
      apfd_values.push_back(sample.apfd);
      apfdc_values.push_back(sample.apfd_c);
    }
    s.apfd = Describe(std::move(apfd_values));
    s.apfd_c = Describe(std::move(apfdc_values));
    if (timings && !arm.samples.empty()) {
      double mean = 0.0;
      for (const auto& sample : arm.samples) mean += Millis(sample.wall_time);
      mean /= static_cast<double>(arm.samples.size());
      double sq = 0.0;
      for (const auto& sample : arm.samples) {
        sq += (Millis(sample.wall_time) - mean) * (Millis(sample.wall_time) - mean);
      }
      s.time_mean_ms = mean;
      s.time_stddev_ms =
          arm.samples.size() > 1
              ? std::sqrt(sq / static_cast<double>(arm.samples.size() - 1))
              : 0.0;
    }
    out.arms.push_back(std::move(s));
  }
  out.comparisons = report.comparisons;
  return out;
}

void write_report_csv(std::ostream& out, const RunReport& report,
                      bool timings) {
  out << "technique,repetition,seed,apfd,apfd_c";
  if (timings) out << ",millis";
  out << '\n';
  for (const auto& arm : report.arms) {
    for (std::size_t r = 0; r < arm.samples.size(); ++r) {
      const Sample& s = arm.samples[r];
      out << arm.name << ',' << r << ',' << s.seed << ',' << Real(s.apfd) << ','
          << Real(s.apfd_c);
      if (timings) out << ',' << Real(Millis(s.wall_time));
      out << '\n';
    }
  }
}

void write_report_json(std::ostream& out, const ReportSummary& summary) {
  Json doc;
  doc["repetitions"] = summary.repetitions;
  doc["base_seed"] = summary.base_seed;
  doc["alpha"] = summary.alpha;
  doc["techniques"] = Json::array();
  for (const auto& arm : summary.arms) {
    Json a;
    a["name"] = arm.name;
    a["technique"] = arm.technique;
    a["strength"] = arm.strength;
    a["samples"] = arm.samples;
    a["apfd"] = {{"mean", arm.apfd.mean}, {"median", arm.apfd.median}};
    a["apfd_c"] = {{"mean", arm.apfd_c.mean}, {"median", arm.apfd_c.median}};
    if (arm.time_mean_ms && arm.time_stddev_ms) {
      a["time_ms"] = {{"mean", *arm.time_mean_ms},
                      {"stddev", *arm.time_stddev_ms}};
    }
    doc["techniques"].push_back(std::move(a));
  }
  doc["comparisons"] = Json::array();
  for (const auto& cmp : summary.comparisons) {
    doc["comparisons"].push_back({{"subject", cmp.subject},
                                  {"baseline", cmp.baseline},
                                  {"metric", cmp.metric},
                                  {"p", cmp.result.p_value},
                                  {"a12", cmp.result.a12},
                                  {"verdict", VerdictName(cmp.result.verdict)}});
  }
  out << doc.dump(2) << '\n';
}

ReportSummary parse_report_json(std::istream& in) {
  try {
    const Json doc = Json::parse(in);
    ReportSummary out;
    out.repetitions = doc.at("repetitions").get<std::size_t>();
    out.base_seed = doc.at("base_seed").get<std::uint64_t>();
    out.alpha = doc.at("alpha").get<double>();
    for (const auto& a : doc.at("techniques")) {
      ArmSummary arm;
      arm.name = a.at("name").get<std::string>();
      arm.technique = a.at("technique").get<std::string>();
      arm.strength = a.at("strength").get<unsigned>();
      arm.samples = a.at("samples").get<std::size_t>();
      arm.apfd = {a.at("apfd").at("mean").get<double>(),
                  a.at("apfd").at("median").get<double>()};
      arm.apfd_c = {a.at("apfd_c").at("mean").get<double>(),
                    a.at("apfd_c").at("median").get<double>()};
      if (a.contains("time_ms")) {
        arm.time_mean_ms = a.at("time_ms").at("mean").get<double>();
        arm.time_stddev_ms = a.at("time_ms").at("stddev").get<double>();
      }
      out.arms.push_back(std::move(arm));
    }
    for (const auto& c : doc.at("comparisons")) {
      PairComparison cmp;
      cmp.subject = c.at("subject").get<std::string>();
      cmp.baseline = c.at("baseline").get<std::string>();
      cmp.metric = c.at("metric").get<std::string>();
      cmp.result.p_value = c.at("p").get<double>();
      cmp.result.a12 = c.at("a12").get<double>();
      const auto verdict = ParseVerdict(c.at("verdict").get<std::string>());
      if (!verdict) throw FormatError("unknown verdict in report");
      cmp.result.verdict = *verdict;
      out.comparisons.push_back(std::move(cmp));
    }
    return out;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed report JSON: ") + e.what());
  }
}

void emit_report(const RunReport& report,
                 const std::optional<std::filesystem::path>& csv_path,
                 const std::optional<std::filesystem::path>& json_path,
                 bool timings) {
  const auto open = [](const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    return out;
  };
  if (csv_path) {
    std::ofstream out = open(*csv_path);
    write_report_csv(out, report, timings);
    if (!out) throw IoError("failed writing '" + csv_path->string() + "'");
  }
  if (json_path) {
    std::ofstream out = open(*json_path);
    write_report_json(out, Summarize(report, timings));
    if (!out) throw IoError("failed writing '" + json_path->string() + "'");
  }
}

}  // namespace cccp
