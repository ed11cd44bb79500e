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

// cccp: test-case prioritization command-line tool.
//
//   cccp prioritize    --coverage F --technique T [--strength L] [--seed S]
//                      [--format csv|json]
//   cccp evaluate      --coverage F --faults K [--costs C] --order O
//   cccp compare       --coverage F --faults K [--costs C] --config Y
//   cccp reduce-faults --faults K
//
// Exit codes: 0 success, 2 input/format error, 3 config error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cccp/errors.hpp"
#include "cccp/experiment.hpp"
#include "cccp/fault_reduction.hpp"
#include "cccp/io.hpp"
#include "cccp/metrics.hpp"
#include "cccp/prioritizers.hpp"
#include "cccp/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;

std::string Real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Label(const cccp::CoverageMatrix& matrix, cccp::TestIndex t) {
  return matrix.test_labels().empty() ? std::to_string(t)
                                      : matrix.test_labels()[t];
}

struct PrioritizeArgs {
  std::string coverage;
  std::string technique = "cccp";
  unsigned strength = 1;
  std::uint64_t seed = 0;
  std::string format = "csv";
  cccp::ArtParams art;
  cccp::GaParams ga;
};

int RunPrioritize(const PrioritizeArgs& args) {
  const auto technique = cccp::ParseTechnique(args.technique);
  if (!technique) throw cccp::ConfigError("unknown technique '" + args.technique + "'");
  if (*technique == cccp::Technique::kCccp &&
      (args.strength == 0 || args.strength > cccp::kMaxStrength)) {
    throw cccp::ConfigError("--strength must lie in [1, " +
                            std::to_string(cccp::kMaxStrength) + "]");
  }
  args.art.Validate();
  args.ga.Validate();
  const cccp::CoverageMatrix matrix = cccp::load_coverage(args.coverage);

  cccp::PrioritizerConfig config;
  config.technique = *technique;
  config.strength = args.strength;
  config.art = args.art;
  config.ga = args.ga;
  const cccp::PrioritizedOrder order = cccp::prioritize(matrix, config, args.seed);

  if (args.format == "json") {
    nlohmann::json doc;
    doc["technique"] = cccp::TechniqueName(order.technique);
    if (order.technique == cccp::Technique::kCccp) doc["strength"] = order.strength;
    doc["seed"] = order.seed;
    doc["indices"] = order.order;
    doc["order"] = nlohmann::json::array();
    for (const auto t : order.order) doc["order"].push_back(Label(matrix, t));
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "position,index,label\n";
    for (std::size_t i = 0; i < order.order.size(); ++i) {
      std::cout << i + 1 << ',' << order.order[i] << ','
                << Label(matrix, order.order[i]) << '\n';
    }
  }
  return 0;
}

cccp::FaultData LoadFaultsFor(const cccp::CoverageMatrix& matrix,
                              const std::string& faults,
                              const std::string& costs) {
  cccp::FaultData data = cccp::load_faults(
      faults, costs.empty() ? std::nullopt
                            : std::optional<std::filesystem::path>(costs));
  if (data.n_tests() != matrix.n_tests()) {
    throw cccp::ShapeError("coverage has " + std::to_string(matrix.n_tests()) +
                           " tests but the kill matrix has " +
                           std::to_string(data.n_tests()));
  }
  return data;
}

int RunEvaluate(const std::string& coverage, const std::string& faults,
                const std::string& costs, const std::string& order_path,
                const std::string& format) {
  const cccp::CoverageMatrix matrix = cccp::load_coverage(coverage);
  const cccp::FaultData data = LoadFaultsFor(matrix, faults, costs);
  const std::vector<cccp::TestIndex> order = cccp::load_order(order_path, matrix);
  const double apfd = cccp::apfd(order, data);
  const double apfd_c = cccp::apfd_c(order, data);
  if (format == "json") {
    std::cout << nlohmann::json{{"apfd", apfd}, {"apfd_c", apfd_c}}.dump(2)
              << '\n';
  } else {
    std::cout << "apfd," << Real(apfd) << "\napfd_c," << Real(apfd_c) << '\n';
  }
  return 0;
}

struct CompareArgs {
  std::string coverage;
  std::string faults;
  std::string costs;
  std::string config;
  std::string csv;
  std::string json;
  std::size_t workers = 0;
  bool reduce = false;
};

int RunCompare(const CompareArgs& args) {
  cccp::ExperimentConfig config = cccp::LoadExperimentConfig(args.config);
  if (!args.csv.empty()) config.csv_path = args.csv;
  if (!args.json.empty()) config.json_path = args.json;
  if (args.workers != 0) config.workers = args.workers;

  const cccp::CoverageMatrix matrix = cccp::load_coverage(args.coverage);
  cccp::FaultData data = LoadFaultsFor(matrix, args.faults, args.costs);
  if (args.reduce) data = cccp::reduce_faults(data);

  const cccp::RunReport report = cccp::run_experiment(matrix, data, config);
  cccp::emit_report(report, config.csv_path, config.json_path, config.timings);

  const cccp::ReportSummary summary = cccp::Summarize(report, config.timings);
  std::printf("%-12s %10s %10s %10s %10s\n", "technique", "apfd", "median",
              "apfd_c", "median");
  for (const auto& arm : summary.arms) {
    std::printf("%-12s %10.4f %10.4f %10.4f %10.4f\n", arm.name.c_str(),
                arm.apfd.mean, arm.apfd.median, arm.apfd_c.mean,
                arm.apfd_c.median);
  }
  for (const auto& cmp : summary.comparisons) {
    std::printf("%s vs %s [%s]: p=%.4g a12=%.4f %s\n", cmp.subject.c_str(),
                cmp.baseline.c_str(), cmp.metric.c_str(), cmp.result.p_value,
                cmp.result.a12,
                std::string(cccp::VerdictName(cmp.result.verdict)).c_str());
  }
  return 0;
}

int RunReduce(const std::string& faults, const std::string& output,
              const std::string& format) {
  const cccp::FaultData data = cccp::load_faults(faults);
  const cccp::FaultData reduced = cccp::reduce_faults(data);
  const cccp::TableFormat fmt =
      format == "json" ? cccp::TableFormat::kJson : cccp::TableFormat::kCsv;
  std::cerr << "kept " << reduced.n_faults() << " of " << data.n_faults()
            << " faults\n";
  if (output.empty()) {
    cccp::write_faults(std::cout, reduced, fmt);
    return 0;
  }
  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  if (!out) throw cccp::IoError("cannot write '" + output + "'");
  cccp::write_faults(out, reduced, fmt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverage-based regression test prioritization"};
  app.require_subcommand(1);

  PrioritizeArgs pargs;
  auto* prioritize = app.add_subcommand("prioritize", "Print a prioritized test order");
  prioritize->add_option("--coverage", pargs.coverage, "Coverage matrix (csv or json)")
      ->required()
      ;
  prioritize->add_option("--technique", pargs.technique,
                         "total, additional, art, search or cccp")
      ->required();
  prioritize->add_option("--strength", pargs.strength, "cccp combination strength")
      ->capture_default_str();
  prioritize->add_option("--seed", pargs.seed, "Random seed")->capture_default_str();
  prioritize->add_option("--format", pargs.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  prioritize->add_option("--art-candidates", pargs.art.candidate_set_size,
                         "ART candidate set size")
      ->capture_default_str();
  prioritize->add_option("--ga-population", pargs.ga.population)->capture_default_str();
  prioritize->add_option("--ga-generations", pargs.ga.generations)->capture_default_str();
  prioritize->add_option("--ga-crossover", pargs.ga.crossover_rate)->capture_default_str();
  prioritize->add_option("--ga-mutation", pargs.ga.mutation_rate)->capture_default_str();
  prioritize->add_option("--ga-elites", pargs.ga.elites)->capture_default_str();

  std::string ecoverage, efaults, ecosts, eorder, eformat = "csv";
  auto* evaluate = app.add_subcommand("evaluate", "Score an order with APFD and APFDc");
  evaluate->add_option("--coverage", ecoverage)->required();
  evaluate->add_option("--faults", efaults, "Kill matrix")->required();
  evaluate->add_option("--costs", ecosts, "Per-test costs");
  evaluate->add_option("--order", eorder, "Order file")->required();
  evaluate->add_option("--format", eformat)->check(CLI::IsMember({"csv", "json"}));

  CompareArgs cargs;
  auto* compare = app.add_subcommand("compare", "Run the repeated-run comparison");
  compare->add_option("--coverage", cargs.coverage)->required();
  compare->add_option("--faults", cargs.faults)->required();
  compare->add_option("--costs", cargs.costs);
  compare->add_option("--config", cargs.config, "Experiment config (JSON)")
      ->required()
      ;
  compare->add_option("--csv", cargs.csv, "Per-run CSV report (overrides config)");
  compare->add_option("--json", cargs.json, "Summary JSON report (overrides config)");
  compare->add_option("--workers", cargs.workers, "Worker threads (overrides config)");
  compare->add_flag("--reduce", cargs.reduce, "Drop duplicate and subsumed faults first");

  std::string rfaults, routput, rformat = "csv";
  auto* reduce = app.add_subcommand("reduce-faults", "Emit the reduced kill matrix");
  reduce->add_option("--faults", rfaults)->required();
  reduce->add_option("--output", routput, "Write here instead of stdout");
  reduce->add_option("--format", rformat)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*prioritize) return RunPrioritize(pargs);
    if (*evaluate) return RunEvaluate(ecoverage, efaults, ecosts, eorder, eformat);
    if (*compare) return RunCompare(cargs);
    if (*reduce) return RunReduce(rfaults, routput, rformat);
  } catch (const cccp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
