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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cccp/coverage.hpp"
#include "cccp/metrics.hpp"
#include "cccp/prioritizers.hpp"
#include "cccp/stats.hpp"

namespace cccp {

/// Repeated-run comparison protocol.
struct ExperimentConfig {
  std::vector<Technique> techniques{Technique::kTotal, Technique::kAdditional,
                                    Technique::kArt, Technique::kSearch,
                                    Technique::kCccp};
  std::vector<unsigned> strengths{1};  // one cccp arm per strength
  std::size_t repetitions = 1000;
  std::uint64_t base_seed = 0;
  double alpha = kDefaultAlpha;
  ArtParams art;
  GaParams ga;
  std::size_t workers = 1;
  bool timings = true;  // record wall time columns in the reports
  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> json_path;

  /// Throws ConfigError.
  void Validate() const;
};

/// Parses a JSON config. Recognised keys: techniques, strengths,
/// repetitions, base_seed, alpha, workers, timings, art
/// {candidate_set_size}, ga {population, generations, crossover_rate,
/// mutation_rate, elites}, output {csv, json}. Missing keys keep their
/// defaults; unknown keys are rejected. Throws ConfigError.
ExperimentConfig ParseExperimentConfig(const std::string& json_text);
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);

struct Sample {
  std::uint64_t seed = 0;
  double apfd = 0.0;
  double apfd_c = 0.0;
  std::chrono::nanoseconds wall_time{0};
};

/// One technique instance ("arm"); cccp contributes one arm per strength,
/// named "cccp-<strength>".
struct ArmResult {
  std::string name;
  Technique technique = Technique::kTotal;
  unsigned strength = 0;
  std::vector<Sample> samples;  // indexed by repetition
};

struct PairComparison {
  std::string subject;   // a cccp arm
  std::string baseline;  // any other arm
  std::string metric;    // "apfd" or "apfd_c"
  ComparisonVerdict result;

  friend bool operator==(const PairComparison&,
                         const PairComparison&) = default;
};

struct RunReport {
  std::size_t repetitions = 0;
  std::uint64_t base_seed = 0;
  double alpha = kDefaultAlpha;
  std::vector<ArmResult> arms;
  std::vector<PairComparison> comparisons;
};

/// Seed of repetition `repetition` of an arm: base_seed XOR a hash of
/// (technique name, strength, repetition). Strength is 0 outside cccp.
std::uint64_t DeriveSeed(std::uint64_t base_seed, Technique technique,
                         unsigned strength, std::size_t repetition);

/// Runs every arm `config.repetitions` times on a pool of `config.workers`
/// threads, scores each order with apfd and apfd_c, then compares every
/// cccp arm with every other arm. The result does not depend on the worker
/// count or on scheduling. Throws ShapeError when the matrix and the kill
/// matrix disagree on the number of tests.
RunReport run_experiment(const CoverageMatrix& matrix, const FaultData& faults,
                         const ExperimentConfig& config);

}  // namespace cccp
