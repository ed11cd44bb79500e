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

#include "cccp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cccp/errors.hpp"
#include "cccp/rng.hpp"

namespace cccp {
namespace {

using Json = nlohmann::json;

struct ArmSpec {
  std::string name;
  Technique technique;
  unsigned strength;
};

std::vector<ArmSpec> Arms(const ExperimentConfig& config) {
  std::vector<ArmSpec> arms;
  for (const Technique t : config.techniques) {
    if (t != Technique::kCccp) {
      arms.push_back({std::string(TechniqueName(t)), t, 0});
      continue;
    }
    for (const unsigned s : config.strengths) {
      arms.push_back({"cccp-" + std::to_string(s), t, s});
    }
  }
  return arms;
}

void CheckKeys(const Json& obj, std::initializer_list<const char*> allowed,
               const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; })) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
T Get(const Json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError("'" + std::string(key) + "' in " + where +
                      " has the wrong type");
  }
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (techniques.empty()) throw ConfigError("no techniques selected");
  const std::set<Technique> unique(techniques.begin(), techniques.end());
  if (unique.size() != techniques.size()) {
    throw ConfigError("techniques are listed more than once");
  }
  if (repetitions == 0) throw ConfigError("repetitions must be at least 1");
  if (unique.count(Technique::kCccp) != 0) {
    if (strengths.empty()) throw ConfigError("cccp needs at least one strength");
    const std::set<unsigned> s(strengths.begin(), strengths.end());
    if (s.size() != strengths.size()) {
      throw ConfigError("strengths are listed more than once");
    }
    for (const unsigned v : strengths) {
      if (v == 0 || v > kMaxStrength) {
        throw ConfigError("strength " + std::to_string(v) +
                          " is outside [1, " + std::to_string(kMaxStrength) +
                          "]");
      }
    }
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1)");
  }
  if (workers == 0) throw ConfigError("workers must be at least 1");
  art.Validate();
  ga.Validate();
}

ExperimentConfig ParseExperimentConfig(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  CheckKeys(doc,
            {"techniques", "strengths", "repetitions", "base_seed", "alpha",
             "workers", "timings", "art", "ga", "output"},
            "config");

  ExperimentConfig config;
  if (doc.contains("techniques")) {
    config.techniques.clear();
    for (const auto& name :
         Get<std::vector<std::string>>(doc, "techniques", "config")) {
      const auto t = ParseTechnique(name);
      if (!t) throw ConfigError("unknown technique '" + name + "'");
      config.techniques.push_back(*t);
    }
  }
  if (doc.contains("strengths")) {
    config.strengths = Get<std::vector<unsigned>>(doc, "strengths", "config");
  }
  if (doc.contains("repetitions")) {
    config.repetitions = Get<std::size_t>(doc, "repetitions", "config");
  }
  if (doc.contains("base_seed")) {
    config.base_seed = Get<std::uint64_t>(doc, "base_seed", "config");
  }
  if (doc.contains("alpha")) config.alpha = Get<double>(doc, "alpha", "config");
  if (doc.contains("workers")) {
    config.workers = Get<std::size_t>(doc, "workers", "config");
  }
  if (doc.contains("timings")) {
    config.timings = Get<bool>(doc, "timings", "config");
  }
  if (doc.contains("art")) {
    const Json& art = doc["art"];
    CheckKeys(art, {"candidate_set_size"}, "art");
    if (art.contains("candidate_set_size")) {
      config.art.candidate_set_size =
          Get<std::size_t>(art, "candidate_set_size", "art");
    }
  }
  if (doc.contains("ga")) {
    const Json& ga = doc["ga"];
    CheckKeys(ga,
              {"population", "generations", "crossover_rate", "mutation_rate",
               "elites"},
              "ga");
    if (ga.contains("population")) {
      config.ga.population = Get<std::size_t>(ga, "population", "ga");
    }
    if (ga.contains("generations")) {
      config.ga.generations = Get<std::size_t>(ga, "generations", "ga");
    }
    if (ga.contains("crossover_rate")) {
      config.ga.crossover_rate = Get<double>(ga, "crossover_rate", "ga");
    }
    if (ga.contains("mutation_rate")) {
      config.ga.mutation_rate = Get<double>(ga, "mutation_rate", "ga");
    }
    if (ga.contains("elites")) {
      config.ga.elites = Get<std::size_t>(ga, "elites", "ga");
    }
  }
  if (doc.contains("output")) {
    const Json& out = doc["output"];
    CheckKeys(out, {"csv", "json"}, "output");
    if (out.contains("csv")) {
      config.csv_path = Get<std::string>(out, "csv", "output");
    }
    if (out.contains("json")) {
      config.json_path = Get<std::string>(out, "json", "output");
    }
  }
  config.Validate();
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseExperimentConfig(buffer.str());
}

std::uint64_t DeriveSeed(std::uint64_t base_seed, Technique technique,
                         unsigned strength, std::size_t repetition) {
  std::uint64_t h = Fnv1a64(TechniqueName(technique));
  h = Mix64(h ^ strength);
  h = Mix64(h ^ static_cast<std::uint64_t>(repetition));
  return base_seed ^ h;
}

RunReport run_experiment(const CoverageMatrix& matrix, const FaultData& faults,
                         const ExperimentConfig& config) {
  config.Validate();
  if (matrix.n_tests() != faults.n_tests()) {
    throw ShapeError("coverage has " + std::to_string(matrix.n_tests()) +
                     " tests but the kill matrix has " +
                     std::to_string(faults.n_tests()));
  }
  const std::vector<ArmSpec> specs = Arms(config);

  RunReport report;
  report.repetitions = config.repetitions;
  report.base_seed = config.base_seed;
  report.alpha = config.alpha;
  for (const auto& spec : specs) {
    ArmResult arm;
    arm.name = spec.name;
    arm.technique = spec.technique;
    arm.strength = spec.strength;
    arm.samples.resize(config.repetitions);
    report.arms.push_back(std::move(arm));
  }

  // Every (arm, repetition) job owns its seed and output slot, so the pool
  // can hand out jobs in any order.
  const std::size_t jobs = specs.size() * config.repetitions;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    while (true) {
      const std::size_t job = next.fetch_add(1);
      if (job >= jobs) return;
      const std::size_t a = job / config.repetitions;
      const std::size_t r = job % config.repetitions;
      try {
        PrioritizerConfig pc;
        pc.technique = specs[a].technique;
        pc.strength = specs[a].strength;
        pc.art = config.art;
        pc.ga = config.ga;
        const std::uint64_t seed =
            DeriveSeed(config.base_seed, specs[a].technique, specs[a].strength, r);
        const PrioritizedOrder order = prioritize(matrix, pc, seed);
        Sample& slot = report.arms[a].samples[r];
        slot.seed = seed;
        slot.apfd = apfd(order, faults);
        slot.apfd_c = apfd_c(order, faults);
        slot.wall_time = order.wall_time;
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(jobs);
      }
    }
  };
  const std::size_t threads = std::min(config.workers, std::max<std::size_t>(jobs, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  const auto column = [](const ArmResult& arm, bool cost_aware) {
    std::vector<double> values;
    values.reserve(arm.samples.size());
    for (const auto& s : arm.samples) values.push_back(cost_aware ? s.apfd_c : s.apfd);
    return values;
  };
  for (const auto& subject : report.arms) {
    if (subject.technique != Technique::kCccp) continue;
    for (const auto& baseline : report.arms) {
      if (&baseline == &subject) continue;
      for (const bool cost_aware : {false, true}) {
        PairComparison cmp;
        cmp.subject = subject.name;
        cmp.baseline = baseline.name;
        cmp.metric = cost_aware ? "apfd_c" : "apfd";
        cmp.result = classify(column(subject, cost_aware),
                              column(baseline, cost_aware), config.alpha);
        report.comparisons.push_back(std::move(cmp));
      }
    }
  }
  return report;
}

}  // namespace cccp
