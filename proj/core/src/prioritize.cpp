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

#include <array>
#include <utility>

#include "cccp/prioritizers.hpp"

namespace cccp {
namespace {

constexpr std::array<std::pair<Technique, std::string_view>, 5> kNames{{
    {Technique::kTotal, "total"},
    {Technique::kAdditional, "additional"},
    {Technique::kArt, "art"},
    {Technique::kSearch, "search"},
    {Technique::kCccp, "cccp"},
}};

}  // namespace

std::string_view TechniqueName(Technique technique) {
  for (const auto& [t, name] : kNames) {
    if (t == technique) return name;
  }
  return "unknown";
}

std::optional<Technique> ParseTechnique(std::string_view name) {
  for (const auto& [t, n] : kNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

PrioritizedOrder prioritize(const CoverageMatrix& matrix,
                            const PrioritizerConfig& config,
                            std::uint64_t seed) {
  RngStream rng(seed);
  switch (config.technique) {
    case Technique::kTotal:
      return prioritize_total(matrix, rng);
    case Technique::kAdditional:
      return prioritize_additional(matrix, rng);
    case Technique::kArt:
      return prioritize_art(matrix, rng, config.art);
    case Technique::kSearch:
      return prioritize_search(matrix, rng, config.ga);
    case Technique::kCccp:
      return prioritize_cccp(matrix, config.strength, rng);
  }
  return prioritize_total(matrix, rng);
}

}  // namespace cccp
