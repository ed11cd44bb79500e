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

#include "cccp/coverage.hpp"

namespace cccp::testing {

// Three tests over four units: tc1 covers {1,2,3}, tc2 covers {1,2,4},
// tc3 covers {3,4}. tc1 and tc2 tie on covered units.
inline CoverageMatrix SampleMatrix() {
  return CoverageMatrix::FromRows({{1, 1, 1, 0}, {1, 1, 0, 1}, {0, 0, 1, 1}},
                                  {"tc1", "tc2", "tc3"},
                                  {"u1", "u2", "u3", "u4"});
}

}  // namespace cccp::testing
