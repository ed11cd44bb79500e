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

#include <cstddef>
#include <vector>

#include "cccp/metrics.hpp"

namespace cccp {

/// Indices of the fault columns kept by reduce_faults(), ascending.
std::vector<std::size_t> subsuming_faults(const FaultData& faults);

/// Duplicate and subsumed fault removal.
///
/// Faults with identical kill sets are collapsed to their first column.
/// Then, repeatedly, the remaining fault whose kill set is contained in the
/// kill sets of the most other remaining faults is kept and those faults
/// are discarded (killing it necessarily kills them too). Ties go to the
/// lowest column. Kept faults retain their original column order.
FaultData reduce_faults(const FaultData& faults);

}  // namespace cccp
