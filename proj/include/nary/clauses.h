// Copyright 2026 The nary-kernel Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "nary/eval.h"
#include "nary/globals.h"

namespace nary {

enum class ClauseError : std::uint8_t { kOk, kCoverage, kOverlap, kTermination };

struct ClauseCheck {
  ClauseError kind = ClauseError::kOk;
  std::string message;
};

const char* to_string(ClauseError e);

/// Validates coverage, disjointness and structural recursion of `def`, and
/// fills its matched positions and invertibility summary.
ClauseCheck check_clauses(const Session& s, ClauseDef& def);

}  // namespace nary
