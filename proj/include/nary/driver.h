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

#include <ostream>
#include <string>
#include <vector>

#include "nary/decls.h"
#include "nary/eval.h"

namespace nary {

struct Options {
  std::string prelude;  // empty: no prelude
  bool trace_unify = false;
  bool print_metas = false;
  std::vector<std::string> nf;
};

/// Parses and checks `text` in `s`, writing the report to `out`. Returns
/// the process exit code: 0 when every declaration met its expectation,
/// 1 otherwise, 2 on a parse error.
int check_source(Session& s, const std::string& text, const Options& opts,
                 std::ostream& out, std::vector<DeclReport>* reports = nullptr);

/// Loads the prelude named in `opts` into `s`. Problems are written to
/// `out`; returns false if the prelude did not check cleanly.
bool load_prelude(Session& s, const Options& opts, std::ostream& out);

/// Re-checks every solved constraint with plain conversion and every solved
/// metavariable against its type with the core checker. Returns one line
/// per violation.
std::vector<std::string> validate(Session& s);

std::string read_file(const std::string& path);

}  // namespace nary
