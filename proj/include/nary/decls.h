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

#include <optional>
#include <string>
#include <vector>

#include "nary/eval.h"
#include "nary/surface.h"

namespace nary {

enum class DeclStatus : std::uint8_t { kOk, kUnsolved, kTypeError };

const char* to_string(DeclStatus s);

/// Outcome of checking one declaration group.
struct DeclReport {
  std::string name;
  Span span;
  DeclStatus status = DeclStatus::kOk;
  std::string message;               // kTypeError
  int metas = 0;                     // kUnsolved
  int constraints = 0;               // kUnsolved
  std::vector<std::string> details;  // one line per unsolved item
  std::optional<DeclStatus> expect;
  int decl = 0;                      // metacontext declaration id
};

/// Checks declarations in order, registering each successful one in
/// `s.globals`. A type error aborts only its own declaration.
std::vector<DeclReport> check_decls(Session& s, const std::vector<SDecl>& decls);

/// `OK f`, `UNSOLVED f: 2 metas, 1 constraints` or `TYPEERROR f: msg`.
std::string format_report(const DeclReport& r);

}  // namespace nary
