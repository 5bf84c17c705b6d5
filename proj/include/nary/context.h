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
#include <vector>

#include "nary/value.h"

namespace nary {

struct CtxEntry {
  std::string name;
  Value type;  // may be null for binders introduced by eta in the unifier
  bool defined = false;
  bool hidden = false;  // inserted by elaboration; not visible to names
};

/// Typed local scope. `env` maps de Bruijn levels to values: bound entries
/// evaluate to themselves, let-defined entries to their definitions.
struct Ctx {
  std::vector<CtxEntry> entries;
  Env env;

  int depth() const { return static_cast<int>(entries.size()); }
  Ctx bind(std::string name, Value type, bool hidden = false) const;
  Ctx define(std::string name, Value type, Value value) const;
  std::vector<std::string> names() const;
  /// Level of the innermost visible entry called `name`, or -1.
  int lookup(const std::string& name) const;
  /// Levels of the entries that are bound rather than defined.
  std::vector<int> bound_levels() const;
};

}  // namespace nary
