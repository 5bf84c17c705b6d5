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

// Round trip of checked declarations through the printer and the parser.

#pragma once

#include <string>
#include <vector>

#include "nary/elab.h"
#include "nary/pretty.h"
#include "nary/surface.h"
#include "nary/unify.h"

namespace nary::testing {

struct RoundTrip {
  int checked = 0;
  std::vector<std::string> failures;
};

/// Prints a closed core term, parses and re-elaborates it (as a type, or
/// against `type` when given) and compares the zonked result.
inline bool round_trips(Session& s, const Term& t, const Value* type,
                        std::string& why) {
  const std::string text = pretty(t);
  try {
    SPtr e = parse_expr(text);
    s.metas.begin_decl();
    Elaborator el(s);
    Term back = type ? el.check(Ctx{}, e, *type) : el.check_type(Ctx{}, e).first;
    std::string error;
    if (!solve_all(s, error)) {
      why = text + ": " + error;
      return false;
    }
    back = s.metas.zonk(back);
    if (!alpha_equal(back, t, /*ignore_levels=*/true)) {
      why = text + " came back as " + pretty(back);
      return false;
    }
    return true;
  } catch (const ParseError& e) {
    why = text + ": parse error: " + e.what();
  } catch (const ElabError& e) {
    why = text + ": " + e.what();
  }
  return false;
}

/// Round-trips the type of every global and the body of every
/// parameterless definition.
inline RoundTrip round_trip_globals(Session& s) {
  RoundTrip r;
  const std::vector<std::string> names = s.globals.order();
  for (const auto& name : names) {
    const GlobalDef* g = s.globals.find(name);
    if (!g) continue;
    std::string why;
    ++r.checked;
    if (!round_trips(s, g->type, nullptr, why)) {
      r.failures.push_back(name + " : " + why);
    }
    if (g->def && g->def->arity == 0) {
      ++r.checked;
      Value type = g->type_value;
      if (!round_trips(s, g->def->clauses.front().rhs, &type, why)) {
        r.failures.push_back(name + " = " + why);
      }
    }
  }
  return r;
}

}  // namespace nary::testing
