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

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "nary/driver.h"
#include "nary/elab.h"
#include "nary/surface.h"

namespace nary::testing {

/// A checked source file together with the session it was checked in.
struct Checked {
  Session session;
  std::vector<DeclReport> reports;
  std::string output;
  int exit_code = 0;

  const DeclReport* report(const std::string& name) const {
    for (const auto& r : reports) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }
};

inline Options prelude_options(bool with_prelude = true) {
  Options o;
  if (with_prelude) o.prelude = NARY_PRELUDE_PATH;
  return o;
}

inline std::unique_ptr<Checked> check(const std::string& text,
                                      bool with_prelude = true,
                                      Options opts = {}) {
  auto c = std::make_unique<Checked>();
  if (with_prelude) opts.prelude = NARY_PRELUDE_PATH;
  std::ostringstream out;
  if (!load_prelude(c->session, opts, out)) {
    c->output = out.str();
    c->exit_code = 1;
    return c;
  }
  c->exit_code = check_source(c->session, text, opts, out, &c->reports);
  c->output = out.str();
  return c;
}

inline std::string corpus_path(const std::string& rel) {
  return std::string(NARY_CORPUS_DIR) + "/" + rel;
}

/// Elaborates a closed expression in `s` and returns its term and type.
inline std::pair<Term, Value> elaborate(Session& s, const std::string& text) {
  Elaborator el(s);
  s.metas.begin_decl();
  auto out = el.infer(Ctx{}, parse_expr(text));
  std::string error;
  solve_all(s, error);
  return {s.metas.zonk(out.first), out.second};
}

}  // namespace nary::testing
