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

#include "nary/driver.h"

#include <fmt/format.h>

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "nary/core_check.h"
#include "nary/pretty.h"
#include "nary/unify.h"

namespace nary {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

bool parse(const std::string& text, std::vector<SDecl>& decls,
           std::ostream& out, const std::string& what) {
  try {
    decls = parse_file(text);
    return true;
  } catch (const ParseError& e) {
    out << fmt::format("parse error in {} at {}:{}: {}\n", what, e.span.line,
                       e.span.col, e.what());
    return false;
  }
}

void print_nf(Session& s, const std::string& name, std::ostream& out) {
  const GlobalDef* g = s.globals.find(name);
  if (!g) {
    out << fmt::format("nf {}: not defined\n", name);
    return;
  }
  out << fmt::format("{} : {}\n", name, pretty(nf(s, {}, g->type)));
  if (g->def && g->def->arity == 0) {
    out << fmt::format("{} = {}\n", name,
                       pretty(nf(s, {}, g->def->clauses.front().rhs)));
  }
}

void print_metas(const Session& s, int first_decl, std::ostream& out) {
  for (MetaId id = 0; id < s.metas.meta_count(); ++id) {
    const MetaEntry& m = s.metas.entry(id);
    if (m.decl < first_decl) continue;
    if (m.solution) {
      out << fmt::format("?{} := {}\n", id, pretty(s.metas.zonk(m.solution)));
    } else {
      out << fmt::format("?{} unsolved\n", id);
    }
  }
}

}  // namespace

bool load_prelude(Session& s, const Options& opts, std::ostream& out) {
  if (opts.prelude.empty()) return true;
  std::vector<SDecl> decls;
  if (!parse(read_file(opts.prelude), decls, out, opts.prelude)) return false;
  bool clean = true;
  for (const DeclReport& r : check_decls(s, decls)) {
    if (r.status == DeclStatus::kOk) continue;
    out << "prelude: " << format_report(r) << "\n";
    clean = false;
  }
  return clean;
}

int check_source(Session& s, const std::string& text, const Options& opts,
                 std::ostream& out, std::vector<DeclReport>* reports) {
  std::vector<SDecl> decls;
  if (!parse(text, decls, out, "input")) return 2;
  const int first_decl = s.metas.current_decl() + 1;
  s.trace.enabled = opts.trace_unify;
  s.trace.lines.clear();
  std::vector<DeclReport> rs = check_decls(s, decls);
  s.trace.enabled = false;
  for (const std::string& line : s.trace.lines) out << line << "\n";

  int code = 0;
  for (const DeclReport& r : rs) {
    out << format_report(r) << "\n";
    for (const std::string& d : r.details) out << d << "\n";
    const DeclStatus want = r.expect.value_or(DeclStatus::kOk);
    if (r.status != want) {
      out << fmt::format("  expected {}, got {}\n", to_string(want),
                         to_string(r.status));
      code = 1;
    }
  }
  if (opts.print_metas) print_metas(s, first_decl, out);
  for (const std::string& name : opts.nf) print_nf(s, name, out);
  if (reports) *reports = std::move(rs);
  return code;
}

std::vector<std::string> validate(Session& s) {
  std::vector<std::string> problems;
  const int n = static_cast<int>(s.metas.constraint_count());
  std::vector<bool> settled(n, true);
  for (int id = n - 1; id >= 0; --id) {
    const ConstraintEntry& c = s.metas.constraint(id);
    if (c.status != ConstraintStatus::kSolved) settled[id] = false;
    if (!settled[id] && c.parent >= 0) settled[c.parent] = false;
  }
  for (int id = 0; id < n; ++id) {
    const ConstraintEntry& c = s.metas.constraint(id);
    if (c.status != ConstraintStatus::kSolved || !settled[id]) continue;
    if (!conv(s, c.ctx, c.lhs, c.rhs)) {
      problems.push_back(fmt::format("constraint #{} at {}:{}: {} /= {}", id,
                                     c.span.line, c.span.col,
                                     show(s, c.ctx, c.lhs),
                                     show(s, c.ctx, c.rhs)));
    }
  }
  for (MetaId id = 0; id < s.metas.meta_count(); ++id) {
    const MetaEntry& m = s.metas.entry(id);
    if (!m.solution) continue;
    Term sol = s.metas.zonk(m.solution);
    Value type = eval(s, {}, s.metas.zonk(m.type));
    CoreChecker checker(s, [&s](const Ctx& ctx, const Value& a,
                                const Value& b) { return conv(s, ctx, a, b); });
    if (!checker.check(Ctx{}, sol, type)) {
      problems.push_back(fmt::format("meta ?{}: {} does not check: {}", id,
                                     pretty(sol), checker.error()));
    }
  }
  return problems;
}

}  // namespace nary
