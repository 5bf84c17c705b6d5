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

#include "nary/decls.h"

#include <fmt/format.h>

#include <algorithm>

#include "nary/clauses.h"
#include "nary/elab.h"
#include "nary/pretty.h"
#include "nary/unify.h"

namespace nary {

const char* to_string(DeclStatus s) {
  switch (s) {
    case DeclStatus::kOk:
      return "ok";
    case DeclStatus::kUnsolved:
      return "unsolved";
    case DeclStatus::kTypeError:
      return "typeerror";
  }
  return "?";
}

namespace {

struct Group {
  const SDecl* head = nullptr;
  std::vector<const SDecl*> clauses;
  std::optional<DeclStatus> expect;
};

std::optional<DeclStatus> parse_tag(const std::string& tag) {
  if (tag == "ok") return DeclStatus::kOk;
  if (tag == "unsolved") return DeclStatus::kUnsolved;
  if (tag == "typeerror") return DeclStatus::kTypeError;
  return std::nullopt;
}

std::string where(Span at) { return fmt::format("{}:{}", at.line, at.col); }

bool is_level(const Session& s, const Ctx& ctx, const Value& v) {
  Value f = force(s, v);
  if (f->kind == Vk::kLevel) return true;
  Value ty = neutral_type(s, ctx, f);
  return ty && force(s, ty)->kind == Vk::kLevelType;
}

std::string show_side(const Session& s, const ConstraintEntry& c,
                      const Value& v, bool level) {
  if (level) return to_level(s, v).to_string();
  return show(s, c.ctx, v);
}

void describe_unsolved(const Session& s, DeclReport& r) {
  for (MetaId id : s.metas.unsolved_metas(r.decl)) {
    const MetaEntry& m = s.metas.entry(id);
    Term t = s.metas.zonk(m.type);
    std::vector<std::string> names;
    for (int i = 0; i < m.tel_size && t->kind == Tm::kPi; ++i) {
      names.push_back(t->name);
      t = t->kids[2];
    }
    r.details.push_back(fmt::format("  ?{} : {}  [{} {}]", id,
                                    pretty(t, names), where(m.span),
                                    to_string(m.reason)));
    ++r.metas;
  }
  for (int id : s.metas.unsolved_constraints(r.decl)) {
    const ConstraintEntry& c = s.metas.constraint(id);
    const bool level = is_level(s, c.ctx, c.lhs) || is_level(s, c.ctx, c.rhs);
    r.details.push_back(fmt::format("  {} == {}  [{}]",
                                    show_side(s, c, c.lhs, level),
                                    show_side(s, c, c.rhs, level),
                                    where(c.span)));
    ++r.constraints;
  }
}

std::vector<Group> group_decls(const std::vector<SDecl>& decls,
                               std::vector<DeclReport>& orphans) {
  std::vector<Group> groups;
  std::optional<DeclStatus> pending;
  for (std::size_t i = 0; i < decls.size(); ++i) {
    const SDecl& d = decls[i];
    if (d.kind == DeclKind::kExpect) {
      pending = parse_tag(d.name);
      continue;
    }
    Group g;
    g.head = &d;
    g.expect = pending;
    pending.reset();
    if (d.kind == DeclKind::kSignature) {
      while (i + 1 < decls.size() && decls[i + 1].kind == DeclKind::kClause &&
             decls[i + 1].name == d.name) {
        g.clauses.push_back(&decls[++i]);
      }
    } else if (d.kind == DeclKind::kClause && !d.params.empty()) {
      DeclReport r;
      r.name = d.name;
      r.span = d.span;
      r.status = DeclStatus::kTypeError;
      r.message = fmt::format("{}: clause for {} is not preceded by its "
                              "signature",
                              where(d.span), d.name);
      r.expect = g.expect;
      orphans.push_back(std::move(r));
      continue;
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

class DeclChecker {
 public:
  explicit DeclChecker(Session& s) : s_(s), el_(s) {}

  void run(const Group& g) {
    const SDecl& d = *g.head;
    switch (d.kind) {
      case DeclKind::kPostulate:
        postulate(d);
        break;
      case DeclKind::kSignature:
        signature(d, g.clauses);
        break;
      case DeclKind::kClause:
        inferred(d);
        break;
      case DeclKind::kExpect:
        break;
    }
  }

  /// Name of the global this declaration added, if any.
  const std::string& registered() const { return registered_; }

 private:
  Term zonk(const Term& t) const { return s_.metas.zonk(t); }

  void settle(Span at) {
    std::string error;
    if (!solve_all(s_, error)) throw ElabError(at, error);
  }

  void ensure_fresh(const SDecl& d) {
    if (d.name != "_" && s_.globals.find(d.name)) {
      throw ElabError(d.span, d.name + " is already defined");
    }
  }

  GlobalDef& declare(const SDecl& d, const Term& type, bool postulate) {
    GlobalDef g;
    g.name = d.name;
    g.type = type;
    g.type_value = eval(s_, {}, type);
    g.postulate = postulate;
    scratch_ = g;
    if (d.name == "_") return scratch_;
    registered_ = d.name;
    return s_.globals.add(std::move(g));
  }

  void postulate(const SDecl& d) {
    ensure_fresh(d);
    Term type = el_.check_type(Ctx{}, d.expr).first;
    settle(d.span);
    declare(d, zonk(type), true);
  }

  void inferred(const SDecl& d) {
    ensure_fresh(d);
    auto [t, ty] = el_.infer(Ctx{}, d.expr);
    settle(d.span);
    Clause c;
    c.rhs = zonk(t);
    c.span = d.span;
    define(d, zonk(quote(s_, 0, ty)), {std::move(c)});
  }

  void signature(const SDecl& d, const std::vector<const SDecl*>& clauses) {
    ensure_fresh(d);
    Term type = el_.check_type(Ctx{}, d.expr).first;
    settle(d.span);
    type = zonk(type);
    if (clauses.empty()) {
      throw ElabError(d.span, "signature of " + d.name + " has no clauses");
    }
    GlobalDef& g = declare(d, type, false);
    const Value type_value = g.type_value;
    std::vector<Clause> out;
    for (const SDecl* c : clauses) out.push_back(clause(*c, type_value));
    for (const Clause& c : out) {
      if (c.params.size() != out.front().params.size()) {
        throw ElabError(c.span, "clauses of " + d.name +
                                    " take different numbers of parameters");
      }
    }
    define(d, type, std::move(out));
  }

  Clause clause(const SDecl& d, const Value& sig) {
    Clause c;
    c.span = d.span;
    Ctx ctx;
    Value type = sig;
    std::size_t i = 0;
    for (;;) {
      Value f = force(s_, type);
      if (f->kind != Vk::kPi) break;
      const bool have = i < d.params.size();
      if (f->implicit && (!have || !d.params[i].implicit)) {
        if (!have) break;
        Pattern p = Pattern::var(f->name);
        Value v = el_.bind_pattern(ctx, p, f->args[0], d.span);
        c.params.push_back(std::move(p));
        c.implicit.push_back(true);
        type = instantiate(s_, *f->body, v);
        continue;
      }
      if (!have) break;
      if (d.params[i].implicit && !f->implicit) {
        throw ElabError(d.span, fmt::format("unexpected implicit pattern {{{}}}",
                                            d.params[i].pat.to_string()));
      }
      Value v = el_.bind_pattern(ctx, d.params[i].pat, f->args[0], d.span);
      c.params.push_back(d.params[i].pat);
      c.implicit.push_back(f->implicit);
      type = instantiate(s_, *f->body, v);
      ++i;
    }
    if (i < d.params.size()) {
      throw ElabError(d.span, fmt::format("too many patterns in clause of {}",
                                          d.name));
    }
    c.rhs = el_.check(ctx, d.expr, type);
    settle(d.span);
    return c;
  }

  void define(const SDecl& d, const Term& type, std::vector<Clause> clauses) {
    ClauseDef def;
    def.name = d.name;
    def.type = type;
    def.arity = static_cast<int>(clauses.front().params.size());
    for (bool imp : clauses.front().implicit) def.explicit_arity += !imp;
    for (Clause& c : clauses) c.rhs = zonk(c.rhs);
    def.clauses = std::move(clauses);
    ClauseCheck check = check_clauses(s_, def);
    if (check.kind != ClauseError::kOk) {
      throw ElabError(d.span, fmt::format("{}: {}", to_string(check.kind),
                                          check.message));
    }
    if (d.name == "_") return;
    GlobalDef* g = s_.globals.find(d.name);
    if (!g) g = &declare(d, type, false);
    g->def = std::move(def);
  }

  Session& s_;
  Elaborator el_;
  GlobalDef scratch_;
  std::string registered_;
};

}  // namespace

std::vector<DeclReport> check_decls(Session& s,
                                    const std::vector<SDecl>& decls) {
  std::vector<DeclReport> reports;
  std::vector<Group> groups = group_decls(decls, reports);
  for (const Group& g : groups) {
    s.metas.begin_decl();
    DeclReport r;
    r.name = g.head->name;
    r.span = g.head->span;
    r.expect = g.expect;
    r.decl = s.metas.current_decl();
    DeclChecker checker(s);
    try {
      checker.run(g);
      describe_unsolved(s, r);
      if (r.metas > 0 || r.constraints > 0) r.status = DeclStatus::kUnsolved;
    } catch (const ElabError& e) {
      if (!checker.registered().empty()) {
        s.globals.remove(checker.registered());
      }
      r.status = DeclStatus::kTypeError;
      r.message = fmt::format("{}: {}", where(e.span), e.what());
      r.details.clear();
      r.metas = r.constraints = 0;
    }
    reports.push_back(std::move(r));
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const DeclReport& a, const DeclReport& b) {
                     return a.span < b.span;
                   });
  return reports;
}

std::string format_report(const DeclReport& r) {
  switch (r.status) {
    case DeclStatus::kOk:
      return "OK " + r.name;
    case DeclStatus::kUnsolved:
      return fmt::format("UNSOLVED {}: {} metas, {} constraints", r.name,
                         r.metas, r.constraints);
    case DeclStatus::kTypeError:
      return fmt::format("TYPEERROR {}: {}", r.name, r.message);
  }
  return "";
}

}  // namespace nary
