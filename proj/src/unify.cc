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

#include "nary/unify.h"

#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nary/core_check.h"
#include "nary/pretty.h"

namespace nary {

std::string show(const Session& s, const Ctx& ctx, const Value& v) {
  if (!v) return "<none>";
  return pretty(quote(s, ctx.depth(), v), ctx.names());
}

namespace {

std::vector<MetaId> blockers_of(const Session& s, const Value& a,
                                const Value& b) {
  std::vector<MetaId> out;
  collect_unsolved_metas(s, a, out);
  collect_unsolved_metas(s, b, out);
  return out;
}

// Postponing is only honest when some meta could still change the picture.
UnifyResult postpone_or_fail(const Session& s, const Value& a, const Value& b,
                             const std::string& why) {
  auto blockers = blockers_of(s, a, b);
  if (blockers.empty()) return UnifyResult::failed(why);
  return UnifyResult::postponed(std::move(blockers));
}

std::string outcome_text(const UnifyResult& r) {
  switch (r.outcome) {
    case Outcome::kProgress:
      return "progress";
    case Outcome::kPostponed: {
      std::string out = "postponed on";
      for (MetaId m : r.blockers) out += fmt::format(" ?{}", m);
      return out;
    }
    case Outcome::kFailed:
      return "failed: " + r.reason;
  }
  return "";
}

Span span_of(const Session& s, int parent) {
  if (parent < 0) return Span{};
  return s.metas.constraint(parent).span;
}

// Queues a postponed sub-problem as a child constraint.
void add_child(Session& s, const Ctx& ctx, const Value& a, const Value& b,
               int parent, std::vector<MetaId> blockers) {
  ConstraintEntry c;
  c.ctx = ctx;
  c.lhs = a;
  c.rhs = b;
  c.parent = parent;
  c.span = span_of(s, parent);
  int id = s.metas.add_constraint(std::move(c));
  s.metas.postpone(id, std::move(blockers));
}

// Unifies a sub-problem; a postponed sub-problem becomes a child constraint
// and counts as progress for the caller.
UnifyResult sub(Session& s, const Ctx& ctx, const Value& a, const Value& b,
                int parent) {
  UnifyResult r = unify(s, ctx, a, b, parent);
  if (r.outcome == Outcome::kPostponed) {
    add_child(s, ctx, a, b, parent, std::move(r.blockers));
    return UnifyResult::progress();
  }
  return r;
}

struct Telescope {
  std::vector<std::string> names;
  std::vector<bool> implicit;
  std::vector<Term> types;  // entry i lives under i binders
  Term body;                // lives under names.size() binders
};

Telescope peel(const Term& type, int n) {
  Telescope tel;
  Term cur = type;
  for (int i = 0; i < n; ++i) {
    if (cur->kind != Tm::kPi) throw std::logic_error("meta type too short");
    tel.names.push_back(cur->name);
    tel.implicit.push_back(cur->implicit);
    tel.types.push_back(cur->kids[0]);
    cur = cur->kids[2];
  }
  tel.body = cur;
  return tel;
}

Term close_over(const Telescope& tel, Term body) {
  for (std::size_t i = tel.types.size(); i-- > 0;) {
    body = tm::pi(tel.names[i], false, tel.types[i], nullptr, body, nullptr);
  }
  return body;
}

Term lambdas(const std::vector<std::string>& names, Term body) {
  for (std::size_t i = names.size(); i-- > 0;) {
    body = tm::lam(names[i], false, body);
  }
  return body;
}

// `?k x0 ... x(T-1)` under the T binders of a telescope.
Term applied_to_tel(MetaId k, int tel_size) {
  Term t = tm::meta(k);
  for (int i = 0; i < tel_size; ++i) t = tm::app(t, tm::var(tel_size - 1 - i));
  return t;
}

// A fresh meta living in the telescope of `parent`, with `type` given under
// that telescope. Returns the meta applied to the telescope variables.
Term fresh_in_tel(Session& s, const MetaEntry& parent, const Term& type,
                  MetaReason reason) {
  Telescope tel = peel(parent.type, parent.tel_size);
  MetaId k = s.metas.fresh(close_over(tel, type), parent.tel_size,
                           parent.tel_names, parent.span, reason);
  return applied_to_tel(k, parent.tel_size);
}

// The meta's type after its telescope, as a value over fresh variables.
Value body_type(Session& s, const MetaEntry& m, Env& vars) {
  Telescope tel = peel(m.type, m.tel_size);
  vars.clear();
  for (int i = 0; i < m.tel_size; ++i) vars.push_back(val::var(i));
  return force(s, eval(s, vars, tel.body));
}

// Checks a freshly stored solution against its meta's type, emitting
// unification constraints for whatever is still undetermined.
UnifyResult check_solution(Session& s, MetaId m, int parent) {
  const MetaEntry& e = s.metas.entry(m);
  Term sol = e.solution;
  Value type = eval(s, {}, e.type);
  UnifyResult failure = UnifyResult::progress();
  CoreChecker checker(s, [&](const Ctx& ctx, const Value& a, const Value& b) {
    UnifyResult r = sub(s, ctx, a, b, parent);
    if (r.outcome == Outcome::kFailed) {
      failure = r;
      return false;
    }
    return true;
  });
  if (!checker.check(Ctx{}, sol, type) && checker.mismatch()) {
    return UnifyResult::failed(fmt::format("solution of ?{} is ill-typed: {}",
                                           m, failure.reason));
  }
  return UnifyResult::progress();
}

UnifyResult store(Session& s, MetaId m, Term sol, int parent) {
  switch (s.metas.solve(m, std::move(sol))) {
    case SolveStatus::kOk:
      return check_solution(s, m, parent);
    case SolveStatus::kOccursError:
      return UnifyResult::failed(fmt::format("?{} occurs in its solution", m));
    case SolveStatus::kScopeError:
      return UnifyResult::failed(fmt::format("solution of ?{} escapes scope", m));
  }
  return UnifyResult::failed("unknown solve status");
}

bool only_apps(const Value& v) {
  return std::all_of(v->spine.begin(), v->spine.end(),
                     [](const Elim& e) { return e.kind == ElimKind::kApp; });
}

// Distinct bound variables, or nothing.
std::optional<std::vector<int>> miller_spine(const Session& s, const Value& v) {
  std::vector<int> levels;
  for (const auto& e : v->spine) {
    if (e.kind != ElimKind::kApp) return std::nullopt;
    Value a = force(s, e.arg);
    if (a->kind != Vk::kNeutral || a->head.kind != HeadKind::kVar ||
        !a->spine.empty()) {
      return std::nullopt;
    }
    if (std::find(levels.begin(), levels.end(), a->head.level) !=
        levels.end()) {
      return std::nullopt;
    }
    levels.push_back(a->head.level);
  }
  return levels;
}

}  // namespace

FreshMeta fresh_meta(Session& s, const Ctx& ctx, const Value& type, Span span,
                     MetaReason reason) {
  std::vector<int> bound = ctx.bound_levels();
  const int tel = static_cast<int>(bound.size());
  Renaming r;
  r.cod = ctx.depth();
  for (int i = 0; i < tel; ++i) r.to[bound[i]] = i;
  Telescope t;
  for (int i = 0; i < tel; ++i) {
    const CtxEntry& e = ctx.entries[bound[i]];
    if (!e.type) throw std::logic_error("untyped binder in meta telescope");
    r.dom = i;
    t.names.push_back(e.name);
    t.types.push_back(rename(s, r, e.type));
  }
  r.dom = tel;
  Term body = rename(s, r, type);
  MetaId id = s.metas.fresh(close_over(t, body), tel, t.names, span, reason);
  Term term = tm::meta(id);
  ElimSpine spine;
  for (int l : bound) {
    term = tm::app(term, tm::var(ctx.depth() - 1 - l));
    Elim e;
    e.arg = ctx.env[l];
    spine.push_back(e);
  }
  Head h;
  h.kind = HeadKind::kMeta;
  h.meta = id;
  return FreshMeta{id, term, val::neutral(h, std::move(spine))};
}

UnifyResult pattern_solve(Session& s, const Ctx& ctx, const Value& flex,
                          const Value& rhs, int parent) {
  const MetaId m = flex->head.meta;
  auto levels = miller_spine(s, flex);
  if (!levels) return postpone_or_fail(s, flex, rhs, "non-pattern spine");
  Renaming r;
  r.cod = ctx.depth();
  r.dom = static_cast<int>(levels->size());
  r.occurs = m;
  for (int i = 0; i < r.dom; ++i) r.to[(*levels)[i]] = i;
  Term body;
  try {
    body = rename(s, r, rhs);
  } catch (const RenameError& err) {
    std::vector<MetaId> others;
    collect_unsolved_metas(s, rhs, others);
    others.erase(std::remove(others.begin(), others.end(), m), others.end());
    const char* what =
        err.kind == RenameError::kOccurs ? "occurs check" : "scope check";
    if (others.empty()) {
      return UnifyResult::failed(fmt::format("{} for ?{}", what, m));
    }
    others.push_back(m);
    return UnifyResult::postponed(std::move(others));
  }
  const MetaEntry& e = s.metas.entry(m);
  std::vector<std::string> names;
  for (int i = 0; i < r.dom; ++i) {
    names.push_back(i < e.tel_size ? e.tel_names[i] : "x");
  }
  Term sol = body;
  for (int i = r.dom; i-- > 0;) {
    sol = tm::lam(names[i], flex->spine[i].implicit, sol);
  }
  return store(s, m, sol, parent);
}

namespace {

// Solves a meta whose telescope application is projected as a pair of two
// fresh metas over the same telescope, then retries.
UnifyResult eta_expand_meta(Session& s, const Ctx& ctx, const Value& flex,
                            const Value& other, int parent) {
  const MetaEntry e = s.metas.entry(flex->head.meta);
  std::size_t apps = 0;
  while (apps < flex->spine.size() &&
         flex->spine[apps].kind == ElimKind::kApp) {
    ++apps;
  }
  const ElimKind next = flex->spine[apps].kind;
  if (apps != static_cast<std::size_t>(e.tel_size) ||
      (next != ElimKind::kFst && next != ElimKind::kSnd)) {
    return postpone_or_fail(s, flex, other, "meta under an eliminator");
  }
  Env vars;
  Value b = body_type(s, e, vars);
  if (b->kind != Vk::kSigma) {
    return postpone_or_fail(s, flex, other, "projection of a non-pair meta");
  }
  const int tel = e.tel_size;
  Term first = fresh_in_tel(s, e, quote(s, tel, b->args[0]), MetaReason::kEta);
  Value first_v = eval(s, vars, first);
  Term second_ty = quote(s, tel, instantiate(s, *b->body, first_v));
  Term second = fresh_in_tel(s, e, second_ty, MetaReason::kEta);
  UnifyResult r =
      store(s, e.id, lambdas(e.tel_names, tm::pair(first, second)), parent);
  if (r.outcome == Outcome::kFailed) return r;
  return unify(s, ctx, flex, other, parent);
}

std::string rigid_head(const Value& v) {
  switch (v->kind) {
    case Vk::kPi: return "Pi";
    case Vk::kSigma: return "Sigma";
    case Vk::kSort: return "Set";
    case Vk::kSortOmega: return "Setw";
    case Vk::kNat: return "Nat";
    case Vk::kList: return "List";
    case Vk::kUnit: return "Unit";
    case Vk::kEmpty: return "Empty";
    case Vk::kId: return "Id";
    case Vk::kLift: return "Lift";
    case Vk::kLevelType: return "Level";
    case Vk::kZero: return "zero";
    case Vk::kSuc: return "suc";
    case Vk::kNil: return "nil";
    case Vk::kCons: return "cons";
    case Vk::kTT: return "tt";
    case Vk::kRefl: return "refl";
    default: return "";
  }
}

const ClauseDef* blocked_def(const Session& s, const Value& v) {
  if (v->kind != Vk::kNeutral || v->head.kind != HeadKind::kGlobal) {
    return nullptr;
  }
  const GlobalDef* g = s.globals.find(v->head.global);
  if (!g || !g->def || g->def->clauses.empty()) return nullptr;
  const auto arity = static_cast<std::size_t>(g->def->arity);
  if (v->spine.size() < arity) return nullptr;
  for (std::size_t i = 0; i < arity; ++i) {
    if (v->spine[i].kind != ElimKind::kApp) return nullptr;
  }
  return &*g->def;
}

void bind_rigid(const Pattern& p, Env& env, int& fresh) {
  if (p.is_var()) {
    env.push_back(val::var(fresh++));
    return;
  }
  for (const auto& k : p.kids) bind_rigid(k, env, fresh);
}

// Pattern as a term under the telescope of `m`; pattern variables become
// fresh metas over that telescope.
Term pattern_term(Session& s, const MetaEntry& m, const Pattern& p,
                  const Value& type) {
  const int tel = m.tel_size;
  switch (p.kind) {
    case PatKind::kVar:
      return fresh_in_tel(s, m, quote(s, tel, type), MetaReason::kInversion);
    case PatKind::kZero:
      return tm::zero();
    case PatKind::kSuc:
      return tm::suc(pattern_term(s, m, p.kids[0], val::simple(Vk::kNat)));
    case PatKind::kNil:
      return tm::nil();
    case PatKind::kCons: {
      Value list = force(s, type);
      if (list->kind != Vk::kList) throw std::logic_error("cons on non-list");
      Term h = pattern_term(s, m, p.kids[0], list->args[0]);
      return tm::cons(h, pattern_term(s, m, p.kids[1], type));
    }
  }
  return nullptr;
}

UnifyResult choose_clause(Session& s, const MetaEntry& m, const Pattern& p,
                          int parent) {
  Env vars;
  Value type = body_type(s, m, vars);
  Term sol = lambdas(m.tel_names, pattern_term(s, m, p, type));
  return store(s, m.id, sol, parent);
}

// `g` is a clausal global stuck on a meta at its only matched position.
UnifyResult invert(Session& s, const Ctx& ctx, const Value& g,
                   const Value& other, int parent) {
  const ClauseDef& def = *blocked_def(s, g);
  auto stuck = [&] {
    return postpone_or_fail(s, g, other, def.name + " is stuck");
  };
  if (!def.single_position()) return stuck();
  const int pos = def.matched[0];
  Value scrut = force(s, g->spine[pos].arg);
  if (!is_meta_headed(scrut) || !miller_spine(s, scrut)) return stuck();
  const MetaEntry m = s.metas.entry(scrut->head.meta);
  if (scrut->spine.size() != static_cast<std::size_t>(m.tel_size)) {
    return stuck();
  }
  const std::string want = rigid_head(other);
  if (want.empty()) return stuck();

  std::vector<std::string> heads;
  for (const Clause& c : def.clauses) {
    Env env;
    int fresh = 3000000;
    for (int i = 0; i < def.arity; ++i) {
      if (i == pos) {
        bind_rigid(c.params[i], env, fresh);
      } else {
        env.push_back(g->spine[i].arg);
      }
    }
    Value rhs = eval(s, env, c.rhs);
    for (std::size_t i = def.arity; i < g->spine.size(); ++i) {
      rhs = apply_elim(s, rhs, g->spine[i]);
    }
    heads.push_back(rigid_head(force(s, rhs)));
  }
  std::set<std::string> distinct(heads.begin(), heads.end());
  if (distinct.size() != heads.size() || distinct.count("")) return stuck();
  auto it = std::find(heads.begin(), heads.end(), want);
  if (it == heads.end()) {
    return UnifyResult::failed(
        fmt::format("no clause of {} produces {}", def.name, want));
  }
  const int chosen = static_cast<int>(it - heads.begin());

  InversionEvent ev;
  ev.global = def.name;
  ev.meta = m.id;
  ev.chosen = chosen;
  ev.constraint = show(s, ctx, g) + " == " + show(s, ctx, other);
  if (s.audit_inversions && !s.replaying) {
    for (int j = 0; j < static_cast<int>(def.clauses.size()); ++j) {
      if (j == chosen) continue;
      Session alt = s;
      alt.replaying = true;
      bool failed = choose_clause(alt, m, def.clauses[j].params[pos], -1)
                        .outcome == Outcome::kFailed;
      if (!failed) {
        failed = unify(alt, ctx, g, other, -1).outcome == Outcome::kFailed;
      }
      std::string ignored;
      if (!failed) failed = !solve_all(alt, ignored);
      ev.alternatives.push_back(j);
      ev.alternative_failed.push_back(failed);
    }
  }
  if (!s.replaying) s.inversions.push_back(std::move(ev));

  UnifyResult r = choose_clause(s, m, def.clauses[chosen].params[pos], parent);
  if (r.outcome == Outcome::kFailed) return r;
  return unify(s, ctx, g, other, parent);
}

UnifyResult unify_levels(Session& s, const Ctx& ctx, const Value& a,
                         const Value& b, int parent) {
  LevelNF x = to_level(s, a);
  LevelNF y = to_level(s, b);
  LevelSolveResult r = solve_level(x, y);
  if (auto* solved = std::get_if<LevelSolved>(&r)) {
    for (const auto& asg : solved->assignments) {
      Value flex = force(s, asg.target.head);
      if (!is_meta_headed(flex)) return postpone_or_fail(s, a, b, "level");
      const bool projected =
          std::any_of(flex->spine.begin(), flex->spine.end(),
                      [](const Elim& e) { return e.kind != ElimKind::kApp; });
      UnifyResult u =
          projected
              ? eta_expand_meta(s, ctx, flex, val::level(asg.value), parent)
              : pattern_solve(s, ctx, flex, val::level(asg.value), parent);
      if (u.outcome != Outcome::kProgress) return u;
    }
    return UnifyResult::progress();
  }
  if (std::holds_alternative<LevelPostponed>(r)) {
    return postpone_or_fail(s, a, b, "undetermined level equation");
  }
  return UnifyResult::failed(fmt::format("level {} is not {}", x.to_string(),
                                         y.to_string()));
}

UnifyResult all_of(std::initializer_list<std::function<UnifyResult()>> steps) {
  for (const auto& step : steps) {
    UnifyResult r = step();
    if (r.outcome == Outcome::kFailed) return r;
  }
  return UnifyResult::progress();
}

UnifyResult binder_levels(Session& s, const Ctx& ctx, const Value& a,
                          const Value& b, int parent) {
  if (!a || !b) {
    if (!a && !b) return UnifyResult::progress();
    return UnifyResult::failed("finite level against the limit sort");
  }
  return sub(s, ctx, a, b, parent);
}

UnifyResult decompose(Session& s, const Ctx& ctx, const Value& a,
                      const Value& b, int parent) {
  switch (a->kind) {
    case Vk::kPi:
    case Vk::kSigma: {
      if (a->implicit != b->implicit) {
        return UnifyResult::failed("implicitness differs");
      }
      Ctx inner = ctx.bind(a->name, a->args[0]);
      Value x = val::var(ctx.depth());
      auto at = [&](const std::optional<Closure>& c) -> Value {
        return c ? instantiate(s, *c, x) : nullptr;
      };
      return all_of({
          [&] { return sub(s, ctx, a->args[0], b->args[0], parent); },
          [&] { return binder_levels(s, ctx, a->args[1], b->args[1], parent); },
          [&] { return sub(s, inner, at(a->body), at(b->body), parent); },
          [&] {
            return binder_levels(s, inner, at(a->body_level),
                                 at(b->body_level), parent);
          },
      });
    }
    case Vk::kSort:
      return unify_levels(s, ctx, val::level(a->level), val::level(b->level),
                          parent);
    default:
      break;
  }
  for (std::size_t i = 0; i < a->args.size(); ++i) {
    UnifyResult r = sub(s, ctx, a->args[i], b->args[i], parent);
    if (r.outcome == Outcome::kFailed) return r;
  }
  return UnifyResult::progress();
}

bool same_head(const Head& x, const Head& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case HeadKind::kVar:
      return x.level == y.level;
    case HeadKind::kMeta:
      return x.meta == y.meta;
    case HeadKind::kGlobal:
      return x.global == y.global;
  }
  return false;
}

UnifyResult unify_spines(Session& s, const Ctx& ctx, const Value& a,
                         const Value& b, int parent) {
  if (a->spine.size() != b->spine.size()) {
    return UnifyResult::failed("spines differ in length");
  }
  for (std::size_t i = 0; i < a->spine.size(); ++i) {
    const Elim& x = a->spine[i];
    const Elim& y = b->spine[i];
    if (x.kind != y.kind) return UnifyResult::failed("eliminators differ");
    for (auto [p, q] : {std::pair{x.arg, y.arg}, std::pair{x.motive, y.motive},
                        std::pair{x.refl_case, y.refl_case}}) {
      if (!p) continue;
      UnifyResult r = sub(s, ctx, p, q, parent);
      if (r.outcome == Outcome::kFailed) return r;
    }
  }
  return UnifyResult::progress();
}

bool eta_unit_typed(const Session& s, const Ctx& ctx, const Value& v) {
  if (v->kind != Vk::kNeutral) return false;
  Value ty = neutral_type(s, ctx, v);
  return ty && is_eta_unit(s, ty);
}

UnifyResult step(Session& s, const Ctx& ctx, const Value& a, const Value& b,
                 int parent, std::string& rule) {
  if (a->kind == Vk::kLevel || b->kind == Vk::kLevel) {
    rule = "level";
    return unify_levels(s, ctx, a, b, parent);
  }
  const bool fa = is_meta_headed(a);
  const bool fb = is_meta_headed(b);
  if (fa && fb && a->head.meta == b->head.meta) {
    rule = "flex-flex";
    if (conv(s, ctx, a, b)) return UnifyResult::progress();
    return postpone_or_fail(s, a, b, "same meta, different spines");
  }
  if (fa || fb) {
    const Value& f = fa ? a : b;
    const Value& o = fa ? b : a;
    if (!only_apps(f)) {
      rule = "eta-meta";
      return eta_expand_meta(s, ctx, f, o, parent);
    }
    rule = "pattern";
    UnifyResult r = pattern_solve(s, ctx, f, o, parent);
    if (r.outcome == Outcome::kPostponed && fa && fb && only_apps(b)) {
      UnifyResult back = pattern_solve(s, ctx, b, a, parent);
      if (back.outcome != Outcome::kPostponed) return back;
    }
    return r;
  }
  if (a->kind == Vk::kLam || b->kind == Vk::kLam) {
    rule = "eta-lam";
    const Value& lam = a->kind == Vk::kLam ? a : b;
    const Value& o = a->kind == Vk::kLam ? b : a;
    if (o->kind != Vk::kLam && o->kind != Vk::kNeutral) {
      return UnifyResult::failed("function against a non-function");
    }
    Value dom;
    if (o->kind == Vk::kNeutral) {
      Value ty = neutral_type(s, ctx, o);
      if (ty && (ty = force(s, ty))->kind == Vk::kPi) dom = ty->args[0];
    }
    Ctx inner = ctx.bind(lam->name, dom);
    Value x = val::var(ctx.depth());
    return unify(s, inner, apply(s, a, x, lam->implicit),
                 apply(s, b, x, lam->implicit), parent);
  }
  if (a->kind == Vk::kPair || b->kind == Vk::kPair) {
    rule = "eta-pair";
    const Value& o = a->kind == Vk::kPair ? b : a;
    if (o->kind != Vk::kPair && o->kind != Vk::kNeutral) {
      return UnifyResult::failed("pair against a non-pair");
    }
    return all_of({
        [&] { return sub(s, ctx, fst_of(s, a), fst_of(s, b), parent); },
        [&] { return sub(s, ctx, snd_of(s, a), snd_of(s, b), parent); },
    });
  }
  if (a->kind == Vk::kLiftIn || b->kind == Vk::kLiftIn) {
    rule = "eta-lift";
    const Value& o = a->kind == Vk::kLiftIn ? b : a;
    if (o->kind != Vk::kLiftIn && o->kind != Vk::kNeutral) {
      return UnifyResult::failed("lift against a non-lift");
    }
    Elim lower;
    lower.kind = ElimKind::kLower;
    return unify(s, ctx, apply_elim(s, a, lower), apply_elim(s, b, lower),
                 parent);
  }
  if ((a->kind == Vk::kTT && b->kind == Vk::kNeutral) ||
      (b->kind == Vk::kTT && a->kind == Vk::kNeutral) ||
      eta_unit_typed(s, ctx, a) || eta_unit_typed(s, ctx, b)) {
    rule = "eta-unit";
    return UnifyResult::progress();
  }
  if (a->kind == b->kind && a->kind != Vk::kNeutral) {
    rule = "decompose";
    return decompose(s, ctx, a, b, parent);
  }
  const ClauseDef* da = blocked_def(s, a);
  const ClauseDef* db = blocked_def(s, b);
  if (a->kind == Vk::kNeutral && b->kind == Vk::kNeutral &&
      same_head(a->head, b->head)) {
    rule = "spine";
    UnifyResult r = unify_spines(s, ctx, a, b, parent);
    if (r.outcome == Outcome::kFailed && da) {
      return postpone_or_fail(s, a, b, r.reason);
    }
    return r;
  }
  if (da || db) {
    rule = "invert";
    if (da && db) return postpone_or_fail(s, a, b, "two stuck definitions");
    return da ? invert(s, ctx, a, b, parent) : invert(s, ctx, b, a, parent);
  }
  rule = "mismatch";
  return UnifyResult::failed(
      fmt::format("{} is not {}", show(s, ctx, a), show(s, ctx, b)));
}

}  // namespace

UnifyResult unify(Session& s, const Ctx& ctx, const Value& lhs,
                  const Value& rhs, int parent) {
  Value a = force(s, lhs);
  Value b = force(s, rhs);
  std::string before;
  const bool tracing = s.trace.enabled && !s.replaying;
  if (tracing) before = show(s, ctx, a) + " ≈ " + show(s, ctx, b);
  std::string rule = "?";
  UnifyResult r = step(s, ctx, a, b, parent, rule);
  if (r.outcome == Outcome::kPostponed) {
    std::vector<MetaId> live;
    for (MetaId m : r.blockers) {
      if (!s.metas.is_solved(m)) live.push_back(m);
    }
    if (live.empty()) live = blockers_of(s, a, b);
    if (live.empty()) {
      r = UnifyResult::failed(fmt::format("{} is not {}", show(s, ctx, a),
                                          show(s, ctx, b)));
    } else {
      r.blockers = std::move(live);
    }
  }
  if (tracing) {
    s.trace.lines.push_back(
        fmt::format("RULE {} | {} | {}", rule, before, outcome_text(r)));
  }
  return r;
}

bool unify_now(Session& s, const Ctx& ctx, const Value& lhs, const Value& rhs,
               Span span, std::string& error) {
  ConstraintEntry c;
  c.ctx = ctx;
  c.lhs = lhs;
  c.rhs = rhs;
  c.span = span;
  s.metas.push_active(s.metas.add_constraint(std::move(c)));
  return solve_all(s, error);
}

namespace {

bool solve_eta_units(Session& s) {
  bool any = false;
  for (MetaId id : s.metas.unsolved_metas(s.metas.current_decl())) {
    const MetaEntry e = s.metas.entry(id);
    Env vars;
    Value type = body_type(s, e, vars);
    if (!is_eta_unit(s, type)) continue;
    Term value = quote(s, e.tel_size, eta_unit_value(s, type));
    if (store(s, id, lambdas(e.tel_names, value), -1).outcome ==
        Outcome::kProgress) {
      any = true;
    }
  }
  return any;
}

}  // namespace

bool refine_to_pi(Session& s, const Value& flex, const std::string& name,
                  bool implicit) {
  if (!is_meta_headed(flex)) return false;
  const MetaEntry e = s.metas.entry(flex->head.meta);
  if (flex->spine.size() != static_cast<std::size_t>(e.tel_size)) return false;
  for (const Elim& el : flex->spine) {
    if (el.kind != ElimKind::kApp) return false;
  }
  Env vars;
  if (body_type(s, e, vars)->kind != Vk::kSort) return false;
  auto fresh = [&](const Telescope& tel, Term type, MetaReason why) {
    const int n = static_cast<int>(tel.types.size());
    MetaId k = s.metas.fresh(close_over(tel, std::move(type)), n, tel.names,
                             e.span, why);
    return applied_to_tel(k, n);
  };
  Telescope tel = peel(e.type, e.tel_size);
  Term la = fresh(tel, tm::level(), MetaReason::kLevel);
  Term a = fresh(tel, tm::sort(la), MetaReason::kRefine);
  Telescope inner = tel;
  inner.names.push_back(name);
  inner.implicit.push_back(implicit);
  inner.types.push_back(a);
  Term lb = fresh(inner, tm::level(), MetaReason::kLevel);
  Term b = fresh(inner, tm::sort(lb), MetaReason::kRefine);
  Term pi = tm::pi(name, implicit, a, la, b, lb);
  return store(s, e.id, lambdas(e.tel_names, pi), -1).outcome !=
         Outcome::kFailed;
}

bool solve_all(Session& s, std::string& error) {
  for (;;) {
    while (s.metas.has_active()) {
      const int id = s.metas.pop_active();
      if (s.metas.constraint(id).status != ConstraintStatus::kActive) continue;
      ++s.solver_steps;
      const ConstraintEntry c = s.metas.constraint(id);
      UnifyResult r = unify(s, c.ctx, c.lhs, c.rhs, id);
      ConstraintEntry& entry = s.metas.constraint(id);
      switch (r.outcome) {
        case Outcome::kProgress:
          entry.status = ConstraintStatus::kSolved;
          break;
        case Outcome::kPostponed:
          s.metas.postpone(id, std::move(r.blockers));
          break;
        case Outcome::kFailed:
          entry.status = ConstraintStatus::kFailed;
          entry.failure = r.reason;
          error = r.reason;
          return false;
      }
    }
    if (!solve_eta_units(s)) return true;
  }
}

}  // namespace nary
