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

#include "nary/eval.h"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace nary {

namespace {

[[noreturn]] void contract(const std::string& what) {
  throw std::logic_error("evaluator contract violation: " + what);
}

Value eval_level_op(const Session& s, const Env& env, const Term& t) {
  switch (t->kind) {
    case Tm::kLZero:
      return val::level(LevelNF::constant(0));
    case Tm::kLSuc:
      return val::level(nf_suc(to_level(s, eval(s, env, t->kids[0]))));
    case Tm::kLMax:
      return val::level(nf_max(to_level(s, eval(s, env, t->kids[0])),
                               to_level(s, eval(s, env, t->kids[1]))));
    default:
      contract("not a level operator");
  }
}

std::optional<Closure> closure_if(const Env& env, const Term& t) {
  if (!t) return std::nullopt;
  return Closure{env, t};
}

Value eval_global(const Session& s, const std::string& name) {
  const GlobalDef* g = s.globals.find(name);
  if (g && g->def && g->def->arity == 0 && !g->def->clauses.empty()) {
    return eval(s, {}, g->def->clauses.front().rhs);
  }
  return val::global(name);
}

// Tries to unfold a global-headed neutral whose spine covers the arity.
Value try_unfold(const Session& s, const Value& v) {
  const GlobalDef* g = s.globals.find(v->head.global);
  if (!g || !g->def || g->def->clauses.empty()) return v;
  const ClauseDef& def = *g->def;
  const auto arity = static_cast<std::size_t>(def.arity);
  if (v->spine.size() < arity) return v;
  std::vector<Value> args;
  args.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    if (v->spine[i].kind != ElimKind::kApp) return v;
    args.push_back(v->spine[i].arg);
  }
  for (const Clause& c : def.clauses) {
    Env bound;
    switch (match_clause(s, c, args, bound)) {
      case MatchResult::kNoMatch:
        continue;
      case MatchResult::kBlocked:
        return v;
      case MatchResult::kMatch: {
        Value out = eval(s, bound, c.rhs);
        for (std::size_t i = arity; i < v->spine.size(); ++i) {
          out = apply_elim(s, out, v->spine[i]);
        }
        return out;
      }
    }
  }
  return v;
}

MatchResult match_pattern(const Session& s, const Pattern& p, const Value& arg,
                          Env& bound) {
  if (p.kind == PatKind::kVar) {
    bound.push_back(arg);
    return MatchResult::kMatch;
  }
  Value v = force(s, arg);
  auto want = [&](Vk k) {
    if (v->kind == k) return MatchResult::kMatch;
    if (v->kind == Vk::kNeutral) return MatchResult::kBlocked;
    return MatchResult::kNoMatch;
  };
  switch (p.kind) {
    case PatKind::kZero:
      if (v->kind == Vk::kSuc) return MatchResult::kNoMatch;
      return want(Vk::kZero);
    case PatKind::kNil:
      if (v->kind == Vk::kCons) return MatchResult::kNoMatch;
      return want(Vk::kNil);
    case PatKind::kSuc: {
      if (v->kind == Vk::kZero) return MatchResult::kNoMatch;
      auto r = want(Vk::kSuc);
      if (r != MatchResult::kMatch) return r;
      return match_pattern(s, p.kids[0], v->args[0], bound);
    }
    case PatKind::kCons: {
      if (v->kind == Vk::kNil) return MatchResult::kNoMatch;
      auto r = want(Vk::kCons);
      if (r != MatchResult::kMatch) return r;
      r = match_pattern(s, p.kids[0], v->args[0], bound);
      if (r != MatchResult::kMatch) return r;
      return match_pattern(s, p.kids[1], v->args[1], bound);
    }
    case PatKind::kVar:
      break;
  }
  return MatchResult::kNoMatch;
}

}  // namespace

MatchResult match_clause(const Session& s, const Clause& c,
                         const std::vector<Value>& args, Env& bound,
                         int* blocked_position) {
  // A mismatch anywhere rules the clause out even if another position is
  // stuck, so report blocking only after all positions were inspected.
  MatchResult result = MatchResult::kMatch;
  for (std::size_t i = 0; i < c.params.size(); ++i) {
    auto r = match_pattern(s, c.params[i], args[i], bound);
    if (r == MatchResult::kNoMatch) return r;
    if (r == MatchResult::kBlocked && result == MatchResult::kMatch) {
      result = r;
      if (blocked_position) *blocked_position = static_cast<int>(i);
    }
  }
  return result;
}

Value eval(const Session& s, const Env& env, const Term& t) {
  switch (t->kind) {
    case Tm::kVar: {
      const int n = static_cast<int>(env.size());
      if (t->index < 0 || t->index >= n) contract("unbound variable");
      return env[n - 1 - t->index];
    }
    case Tm::kGlobal:
      return eval_global(s, t->name);
    case Tm::kMeta: {
      const auto& e = s.metas.entry(t->meta);
      if (e.solution) return eval(s, {}, e.solution);
      return val::meta(t->meta);
    }
    case Tm::kApp:
      return apply(s, eval(s, env, t->kids[0]), eval(s, env, t->kids[1]),
                   t->implicit);
    case Tm::kLam:
      return val::lam(t->name, t->implicit, Closure{env, t->kids[0]});
    case Tm::kPi:
      return val::pi(t->name, t->implicit, eval(s, env, t->kids[0]),
                     t->kids[1] ? eval(s, env, t->kids[1]) : nullptr,
                     Closure{env, t->kids[2]}, closure_if(env, t->kids[3]));
    case Tm::kSigma:
      return val::sigma(t->name, eval(s, env, t->kids[0]),
                        t->kids[1] ? eval(s, env, t->kids[1]) : nullptr,
                        Closure{env, t->kids[2]}, closure_if(env, t->kids[3]));
    case Tm::kPair:
      return val::pair(eval(s, env, t->kids[0]), eval(s, env, t->kids[1]));
    case Tm::kFst:
      return fst_of(s, eval(s, env, t->kids[0]));
    case Tm::kSnd:
      return snd_of(s, eval(s, env, t->kids[0]));
    case Tm::kUnit:
      return val::simple(Vk::kUnit);
    case Tm::kTT:
      return val::simple(Vk::kTT);
    case Tm::kEmpty:
      return val::simple(Vk::kEmpty);
    case Tm::kAbsurd: {
      Elim e;
      e.kind = ElimKind::kAbsurd;
      e.motive = eval(s, env, t->kids[0]);
      return apply_elim(s, eval(s, env, t->kids[1]), e);
    }
    case Tm::kNat:
      return val::simple(Vk::kNat);
    case Tm::kZero:
      return val::simple(Vk::kZero);
    case Tm::kSuc:
      return val::suc(eval(s, env, t->kids[0]));
    case Tm::kList:
      return val::with_args(Vk::kList, {eval(s, env, t->kids[0])});
    case Tm::kNil:
      return val::simple(Vk::kNil);
    case Tm::kCons:
      return val::with_args(Vk::kCons, {eval(s, env, t->kids[0]),
                                        eval(s, env, t->kids[1])});
    case Tm::kId:
      return val::with_args(Vk::kId, {eval(s, env, t->kids[0]),
                                      eval(s, env, t->kids[1]),
                                      eval(s, env, t->kids[2])});
    case Tm::kRefl:
      return val::simple(Vk::kRefl);
    case Tm::kJ: {
      Elim e;
      e.kind = ElimKind::kJ;
      e.motive = eval(s, env, t->kids[0]);
      e.refl_case = eval(s, env, t->kids[1]);
      return apply_elim(s, eval(s, env, t->kids[2]), e);
    }
    case Tm::kLift:
      return val::with_args(Vk::kLift, {eval(s, env, t->kids[0]),
                                        eval(s, env, t->kids[1])});
    case Tm::kLiftIn:
      return val::with_args(Vk::kLiftIn, {eval(s, env, t->kids[0])});
    case Tm::kLower: {
      Elim e;
      e.kind = ElimKind::kLower;
      return apply_elim(s, eval(s, env, t->kids[0]), e);
    }
    case Tm::kSort:
      return val::sort(to_level(s, eval(s, env, t->kids[0])));
    case Tm::kSortOmega:
      return val::simple(Vk::kSortOmega);
    case Tm::kLevel:
      return val::simple(Vk::kLevelType);
    case Tm::kLZero:
    case Tm::kLSuc:
    case Tm::kLMax:
      return eval_level_op(s, env, t);
    case Tm::kLet: {
      Env inner = env;
      inner.push_back(eval(s, env, t->kids[1]));
      return eval(s, inner, t->kids[2]);
    }
  }
  contract("unknown term kind");
}

Value instantiate(const Session& s, const Closure& c, const Value& arg) {
  Env env = c.env;
  env.push_back(arg);
  return eval(s, env, c.body);
}

Value apply(const Session& s, const Value& fn, const Value& arg,
            bool implicit) {
  Elim e;
  e.kind = ElimKind::kApp;
  e.arg = arg;
  e.implicit = implicit;
  return apply_elim(s, fn, e);
}

Value fst_of(const Session& s, const Value& v) {
  Elim e;
  e.kind = ElimKind::kFst;
  return apply_elim(s, v, e);
}

Value snd_of(const Session& s, const Value& v) {
  Elim e;
  e.kind = ElimKind::kSnd;
  return apply_elim(s, v, e);
}

Value apply_elim(const Session& s, const Value& v0, const Elim& e) {
  Value v = v0->kind == Vk::kNeutral ? force(s, v0) : v0;
  switch (e.kind) {
    case ElimKind::kApp:
      if (v->kind == Vk::kLam) return instantiate(s, *v->body, e.arg);
      break;
    case ElimKind::kFst:
      if (v->kind == Vk::kPair) return v->args[0];
      break;
    case ElimKind::kSnd:
      if (v->kind == Vk::kPair) return v->args[1];
      break;
    case ElimKind::kLower:
      if (v->kind == Vk::kLiftIn) return v->args[0];
      break;
    case ElimKind::kJ:
      if (v->kind == Vk::kRefl) return e.refl_case;
      break;
    case ElimKind::kAbsurd:
      break;
  }
  if (v->kind != Vk::kNeutral) {
    contract(fmt::format("elimination {} on a canonical value",
                         static_cast<int>(e.kind)));
  }
  ElimSpine spine = v->spine;
  spine.push_back(e);
  Value out = val::neutral(v->head, std::move(spine));
  if (out->head.kind == HeadKind::kGlobal) return try_unfold(s, out);
  return out;
}

Value apply_spine(const Session& s, Value v, const ElimSpine& spine) {
  for (const auto& e : spine) v = apply_elim(s, v, e);
  return v;
}

Value force(const Session& s, const Value& v) {
  if (v->kind == Vk::kLevel) {
    if (!v->level.has_flexible()) return v;
    return val::level(to_level(s, v));
  }
  if (v->kind != Vk::kNeutral) return v;
  if (v->head.kind == HeadKind::kMeta) {
    const auto& e = s.metas.entry(v->head.meta);
    if (!e.solution) return v;
    return force(s, apply_spine(s, eval(s, {}, e.solution), v->spine));
  }
  if (v->head.kind == HeadKind::kGlobal) {
    Value u = try_unfold(s, v);
    if (u != v) return force(s, u);
  }
  return v;
}

namespace {

std::string head_key(const Head& h) {
  switch (h.kind) {
    case HeadKind::kVar:
      return fmt::format("v{:06}", h.level);
    case HeadKind::kMeta:
      return fmt::format("?{:06}", h.meta);
    case HeadKind::kGlobal:
      return h.global;
  }
  return "";
}

void key_into(const Session& s, const Value& v0, int& fresh, std::string& out);

void closure_key(const Session& s, const Closure& c, int& fresh,
                 std::string& out) {
  const int lvl = 1000000 + fresh++;
  key_into(s, instantiate(s, c, val::var(lvl)), fresh, out);
}

void key_into(const Session& s, const Value& v0, int& fresh, std::string& out) {
  if (!v0) {
    out += "_";
    return;
  }
  Value v = force(s, v0);
  out += fmt::format("[{}", static_cast<int>(v->kind));
  switch (v->kind) {
    case Vk::kNeutral:
      out += head_key(v->head);
      for (const auto& e : v->spine) {
        out += fmt::format(" e{}", static_cast<int>(e.kind));
        if (e.arg) key_into(s, e.arg, fresh, out);
        if (e.motive) key_into(s, e.motive, fresh, out);
        if (e.refl_case) key_into(s, e.refl_case, fresh, out);
      }
      break;
    case Vk::kLevel:
    case Vk::kSort:
      out += to_level(s, v).to_string();
      break;
    default:
      break;
  }
  for (const auto& a : v->args) key_into(s, a, fresh, out);
  if (v->body) closure_key(s, *v->body, fresh, out);
  if (v->body_level) closure_key(s, *v->body_level, fresh, out);
  out += "]";
}

AtomKind classify_atom(const Session& s, const Value& v) {
  if (v->head.kind == HeadKind::kMeta) return AtomKind::kMeta;
  if (has_unsolved_meta(s, v)) return AtomKind::kBlocked;
  return AtomKind::kRigid;
}

}  // namespace

std::string value_key(const Session& s, const Value& v) {
  Value f = force(s, v);
  if (f->kind == Vk::kNeutral && f->spine.empty()) return head_key(f->head);
  int fresh = 0;
  std::string out;
  key_into(s, f, fresh, out);
  return out;
}

LevelNF to_level(const Session& s, const Value& v0) {
  Value v = v0->kind == Vk::kLevel ? v0 : force(s, v0);
  if (v->kind == Vk::kLevel) {
    LevelNF out = LevelNF::constant(v->level.constant_part());
    for (const auto& [key, a] : v->level.atoms()) {
      if (!a.head) {
        out = nf_max(out, LevelNF::atom(a));
        continue;
      }
      Value h = force(s, a.head);
      LevelNF sub;
      if (h->kind == Vk::kNeutral) {
        sub = LevelNF::atom(value_key(s, h), 0, classify_atom(s, h), h);
      } else {
        sub = to_level(s, h);
      }
      out = nf_max(out, nf_add(sub, a.offset));
    }
    return out;
  }
  if (v->kind == Vk::kNeutral) {
    return LevelNF::atom(value_key(s, v), 0, classify_atom(s, v), v);
  }
  contract("value is not a level");
}

LevelNF normalize_level(const Session& s, const Env& env, const Term& t) {
  return to_level(s, eval(s, env, t));
}

namespace {

// Read-back engine. Without a renaming, source and target depths coincide.
class Reader {
 public:
  Reader(const Session& s, const Renaming* r) : s_(s), r_(r) {}

  Term value(int src, int tgt, const Value& v0) {
    Value v = force(s_, v0);
    auto q = [&](const Value& x) { return value(src, tgt, x); };
    auto qn = [&](const Value& x) { return x ? q(x) : nullptr; };
    auto qc = [&](const std::optional<Closure>& c) -> Term {
      if (!c) return nullptr;
      return value(src + 1, tgt + 1, instantiate(s_, *c, val::var(src)));
    };
    switch (v->kind) {
      case Vk::kNeutral:
        return neutral(src, tgt, v);
      case Vk::kLam:
        return tm::lam(v->name, v->implicit, qc(v->body));
      case Vk::kPi:
        return tm::pi(v->name, v->implicit, q(v->args[0]), qn(v->args[1]),
                      qc(v->body), qc(v->body_level));
      case Vk::kSigma:
        return tm::sigma(v->name, q(v->args[0]), qn(v->args[1]), qc(v->body),
                         qc(v->body_level));
      case Vk::kPair:
        return tm::pair(q(v->args[0]), q(v->args[1]));
      case Vk::kUnit:
        return tm::unit();
      case Vk::kTT:
        return tm::tt();
      case Vk::kEmpty:
        return tm::empty();
      case Vk::kNat:
        return tm::nat();
      case Vk::kZero:
        return tm::zero();
      case Vk::kSuc:
        return tm::suc(q(v->args[0]));
      case Vk::kList:
        return tm::list(q(v->args[0]));
      case Vk::kNil:
        return tm::nil();
      case Vk::kCons:
        return tm::cons(q(v->args[0]), q(v->args[1]));
      case Vk::kId:
        return tm::id(q(v->args[0]), q(v->args[1]), q(v->args[2]));
      case Vk::kRefl:
        return tm::refl();
      case Vk::kLift:
        return tm::lift_type(q(v->args[0]), q(v->args[1]));
      case Vk::kLiftIn:
        return tm::lift(q(v->args[0]));
      case Vk::kSort:
        return tm::sort(level(src, tgt, to_level(s_, val::level(v->level))));
      case Vk::kSortOmega:
        return tm::sort_omega();
      case Vk::kLevelType:
        return tm::level();
      case Vk::kLevel:
        return level(src, tgt, to_level(s_, v));
    }
    contract("unknown value kind");
  }

  Term level(int src, int tgt, const LevelNF& nf) {
    Term out;
    for (const auto& [key, a] : nf.atoms()) {
      // Symbolic atoms without a head only arise in tests.
      Term base = a.head ? value(src, tgt, a.head) : tm::global(key);
      for (unsigned i = 0; i < a.offset; ++i) base = tm::lsuc(base);
      out = out ? tm::lmax(out, base) : base;
    }
    if (nf.constant_part() > 0 || nf.atoms().empty()) {
      Term c = tm::lzero();
      for (unsigned i = 0; i < nf.constant_part(); ++i) c = tm::lsuc(c);
      out = out ? tm::lmax(c, out) : c;
    }
    return out;
  }

 private:
  Term var(int tgt, int level) {
    if (!r_) return tm::var(tgt - 1 - level);
    int target;
    if (level >= r_->cod) {
      target = r_->dom + (level - r_->cod);
    } else {
      auto it = r_->to.find(level);
      if (it == r_->to.end()) throw RenameError{RenameError::kScope, level};
      target = it->second;
    }
    return tm::var(tgt - 1 - target);
  }

  Term neutral(int src, int tgt, const Value& v) {
    Term t;
    switch (v->head.kind) {
      case HeadKind::kVar:
        t = var(tgt, v->head.level);
        break;
      case HeadKind::kMeta:
        if (r_ && r_->occurs && *r_->occurs == v->head.meta) {
          throw RenameError{RenameError::kOccurs, 0};
        }
        t = tm::meta(v->head.meta);
        break;
      case HeadKind::kGlobal:
        t = tm::global(v->head.global);
        break;
    }
    for (const auto& e : v->spine) {
      switch (e.kind) {
        case ElimKind::kApp:
          t = tm::app(t, value(src, tgt, e.arg), e.implicit);
          break;
        case ElimKind::kFst:
          t = tm::fst(t);
          break;
        case ElimKind::kSnd:
          t = tm::snd(t);
          break;
        case ElimKind::kLower:
          t = tm::lower(t);
          break;
        case ElimKind::kJ:
          t = tm::j(value(src, tgt, e.motive), value(src, tgt, e.refl_case), t);
          break;
        case ElimKind::kAbsurd:
          t = tm::absurd(value(src, tgt, e.motive), t);
          break;
      }
    }
    return t;
  }

  const Session& s_;
  const Renaming* r_;
};

}  // namespace

Term quote_level(const Session& s, int depth, const LevelNF& nf) {
  return Reader(s, nullptr).level(depth, depth, nf);
}

Term quote(const Session& s, int depth, const Value& v) {
  return Reader(s, nullptr).value(depth, depth, v);
}

Term rename(const Session& s, const Renaming& r, const Value& v) {
  return Reader(s, &r).value(r.cod, r.dom, v);
}

Term nf(const Session& s, const Env& env, const Term& t) {
  return quote(s, static_cast<int>(env.size()),
               eval(s, env, s.metas.zonk(t)));
}

namespace {

// Generic deep traversal over forced values; `visit` returns true to stop.
bool any_value(const Session& s, const Value& v0, int& fresh,
               const std::function<bool(const Value&)>& visit) {
  if (!v0) return false;
  Value v = force(s, v0);
  if (visit(v)) return true;
  if (v->kind == Vk::kNeutral) {
    for (const auto& e : v->spine) {
      if (any_value(s, e.arg, fresh, visit) ||
          any_value(s, e.motive, fresh, visit) ||
          any_value(s, e.refl_case, fresh, visit)) {
        return true;
      }
    }
  }
  if (v->kind == Vk::kLevel || v->kind == Vk::kSort) {
    for (const auto& [key, a] : v->level.atoms()) {
      if (any_value(s, a.head, fresh, visit)) return true;
    }
  }
  for (const auto& a : v->args) {
    if (any_value(s, a, fresh, visit)) return true;
  }
  for (const auto* c : {&v->body, &v->body_level}) {
    if (!*c) continue;
    const int lvl = 2000000 + fresh++;
    if (any_value(s, instantiate(s, **c, val::var(lvl)), fresh, visit)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool has_unsolved_meta(const Session& s, const Value& v) {
  int fresh = 0;
  return any_value(s, v, fresh, [](const Value& x) {
    return x->kind == Vk::kNeutral && x->head.kind == HeadKind::kMeta;
  });
}

void collect_unsolved_metas(const Session& s, const Value& v,
                            std::vector<MetaId>& out) {
  int fresh = 0;
  any_value(s, v, fresh, [&out](const Value& x) {
    if (x->kind == Vk::kNeutral && x->head.kind == HeadKind::kMeta &&
        std::find(out.begin(), out.end(), x->head.meta) == out.end()) {
      out.push_back(x->head.meta);
    }
    return false;
  });
}

bool mentions_level(const Session& s, const Value& v, int level) {
  int fresh = 0;
  return any_value(s, v, fresh, [level](const Value& x) {
    return x->kind == Vk::kNeutral && x->head.kind == HeadKind::kVar &&
           x->head.level == level;
  });
}

Value neutral_type(const Session& s, const Ctx& ctx, const Value& v0) {
  Value v = force(s, v0);
  if (v->kind != Vk::kNeutral) return nullptr;
  Value ty;
  switch (v->head.kind) {
    case HeadKind::kVar:
      if (v->head.level < 0 || v->head.level >= ctx.depth()) return nullptr;
      ty = ctx.entries[v->head.level].type;
      break;
    case HeadKind::kMeta:
      ty = eval(s, {}, s.metas.entry(v->head.meta).type);
      break;
    case HeadKind::kGlobal: {
      const GlobalDef* g = s.globals.find(v->head.global);
      if (!g) return nullptr;
      ty = g->type_value;
      break;
    }
  }
  Head h = v->head;
  ElimSpine so_far;
  for (const auto& e : v->spine) {
    if (!ty) return nullptr;
    ty = force(s, ty);
    Value self = val::neutral(h, so_far);
    switch (e.kind) {
      case ElimKind::kApp:
        if (ty->kind != Vk::kPi) return nullptr;
        ty = instantiate(s, *ty->body, e.arg);
        break;
      case ElimKind::kFst:
        if (ty->kind != Vk::kSigma) return nullptr;
        ty = ty->args[0];
        break;
      case ElimKind::kSnd:
        if (ty->kind != Vk::kSigma) return nullptr;
        ty = instantiate(s, *ty->body, fst_of(s, self));
        break;
      case ElimKind::kLower:
        if (ty->kind != Vk::kLift) return nullptr;
        ty = ty->args[1];
        break;
      case ElimKind::kJ: {
        if (ty->kind != Vk::kId) return nullptr;
        ty = apply(s, apply(s, e.motive, ty->args[2]), self);
        break;
      }
      case ElimKind::kAbsurd:
        ty = e.motive;
        break;
    }
    so_far.push_back(e);
  }
  return ty;
}

}  // namespace nary
