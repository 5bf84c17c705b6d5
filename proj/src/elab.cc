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

#include "nary/elab.h"

#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "nary/core_check.h"
#include "nary/pretty.h"
#include "nary/unify.h"

namespace nary {

namespace {

using Args = std::vector<std::pair<SPtr, bool>>;

const std::map<std::string, std::size_t>& builtin_arity() {
  static const std::map<std::string, std::size_t> table = {
      {"Set", 0},   {"Level", 0}, {"lzero", 0}, {"lsuc", 1},  {"lmax", 2},
      {"Nat", 0},   {"zero", 0},  {"suc", 1},   {"Unit", 0},  {"tt", 0},
      {"Empty", 0}, {"absurd", 2}, {"List", 1}, {"nil", 0},   {"cons", 2},
      {"Id", 3},    {"refl", 0},  {"J", 3},     {"Lift", 2},  {"lift", 1},
      {"lower", 1}, {"fst", 1},   {"snd", 1},
  };
  return table;
}

Value set_of(unsigned k) { return val::sort(LevelNF::constant(k)); }
Value simple(Vk k) { return val::simple(k); }

SPtr svar(const std::string& name, Span at) {
  auto e = std::make_shared<SExpr>();
  e->kind = Sx::kVar;
  e->name = name;
  e->span = at;
  return e;
}

SPtr sapp(SPtr f, SPtr a, Span at, bool implicit = false) {
  auto e = std::make_shared<SExpr>();
  e->kind = Sx::kApp;
  e->implicit = implicit;
  e->kids = {std::move(f), std::move(a)};
  e->span = at;
  return e;
}

SPtr slam(const std::string& name, SPtr body, Span at) {
  auto e = std::make_shared<SExpr>();
  e->kind = Sx::kLam;
  e->name = name;
  e->kids = {nullptr, std::move(body)};
  e->span = at;
  return e;
}

Args spine_of(const SPtr& e, SPtr& head) {
  Args args;
  SPtr cur = e;
  while (cur->kind == Sx::kApp) {
    args.emplace_back(cur->kids[1], cur->implicit);
    cur = cur->kids[0];
  }
  std::reverse(args.begin(), args.end());
  head = cur;
  return args;
}

}  // namespace

bool is_builtin(const std::string& name) {
  return builtin_arity().count(name) != 0;
}

Value Elaborator::ev(const Ctx& ctx, const Term& t) const {
  return eval(s_, ctx.env, t);
}

Term Elaborator::qt(const Ctx& ctx, const Value& v) const {
  return quote(s_, ctx.depth(), v);
}

void Elaborator::unify(const Ctx& ctx, const Value& a, const Value& b,
                       Span at) {
  std::string error;
  if (!unify_now(s_, ctx, a, b, at, error)) throw ElabError(at, error);
}

FreshMeta Elaborator::meta(const Ctx& ctx, const Value& type, Span at,
                           MetaReason why) {
  return fresh_meta(s_, ctx, type, at, why);
}

FreshMeta Elaborator::level_meta(const Ctx& ctx, Span at) {
  return meta(ctx, simple(Vk::kLevelType), at, MetaReason::kLevel);
}

std::pair<FreshMeta, FreshMeta> Elaborator::type_meta(const Ctx& ctx,
                                                      Span at) {
  FreshMeta l = level_meta(ctx, at);
  FreshMeta t = meta(ctx, val::sort(to_level(s_, l.value)), at,
                     MetaReason::kHole);
  return {t, l};
}

Term Elaborator::sort_level(const Ctx& ctx, const Value& sort) const {
  Value f = force(s_, sort);
  if (f->kind != Vk::kSort) return nullptr;
  return quote_level(s_, ctx.depth(), to_level(s_, val::level(f->level)));
}

// The level of a type, re-derived with the core checker.
Term Elaborator::level_of(const Ctx& ctx, const Value& type, Span at) {
  std::string failure;
  CoreChecker checker(s_, [&](const Ctx& c, const Value& a, const Value& b) {
    std::string error;
    if (unify_now(s_, c, a, b, at, error)) return true;
    failure = error;
    return false;
  });
  Value sort;
  if (!checker.check_type(ctx, qt(ctx, type), &sort)) {
    throw ElabError(at, failure.empty() ? checker.error() : failure);
  }
  return sort_level(ctx, sort);
}

Value Elaborator::bind_pattern(Ctx& ctx, const Pattern& p, const Value& type0,
                               Span at) {
  if (p.is_var()) {
    const int level = ctx.depth();
    ctx = ctx.bind(p.name, type0);
    return val::var(level);
  }
  Value type = force(s_, type0);
  const bool nat = p.kind == PatKind::kZero || p.kind == PatKind::kSuc;
  if (is_meta_headed(type) && nat) {
    unify(ctx, type, simple(Vk::kNat), at);
    type = simple(Vk::kNat);
  }
  if (nat && type->kind != Vk::kNat) {
    throw ElabError(at, fmt::format("pattern {} does not have type {}",
                                    p.to_string(), show(s_, ctx, type)));
  }
  if (!nat && type->kind != Vk::kList) {
    throw ElabError(at, fmt::format("pattern {} does not have type {}",
                                    p.to_string(), show(s_, ctx, type)));
  }
  switch (p.kind) {
    case PatKind::kZero:
      return simple(Vk::kZero);
    case PatKind::kSuc:
      return val::suc(bind_pattern(ctx, p.kids[0], type, at));
    case PatKind::kNil:
      return simple(Vk::kNil);
    case PatKind::kCons: {
      Value h = bind_pattern(ctx, p.kids[0], type->args[0], at);
      Value t = bind_pattern(ctx, p.kids[1], type, at);
      return val::with_args(Vk::kCons, {h, t});
    }
    case PatKind::kVar:
      break;
  }
  return nullptr;
}

std::pair<Term, Value> Elaborator::insert_implicits(const Ctx& ctx, Term t,
                                                    Value type, Span at) {
  for (;;) {
    Value f = force(s_, type);
    if (f->kind != Vk::kPi || !f->implicit) return {t, f};
    FreshMeta m = meta(ctx, f->args[0], at, MetaReason::kImplicit);
    t = tm::app(t, m.term, true);
    type = instantiate(s_, *f->body, m.value);
  }
}

std::pair<Term, Value> Elaborator::apply_args(const Ctx& ctx, Term t,
                                              Value type, const Args& args,
                                              std::size_t from, Span at) {
  for (std::size_t i = from; i < args.size(); ++i) {
    const auto& [arg, implicit] = args[i];
    if (!implicit) std::tie(t, type) = insert_implicits(ctx, t, type, at);
    Value f = force(s_, type);
    if (is_meta_headed(f) && refine_to_pi(s_, f, "x", implicit)) {
      f = force(s_, type);
    } else if (is_meta_headed(f)) {
      auto [dom, dom_level] = type_meta(ctx, arg->span);
      Ctx inner = ctx.bind("x", dom.value);
      auto [cod, cod_level] = type_meta(inner, arg->span);
      Term pi = tm::pi("x", implicit, dom.term, dom_level.term, cod.term,
                       cod_level.term);
      unify(ctx, f, ev(ctx, pi), arg->span);
      f = force(s_, type);
    }
    if (f->kind != Vk::kPi) {
      throw ElabError(arg->span, fmt::format("{} is not a function type",
                                             show(s_, ctx, f)));
    }
    if (f->implicit != implicit) {
      throw ElabError(arg->span, "unexpected implicit argument");
    }
    Term a = check(ctx, arg, f->args[0]);
    t = tm::app(t, a, implicit);
    type = instantiate(s_, *f->body, ev(ctx, a));
  }
  return {t, type};
}

std::pair<Term, Value> Elaborator::infer_spine(const Ctx& ctx, const SPtr& e,
                                               const Value* expected,
                                               bool* done) {
  SPtr head;
  Args args = spine_of(e, head);
  if (head->kind == Sx::kVar && ctx.lookup(head->name) < 0 &&
      !s_.globals.find(head->name) && is_builtin(head->name)) {
    return builtin(ctx, head->name, args, head->span, expected, done);
  }
  auto [t, type] = infer(ctx, head);
  auto out = apply_args(ctx, t, type, args, 0, e->span);
  return insert_implicits(ctx, out.first, out.second, e->span);
}

std::pair<Term, Value> Elaborator::infer(const Ctx& ctx, const SPtr& e) {
  switch (e->kind) {
    case Sx::kVar: {
      const int level = ctx.lookup(e->name);
      if (level >= 0) {
        return {tm::var(ctx.depth() - 1 - level), ctx.entries[level].type};
      }
      if (const GlobalDef* g = s_.globals.find(e->name)) {
        return {tm::global(e->name), g->type_value};
      }
      if (is_builtin(e->name)) return infer_spine(ctx, e, nullptr, nullptr);
      throw ElabError(e->span, "unbound name " + e->name);
    }
    case Sx::kApp:
      return infer_spine(ctx, e, nullptr, nullptr);
    case Sx::kHole: {
      auto [type, level] = type_meta(ctx, e->span);
      FreshMeta m = meta(ctx, type.value, e->span, MetaReason::kHole);
      return {m.term, type.value};
    }
    case Sx::kNum:
      return {tm::numeral(e->num), simple(Vk::kNat)};
    case Sx::kLam:
      return infer_lambda(ctx, e);
    case Sx::kPi:
    case Sx::kSigma:
      return check_type(ctx, e);
    case Sx::kPair: {
      auto [a, ta] = infer(ctx, e->kids[0]);
      auto [b, tb] = infer(ctx, e->kids[1]);
      Term la = level_of(ctx, ta, e->span);
      Term lb = level_of(ctx, tb, e->span);
      Term sigma = tm::sigma("_", qt(ctx, ta), la, shift(qt(ctx, tb), 1),
                             lb ? shift(lb, 1) : nullptr);
      return {tm::pair(a, b), ev(ctx, sigma)};
    }
    case Sx::kAnn: {
      auto [type, sort] = check_type(ctx, e->kids[1]);
      Value tv = ev(ctx, type);
      return {check(ctx, e->kids[0], tv), tv};
    }
    case Sx::kLet:
      return let(ctx, e, nullptr, false);
  }
  throw ElabError(e->span, "cannot infer");
}

std::pair<Term, Value> Elaborator::infer_lambda(const Ctx& ctx,
                                                const SPtr& e) {
  Term dom;
  Value dom_v;
  if (e->kids[0]) {
    dom = check_type(ctx, e->kids[0]).first;
    dom_v = ev(ctx, dom);
  } else {
    FreshMeta m = type_meta(ctx, e->span).first;
    dom = m.term;
    dom_v = m.value;
  }
  Ctx inner = ctx.bind(e->name, dom_v);
  auto [body, body_type] = infer(inner, e->kids[1]);
  Term pi = tm::pi(e->name, e->implicit, dom, level_of(ctx, dom_v, e->span),
                   qt(inner, body_type), level_of(inner, body_type, e->span));
  return {tm::lam(e->name, e->implicit, body), ev(ctx, pi)};
}

std::pair<Term, Value> Elaborator::let(const Ctx& ctx, const SPtr& e,
                                       const Value* expected, bool as_type) {
  Term ann;
  Value ann_v;
  Term bound;
  if (e->kids[0]) {
    ann = check_type(ctx, e->kids[0]).first;
    ann_v = ev(ctx, ann);
    bound = check(ctx, e->kids[1], ann_v);
  } else {
    std::tie(bound, ann_v) = infer(ctx, e->kids[1]);
    ann = qt(ctx, ann_v);
  }
  Ctx inner = ctx.define(e->name, ann_v, ev(ctx, bound));
  // Values never mention let-bound levels, so the body's type is also
  // valid outside the let.
  Term body;
  Value type;
  if (as_type) {
    std::tie(body, type) = check_type(inner, e->kids[2]);
  } else if (expected) {
    body = check(inner, e->kids[2], *expected);
    type = *expected;
  } else {
    std::tie(body, type) = infer(inner, e->kids[2]);
  }
  return {tm::let(e->name, ann, bound, body), type};
}

std::pair<Term, Value> Elaborator::builtin(const Ctx& ctx,
                                           const std::string& name,
                                           const Args& args, Span at,
                                           const Value* expected, bool* done) {
  std::size_t arity = builtin_arity().at(name);
  if (name == "Set" && !args.empty()) arity = 1;
  if (args.size() < arity) {
    // Under-application: eta-expand into a surface lambda.
    SPtr body = svar(name, at);
    for (const auto& [arg, implicit] : args) {
      body = sapp(body, arg, at, implicit);
    }
    std::vector<std::string> fresh;
    for (std::size_t i = args.size(); i < arity; ++i) {
      fresh.push_back("%" + std::to_string(i + 1));
      body = sapp(body, svar(fresh.back(), at), at);
    }
    for (auto it = fresh.rbegin(); it != fresh.rend(); ++it) {
      body = slam(*it, body, at);
    }
    if (expected) {
      if (done) *done = true;
      return {check(ctx, body, *expected), *expected};
    }
    return infer(ctx, body);
  }

  auto arg = [&](std::size_t i) -> const SPtr& { return args[i].first; };
  for (std::size_t i = 0; i < arity; ++i) {
    if (args[i].second) {
      throw ElabError(arg(i)->span, "unexpected implicit argument to " + name);
    }
  }
  const Value level_ty = simple(Vk::kLevelType);
  const Value nat = simple(Vk::kNat);
  Term t;
  Value type;

  if (name == "Set") {
    Term l = arity == 0 ? tm::lzero() : check(ctx, arg(0), level_ty);
    t = tm::sort(l);
    type = val::sort(nf_suc(to_level(s_, ev(ctx, l))));
  } else if (name == "Level") {
    t = tm::level();
    type = set_of(0);
  } else if (name == "lzero") {
    t = tm::lzero();
    type = level_ty;
  } else if (name == "lsuc") {
    t = tm::lsuc(check(ctx, arg(0), level_ty));
    type = level_ty;
  } else if (name == "lmax") {
    Term a = check(ctx, arg(0), level_ty);
    t = tm::lmax(a, check(ctx, arg(1), level_ty));
    type = level_ty;
  } else if (name == "Nat" || name == "Unit" || name == "Empty") {
    t = name == "Nat" ? tm::nat() : name == "Unit" ? tm::unit() : tm::empty();
    type = set_of(0);
  } else if (name == "zero") {
    t = tm::zero();
    type = nat;
  } else if (name == "suc") {
    t = tm::suc(check(ctx, arg(0), nat));
    type = nat;
  } else if (name == "tt") {
    t = tm::tt();
    type = simple(Vk::kUnit);
  } else if (name == "absurd") {
    Term motive = check_type(ctx, arg(0)).first;
    t = tm::absurd(motive, check(ctx, arg(1), simple(Vk::kEmpty)));
    type = ev(ctx, motive);
  } else if (name == "List") {
    auto [elem, sort] = check_type(ctx, arg(0));
    if (force(s_, sort)->kind != Vk::kSort) {
      throw ElabError(arg(0)->span, "List of a large type");
    }
    t = tm::list(elem);
    type = sort;
  } else if (name == "nil") {
    FreshMeta elem = type_meta(ctx, at).first;
    t = tm::nil();
    type = val::with_args(Vk::kList, {elem.value});
  } else if (name == "cons") {
    auto [h, elem] = infer(ctx, arg(0));
    Value list = val::with_args(Vk::kList, {elem});
    t = tm::cons(h, check(ctx, arg(1), list));
    type = list;
  } else if (name == "Id") {
    auto [a, sort] = check_type(ctx, arg(0));
    Value av = ev(ctx, a);
    Term x = check(ctx, arg(1), av);
    t = tm::id(a, x, check(ctx, arg(2), av));
    type = sort;
  } else if (name == "refl") {
    FreshMeta a = type_meta(ctx, at).first;
    FreshMeta x = meta(ctx, a.value, at, MetaReason::kImplicit);
    t = tm::refl();
    type = val::with_args(Vk::kId, {a.value, x.value, x.value});
  } else if (name == "J") {
    auto [e, eq] = infer(ctx, arg(2));
    eq = force(s_, eq);
    if (is_meta_headed(eq)) {
      FreshMeta a = type_meta(ctx, at).first;
      FreshMeta x = meta(ctx, a.value, at, MetaReason::kImplicit);
      FreshMeta y = meta(ctx, a.value, at, MetaReason::kImplicit);
      unify(ctx, eq, val::with_args(Vk::kId, {a.value, x.value, y.value}),
            arg(2)->span);
      eq = force(s_, eq);
    }
    if (eq->kind != Vk::kId) {
      throw ElabError(arg(2)->span,
                      fmt::format("J on {}, which is not an equation",
                                  show(s_, ctx, eq)));
    }
    Term a = qt(ctx, eq->args[0]);
    Term x = qt(ctx, eq->args[1]);
    FreshMeta l = level_meta(ctx, at);
    Term motive_ty = tm::pi(
        "y", false, a, nullptr,
        tm::pi("e", false, tm::id(shift(a, 1), shift(x, 1), tm::var(0)),
               nullptr, tm::sort(shift(l.term, 2)), nullptr),
        nullptr);
    Term motive = check(ctx, arg(0), ev(ctx, motive_ty));
    Value mv = ev(ctx, motive);
    Value refl_ty = apply(s_, apply(s_, mv, eq->args[1]), simple(Vk::kRefl));
    Term r = check(ctx, arg(1), refl_ty);
    t = tm::j(motive, r, e);
    type = apply(s_, apply(s_, mv, eq->args[2]), ev(ctx, e));
  } else if (name == "Lift") {
    Term l = check(ctx, arg(0), level_ty);
    auto [a, sort] = check_type(ctx, arg(1));
    sort = force(s_, sort);
    if (sort->kind != Vk::kSort) {
      throw ElabError(arg(1)->span, "Lift of a large type");
    }
    t = tm::lift_type(l, a);
    type = val::sort(nf_max(to_level(s_, ev(ctx, l)), sort->level));
  } else if (name == "lift") {
    auto [x, a] = infer(ctx, arg(0));
    FreshMeta l = level_meta(ctx, at);
    t = tm::lift(x);
    type = val::with_args(Vk::kLift, {l.value, a});
  } else if (name == "lower") {
    auto [x, a] = infer(ctx, arg(0));
    a = force(s_, a);
    if (a->kind != Vk::kLift) {
      throw ElabError(arg(0)->span, fmt::format("lower of {}, which is not "
                                                "a Lift",
                                                show(s_, ctx, a)));
    }
    t = tm::lower(x);
    type = a->args[1];
  } else if (name == "fst" || name == "snd") {
    auto [p, a] = infer(ctx, arg(0));
    a = force(s_, a);
    if (a->kind != Vk::kSigma) {
      throw ElabError(arg(0)->span, fmt::format("{} of {}, which is not a "
                                                "pair type",
                                                name, show(s_, ctx, a)));
    }
    if (name == "fst") {
      t = tm::fst(p);
      type = a->args[0];
    } else {
      t = tm::snd(p);
      type = instantiate(s_, *a->body, fst_of(s_, ev(ctx, p)));
    }
  }
  auto out = apply_args(ctx, t, type, args, arity, at);
  return insert_implicits(ctx, out.first, out.second, at);
}

Term Elaborator::check(const Ctx& ctx, const SPtr& e, const Value& expected) {
  Value f = force(s_, expected);
  if (f->kind == Vk::kPi && f->implicit &&
      !(e->kind == Sx::kLam && e->implicit)) {
    Ctx inner = ctx.bind(f->name, f->args[0], true);
    Term body = check(inner, e, instantiate(s_, *f->body,
                                            val::var(ctx.depth())));
    return tm::lam(f->name, true, body);
  }
  switch (e->kind) {
    case Sx::kLam:
      if (f->kind == Vk::kPi && f->implicit == e->implicit) {
        if (e->kids[0]) {
          Term ann = check_type(ctx, e->kids[0]).first;
          unify(ctx, ev(ctx, ann), f->args[0], e->kids[0]->span);
        }
        Ctx inner = ctx.bind(e->name, f->args[0]);
        Term body = check(inner, e->kids[1],
                          instantiate(s_, *f->body, val::var(ctx.depth())));
        return tm::lam(e->name, e->implicit, body);
      }
      break;
    case Sx::kPair:
      if (f->kind == Vk::kSigma) {
        Term a = check(ctx, e->kids[0], f->args[0]);
        Term b = check(ctx, e->kids[1],
                       instantiate(s_, *f->body, ev(ctx, a)));
        return tm::pair(a, b);
      }
      break;
    case Sx::kHole:
      return meta(ctx, f, e->span, MetaReason::kHole).term;
    case Sx::kLet:
      return let(ctx, e, &f, false).first;
    case Sx::kVar:
    case Sx::kApp: {
      SPtr head;
      Args args = spine_of(e, head);
      if (head->kind != Sx::kVar || ctx.lookup(head->name) >= 0 ||
          s_.globals.find(head->name) || !is_builtin(head->name)) {
        break;
      }
      const std::string& name = head->name;
      const bool plain = std::none_of(args.begin(), args.end(),
                                      [](const auto& a) { return a.second; });
      if (name == "refl" && args.empty() && f->kind == Vk::kId) {
        unify(ctx, f->args[1], f->args[2], e->span);
        return tm::refl();
      }
      if (name == "nil" && args.empty() && f->kind == Vk::kList) {
        return tm::nil();
      }
      if (name == "cons" && args.size() == 2 && plain &&
          f->kind == Vk::kList) {
        Term h = check(ctx, args[0].first, f->args[0]);
        return tm::cons(h, check(ctx, args[1].first, f));
      }
      if (name == "lift" && args.size() == 1 && plain &&
          f->kind == Vk::kLift) {
        return tm::lift(check(ctx, args[0].first, f->args[1]));
      }
      bool done = false;
      auto [t, type] = builtin(ctx, name, args, head->span, &f, &done);
      if (!done) unify(ctx, type, f, e->span);
      return t;
    }
    default:
      break;
  }
  auto [t, type] = infer(ctx, e);
  if (e->kind == Sx::kVar) {
    std::tie(t, type) = insert_implicits(ctx, t, type, e->span);
  }
  unify(ctx, type, f, e->span);
  return t;
}

std::pair<Term, Value> Elaborator::check_type(const Ctx& ctx, const SPtr& e) {
  switch (e->kind) {
    case Sx::kPi:
    case Sx::kSigma:
      return binder_type(ctx, e);
    case Sx::kHole: {
      auto [type, level] = type_meta(ctx, e->span);
      return {type.term, val::sort(to_level(s_, level.value))};
    }
    case Sx::kLet:
      return let(ctx, e, nullptr, true);
    default:
      break;
  }
  auto [t, sort] = infer(ctx, e);
  Value f = force(s_, sort);
  if (f->kind == Vk::kSort || f->kind == Vk::kSortOmega) return {t, f};
  if (is_meta_headed(f)) {
    FreshMeta l = level_meta(ctx, e->span);
    Value set = val::sort(to_level(s_, l.value));
    unify(ctx, f, set, e->span);
    return {t, set};
  }
  throw ElabError(e->span, fmt::format("{} is not a type; it has type {}",
                                       pretty(t, ctx.names()),
                                       show(s_, ctx, f)));
}

std::pair<Term, Value> Elaborator::binder_type(const Ctx& ctx, const SPtr& e) {
  const bool pi = e->kind == Sx::kPi;
  auto [a, sort_a] = check_type(ctx, e->kids[0]);
  Term la = sort_level(ctx, sort_a);
  auto build = [&](Term b, Term lb) {
    return pi ? tm::pi(e->name, e->implicit, a, la, b, lb)
              : tm::sigma(e->name, a, la, b, lb);
  };
  Value fa = force(s_, sort_a);
  const Value omega = simple(Vk::kSortOmega);

  if (e->name == "_") {
    auto [b, sort_b] = check_type(ctx, e->kids[1]);
    Value fb = force(s_, sort_b);
    Term lb = sort_level(ctx, fb);
    Term t = build(shift(b, 1), lb ? shift(lb, 1) : nullptr);
    if (fa->kind != Vk::kSort || fb->kind != Vk::kSort) return {t, omega};
    return {t, val::sort(nf_max(fa->level, fb->level))};
  }

  Ctx inner = ctx.bind(e->name, ev(ctx, a));
  auto [b, sort_b] = check_type(inner, e->kids[1]);
  Value fb = force(s_, sort_b);
  if (fb->kind != Vk::kSort) {
    return {build(b, nullptr), omega};
  }
  const int x = ctx.depth();
  bool rigid = false;
  bool flexible = false;
  for (const auto& [key, atom] : fb->level.atoms()) {
    if (!atom.head || !mentions_level(s_, atom.head, x)) continue;
    (atom.flexible() ? flexible : rigid) = true;
  }
  if (rigid) return {build(b, nullptr), omega};
  if (flexible) {
    FreshMeta o = level_meta(ctx, e->span);
    unify(inner, val::level(fb->level), o.value, e->span);
    Term t = build(b, shift(o.term, 1));
    if (fa->kind != Vk::kSort) return {t, omega};
    return {t, val::sort(nf_max(fa->level, to_level(s_, o.value)))};
  }
  Term t = build(b, quote_level(s_, inner.depth(), fb->level));
  if (fa->kind != Vk::kSort) return {t, omega};
  return {t, val::sort(nf_max(fa->level, fb->level))};
}
}  // namespace nary
