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

#include "nary/core_check.h"

#include <fmt/format.h>

#include "nary/pretty.h"

namespace nary {

bool is_eta_unit(const Session& s, const Value& type0) {
  Value type = force(s, type0);
  switch (type->kind) {
    case Vk::kUnit:
      return true;
    case Vk::kLift:
      return is_eta_unit(s, type->args[1]);
    case Vk::kSigma:
      return is_eta_unit(s, type->args[0]) &&
             is_eta_unit(s, instantiate(s, *type->body,
                                        eta_unit_value(s, type->args[0])));
    default:
      return false;
  }
}

Value eta_unit_value(const Session& s, const Value& type0) {
  Value type = force(s, type0);
  switch (type->kind) {
    case Vk::kLift:
      return val::with_args(Vk::kLiftIn, {eta_unit_value(s, type->args[1])});
    case Vk::kSigma: {
      Value a = eta_unit_value(s, type->args[0]);
      return val::pair(a, eta_unit_value(s, instantiate(s, *type->body, a)));
    }
    default:
      return val::simple(Vk::kTT);
  }
}

namespace {

bool conv_opt(const Session& s, const Ctx& ctx, const Value& a,
              const Value& b) {
  if (!a || !b) return !a && !b;
  return conv(s, ctx, a, b);
}

bool conv_closure(const Session& s, const Ctx& ctx, const Value& dom,
                  const std::optional<Closure>& a,
                  const std::optional<Closure>& b, const std::string& name) {
  if (!a || !b) return !a && !b;
  Value x = val::var(ctx.depth());
  return conv(s, ctx.bind(name, dom), instantiate(s, *a, x),
              instantiate(s, *b, x));
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

bool unit_typed(const Session& s, const Ctx& ctx, const Value& v) {
  if (v->kind != Vk::kNeutral) return false;
  Value ty = neutral_type(s, ctx, v);
  return ty && is_eta_unit(s, ty);
}

}  // namespace

bool conv(const Session& s, const Ctx& ctx, const Value& a0, const Value& b0) {
  Value a = force(s, a0);
  Value b = force(s, b0);
  if (a == b) return true;
  if (a->kind == Vk::kLevel || b->kind == Vk::kLevel) {
    return nf_equal(to_level(s, a), to_level(s, b));
  }
  if (a->kind == Vk::kLam || b->kind == Vk::kLam) {
    const Value& lam = a->kind == Vk::kLam ? a : b;
    Value x = val::var(ctx.depth());
    return conv(s, ctx.bind(lam->name, nullptr), apply(s, a, x, lam->implicit),
                apply(s, b, x, lam->implicit));
  }
  if (a->kind == Vk::kPair || b->kind == Vk::kPair) {
    for (const auto& v : {a, b}) {
      if (v->kind != Vk::kPair && v->kind != Vk::kNeutral) return false;
    }
    return conv(s, ctx, fst_of(s, a), fst_of(s, b)) &&
           conv(s, ctx, snd_of(s, a), snd_of(s, b));
  }
  if (a->kind == Vk::kLiftIn || b->kind == Vk::kLiftIn) {
    for (const auto& v : {a, b}) {
      if (v->kind != Vk::kLiftIn && v->kind != Vk::kNeutral) return false;
    }
    Elim lower;
    lower.kind = ElimKind::kLower;
    return conv(s, ctx, apply_elim(s, a, lower), apply_elim(s, b, lower));
  }
  if ((a->kind == Vk::kTT && b->kind == Vk::kNeutral) ||
      (b->kind == Vk::kTT && a->kind == Vk::kNeutral) ||
      unit_typed(s, ctx, a) || unit_typed(s, ctx, b)) {
    return true;
  }
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Vk::kPi:
    case Vk::kSigma:
      return a->implicit == b->implicit &&
             conv(s, ctx, a->args[0], b->args[0]) &&
             conv_opt(s, ctx, a->args[1], b->args[1]) &&
             conv_closure(s, ctx, a->args[0], a->body, b->body, a->name) &&
             conv_closure(s, ctx, a->args[0], a->body_level, b->body_level,
                          a->name);
    case Vk::kSort:
      return nf_equal(to_level(s, val::level(a->level)),
                      to_level(s, val::level(b->level)));
    case Vk::kNeutral: {
      if (!same_head(a->head, b->head)) return false;
      if (a->spine.size() != b->spine.size()) return false;
      for (std::size_t i = 0; i < a->spine.size(); ++i) {
        const Elim& x = a->spine[i];
        const Elim& y = b->spine[i];
        if (x.kind != y.kind || !conv_opt(s, ctx, x.arg, y.arg) ||
            !conv_opt(s, ctx, x.motive, y.motive) ||
            !conv_opt(s, ctx, x.refl_case, y.refl_case)) {
          return false;
        }
      }
      return true;
    }
    default:
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        if (!conv(s, ctx, a->args[i], b->args[i])) return false;
      }
      return true;
  }
}

bool CoreChecker::fail(std::string why, bool mismatch) {
  if (error_.empty()) error_ = std::move(why);
  mismatch_ = mismatch_ || mismatch;
  return false;
}

bool CoreChecker::eq(const Ctx& ctx, const Value& a, const Value& b) {
  if (equate_(ctx, a, b)) return true;
  return fail(fmt::format("{} is not {}", pretty(quote(s_, ctx.depth(), a),
                                                 ctx.names()),
                          pretty(quote(s_, ctx.depth(), b), ctx.names())),
              true);
}

bool CoreChecker::check_type(const Ctx& ctx, const Term& t, Value* sort) {
  Value ty = infer(ctx, t);
  if (!ty) return false;
  ty = force(s_, ty);
  if (ty->kind != Vk::kSort && ty->kind != Vk::kSortOmega) {
    return fail("expected a type: " + pretty(t, ctx.names()), false);
  }
  if (sort) *sort = ty;
  return true;
}

// Checks a binder type against its level annotation (any sort when absent).
Value CoreChecker::sort_of_binder(const Ctx& ctx, const Term& type,
                                  const Term& level, Value* level_value) {
  Value sort;
  if (!check_type(ctx, type, &sort)) return nullptr;
  if (!level) return sort;
  *level_value = eval(s_, ctx.env, level);
  if (!check(ctx, level, val::simple(Vk::kLevelType))) return nullptr;
  if (!eq(ctx, sort, val::sort(to_level(s_, *level_value)))) return nullptr;
  return sort;
}

Value CoreChecker::infer(const Ctx& ctx, const Term& t) {
  auto ev = [&](const Term& x) { return eval(s_, ctx.env, x); };
  auto set0 = [] { return val::sort(LevelNF::constant(0)); };
  const Value level_ty = val::simple(Vk::kLevelType);
  switch (t->kind) {
    case Tm::kVar: {
      const int lvl = ctx.depth() - 1 - t->index;
      if (lvl < 0 || !ctx.entries[lvl].type) {
        fail("untyped variable", false);
        return nullptr;
      }
      return ctx.entries[lvl].type;
    }
    case Tm::kGlobal: {
      const GlobalDef* g = s_.globals.find(t->name);
      if (!g) {
        fail("unknown global " + t->name, false);
        return nullptr;
      }
      return g->type_value;
    }
    case Tm::kMeta:
      return eval(s_, {}, s_.metas.entry(t->meta).type);
    case Tm::kApp: {
      Value fn = infer(ctx, t->kids[0]);
      if (!fn) return nullptr;
      fn = force(s_, fn);
      if (fn->kind != Vk::kPi) {
        fail("applying a non-function", false);
        return nullptr;
      }
      if (!check(ctx, t->kids[1], fn->args[0])) return nullptr;
      return instantiate(s_, *fn->body, ev(t->kids[1]));
    }
    case Tm::kPi:
    case Tm::kSigma: {
      Value dl, cl;
      Value ds = sort_of_binder(ctx, t->kids[0], t->kids[1], &dl);
      if (!ds) return nullptr;
      Ctx inner = ctx.bind(t->name, ev(t->kids[0]));
      Value cs = sort_of_binder(inner, t->kids[2], t->kids[3], &cl);
      if (!cs) return nullptr;
      if (!dl || !cl) return val::simple(Vk::kSortOmega);
      LevelNF cod = to_level(s_, cl);
      if (mentions_level(s_, val::level(cod), ctx.depth())) {
        return val::simple(Vk::kSortOmega);
      }
      return val::sort(nf_max(to_level(s_, dl), cod));
    }
    case Tm::kFst:
    case Tm::kSnd: {
      Value ty = infer(ctx, t->kids[0]);
      if (!ty) return nullptr;
      ty = force(s_, ty);
      if (ty->kind != Vk::kSigma) {
        fail("projection from a non-pair", false);
        return nullptr;
      }
      if (t->kind == Tm::kFst) return ty->args[0];
      return instantiate(s_, *ty->body, fst_of(s_, ev(t->kids[0])));
    }
    case Tm::kUnit:
    case Tm::kEmpty:
    case Tm::kNat:
    case Tm::kLevel:
      return set0();
    case Tm::kTT:
      return val::simple(Vk::kUnit);
    case Tm::kZero:
      return val::simple(Vk::kNat);
    case Tm::kSuc:
      if (!check(ctx, t->kids[0], val::simple(Vk::kNat))) return nullptr;
      return val::simple(Vk::kNat);
    case Tm::kAbsurd:
      if (!check_type(ctx, t->kids[0])) return nullptr;
      if (!check(ctx, t->kids[1], val::simple(Vk::kEmpty))) return nullptr;
      return ev(t->kids[0]);
    case Tm::kList: {
      Value sort;
      if (!check_type(ctx, t->kids[0], &sort)) return nullptr;
      return sort;
    }
    case Tm::kCons: {
      Value a = infer(ctx, t->kids[0]);
      if (!a) return nullptr;
      Value list = val::with_args(Vk::kList, {a});
      if (!check(ctx, t->kids[1], list)) return nullptr;
      return list;
    }
    case Tm::kId: {
      Value sort;
      if (!check_type(ctx, t->kids[0], &sort)) return nullptr;
      Value a = ev(t->kids[0]);
      if (!check(ctx, t->kids[1], a) || !check(ctx, t->kids[2], a)) {
        return nullptr;
      }
      return sort;
    }
    case Tm::kJ: {
      Value eq_ty = infer(ctx, t->kids[2]);
      if (!eq_ty) return nullptr;
      eq_ty = force(s_, eq_ty);
      if (eq_ty->kind != Vk::kId) {
        fail("J on a non-equation", false);
        return nullptr;
      }
      Value motive = ev(t->kids[0]);
      const Term& m = t->kids[0];
      if (m->kind == Tm::kLam && m->kids[0]->kind == Tm::kLam) {
        Value y = val::var(ctx.depth());
        Ctx c1 = ctx.bind(m->name, eq_ty->args[0]);
        Value e_ty = val::with_args(Vk::kId, {eq_ty->args[0], eq_ty->args[1], y});
        Ctx c2 = c1.bind(m->kids[0]->name, e_ty);
        if (!check_type(c2, m->kids[0]->kids[0])) return nullptr;
      } else if (!infer(ctx, m)) {
        return nullptr;
      }
      Value refl_ty = apply(s_, apply(s_, motive, eq_ty->args[1]),
                            val::simple(Vk::kRefl));
      if (!check(ctx, t->kids[1], refl_ty)) return nullptr;
      return apply(s_, apply(s_, motive, eq_ty->args[2]), ev(t->kids[2]));
    }
    case Tm::kLift: {
      if (!check(ctx, t->kids[0], level_ty)) return nullptr;
      Value sort;
      if (!check_type(ctx, t->kids[1], &sort)) return nullptr;
      if (sort->kind != Vk::kSort) {
        fail("Lift of a large type", false);
        return nullptr;
      }
      return val::sort(nf_max(to_level(s_, ev(t->kids[0])), sort->level));
    }
    case Tm::kLower: {
      Value ty = infer(ctx, t->kids[0]);
      if (!ty) return nullptr;
      ty = force(s_, ty);
      if (ty->kind != Vk::kLift) {
        fail("lower of a non-lift", false);
        return nullptr;
      }
      return ty->args[1];
    }
    case Tm::kSort:
      if (!check(ctx, t->kids[0], level_ty)) return nullptr;
      return val::sort(nf_suc(to_level(s_, ev(t->kids[0]))));
    case Tm::kLZero:
      return level_ty;
    case Tm::kLSuc:
      if (!check(ctx, t->kids[0], level_ty)) return nullptr;
      return level_ty;
    case Tm::kLMax:
      if (!check(ctx, t->kids[0], level_ty) ||
          !check(ctx, t->kids[1], level_ty)) {
        return nullptr;
      }
      return level_ty;
    case Tm::kLet: {
      if (!check_type(ctx, t->kids[0])) return nullptr;
      Value ann = ev(t->kids[0]);
      if (!check(ctx, t->kids[1], ann)) return nullptr;
      Ctx inner = ctx.define(t->name, ann, ev(t->kids[1]));
      Value ty = infer(inner, t->kids[2]);
      if (!ty) return nullptr;
      // The body type lives in the extended scope; the definition is
      // already substituted in every value, so it is valid outside too.
      return ty;
    }
    default:
      fail(fmt::format("cannot infer the type of {}", pretty(t, ctx.names())),
           false);
      return nullptr;
  }
}

bool CoreChecker::check(const Ctx& ctx, const Term& t, const Value& type0) {
  Value type = force(s_, type0);
  auto ev = [&](const Term& x) { return eval(s_, ctx.env, x); };
  switch (t->kind) {
    case Tm::kLam: {
      if (type->kind != Vk::kPi) return fail("lambda against a non-function", false);
      Value x = val::var(ctx.depth());
      return check(ctx.bind(t->name, type->args[0]), t->kids[0],
                   instantiate(s_, *type->body, x));
    }
    case Tm::kPair:
      if (type->kind != Vk::kSigma) return fail("pair against a non-pair", false);
      return check(ctx, t->kids[0], type->args[0]) &&
             check(ctx, t->kids[1],
                   instantiate(s_, *type->body, ev(t->kids[0])));
    case Tm::kRefl:
      if (type->kind != Vk::kId) return fail("refl against a non-equation", false);
      return eq(ctx, type->args[1], type->args[2]);
    case Tm::kNil:
      if (type->kind != Vk::kList) return fail("nil against a non-list", false);
      return true;
    case Tm::kLiftIn:
      if (type->kind != Vk::kLift) return fail("lift against a non-Lift", false);
      return check(ctx, t->kids[0], type->args[1]);
    case Tm::kLet: {
      if (!check_type(ctx, t->kids[0])) return false;
      Value ann = ev(t->kids[0]);
      if (!check(ctx, t->kids[1], ann)) return false;
      return check(ctx.define(t->name, ann, ev(t->kids[1])), t->kids[2], type);
    }
    default: {
      Value got = infer(ctx, t);
      if (!got) return false;
      if (force(s_, got)->kind == Vk::kSortOmega &&
          type->kind == Vk::kSortOmega) {
        return true;
      }
      return eq(ctx, got, type);
    }
  }
}

}  // namespace nary
