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

#include <gtest/gtest.h>

#include "nary/core_check.h"
#include "nary/eval.h"
#include "nary/pretty.h"
#include "test_support.h"

namespace nary {
namespace {

using testing::check;
using testing::elaborate;

Term nf_closed(const Session& s, const Term& t) { return nf(s, {}, t); }

TEST(Terms, ShiftSkipsBoundIndices) {
  Term body = tm::app(tm::var(0), tm::var(1));
  Term lam = tm::lam("x", false, body);
  Term shifted = shift(lam, 2);
  EXPECT_TRUE(alpha_equal(shifted,
                          tm::lam("x", false, tm::app(tm::var(0), tm::var(3)))));
}

TEST(Terms, AlphaEqualIgnoresBinderNames) {
  EXPECT_TRUE(alpha_equal(tm::lam("x", false, tm::var(0)),
                          tm::lam("y", false, tm::var(0))));
  EXPECT_FALSE(alpha_equal(tm::lam("x", false, tm::var(0)),
                           tm::lam("x", true, tm::var(0))));
}

TEST(Terms, WellScoped) {
  EXPECT_TRUE(well_scoped(tm::lam("x", false, tm::var(0)), 0));
  EXPECT_FALSE(well_scoped(tm::lam("x", false, tm::var(1)), 0));
  EXPECT_TRUE(well_scoped(tm::lam("x", false, tm::var(1)), 1));
}

TEST(Eval, BetaReduces) {
  Session s;
  Term id = tm::lam("x", false, tm::var(0));
  EXPECT_TRUE(alpha_equal(nf_closed(s, tm::app(id, tm::zero())), tm::zero()));
}

TEST(Eval, LetIsSubstituted) {
  Session s;
  Term t = tm::let("x", tm::nat(), tm::numeral(2), tm::suc(tm::var(0)));
  EXPECT_TRUE(alpha_equal(nf_closed(s, t), tm::numeral(3)));
}

TEST(Eval, ProjectionsOfPairs) {
  Session s;
  Term p = tm::pair(tm::zero(), tm::tt());
  EXPECT_TRUE(alpha_equal(nf_closed(s, tm::fst(p)), tm::zero()));
  EXPECT_TRUE(alpha_equal(nf_closed(s, tm::snd(p)), tm::tt()));
}

TEST(Eval, LowerOfLift) {
  Session s;
  EXPECT_TRUE(alpha_equal(nf_closed(s, tm::lower(tm::lift(tm::zero()))),
                          tm::zero()));
}

TEST(Eval, JOnReflReturnsReflCase) {
  Session s;
  Term motive = tm::lam("y", false, tm::lam("e", false, tm::nat()));
  Term t = tm::j(motive, tm::numeral(4), tm::refl());
  EXPECT_TRUE(alpha_equal(nf_closed(s, t), tm::numeral(4)));
}

TEST(Eval, NeutralVariablesStayStuck) {
  Session s;
  Value v = eval(s, {val::var(0)}, tm::fst(tm::var(0)));
  ASSERT_TRUE(is_neutral(v));
  ASSERT_EQ(v->spine.size(), 1u);
  EXPECT_EQ(v->spine[0].kind, ElimKind::kFst);
}

TEST(Eval, QuoteReadsLevelsBackAsIndices) {
  Session s;
  Value v = val::var(0);
  EXPECT_TRUE(alpha_equal(quote(s, 3, v), tm::var(2)));
}

TEST(Eval, PlusComputes) {
  auto c = check("");
  auto [t, ty] = elaborate(c->session, "plus 2 3");
  EXPECT_TRUE(alpha_equal(nf_closed(c->session, t), tm::numeral(5)));
}

TEST(Eval, ArrowsUnfoldsOnConcreteArity) {
  auto c = check("");
  auto [t, ty] = elaborate(c->session, "Arrows 2 (Nat, List Nat, _) Nat");
  EXPECT_EQ(pretty(nf_closed(c->session, t)), "Nat -> List Nat -> Nat");
}

TEST(Eval, SupOfTwo) {
  auto c = check("postulate a : Level\npostulate b : Level\n");
  auto [t, ty] = elaborate(c->session, "sup 2 (a, b, tt)");
  EXPECT_EQ(pretty(nf_closed(c->session, t)), "lmax a b");
}

// A clausal definition applied to an unsolved meta at its matched position
// must stay a global-headed neutral.
TEST(Eval, StuckOnMetaAtMatchedPosition) {
  auto c = check("");
  Session& s = c->session;
  const std::vector<std::string> defs = {"Levels", "sup",   "Sets",
                                         "Arrows", "nary",  "Product",
                                         "curryn", "mapn",  "quantn"};
  for (const auto& name : defs) {
    const GlobalDef* g = s.globals.find(name);
    ASSERT_TRUE(g && g->def) << name;
    const ClauseDef& d = *g->def;
    ASSERT_FALSE(d.matched.empty()) << name;
    std::vector<Value> args;
    for (int i = 0; i < d.arity; ++i) args.push_back(val::var(i));
    s.metas.begin_decl();
    MetaId m = s.metas.fresh(tm::nat(), 0, {}, Span{}, MetaReason::kHole);
    args[d.matched.front()] = val::meta(m);
    Value v = val::global(name);
    for (int i = 0; i < d.arity; ++i) {
      v = apply(s, v, args[i], d.clauses.front().implicit[i]);
    }
    v = force(s, v);
    ASSERT_TRUE(is_neutral(v)) << name;
    EXPECT_EQ(v->head.kind, HeadKind::kGlobal) << name;
    EXPECT_EQ(v->head.global, name);
  }
}

// nf is idempotent and preserves types on every checked global.
TEST(EvalProperties, NormalFormIdempotentAndTyped) {
  std::string all;
  for (const char* f : {"reduction/reduction.nry", "arity/arity.nry"}) {
    all += read_file(testing::corpus_path(f)) + "\n";
  }
  auto c = check(all);
  Session& s = c->session;
  ASSERT_EQ(c->exit_code, 0) << c->output;
  CoreChecker checker(s, [&s](const Ctx& ctx, const Value& a, const Value& b) {
    return conv(s, ctx, a, b);
  });
  int checked = 0;
  for (const auto& name : s.globals.order()) {
    const GlobalDef* g = s.globals.find(name);
    if (!g) continue;
    Term once = nf_closed(s, g->type);
    EXPECT_TRUE(alpha_equal(once, nf_closed(s, once))) << name;
    EXPECT_TRUE(checker.check_type(Ctx{}, once)) << name << ": "
                                                 << checker.error();
    if (g->def && g->def->arity == 0) {
      Term rhs = nf_closed(s, g->def->clauses.front().rhs);
      EXPECT_TRUE(alpha_equal(rhs, nf_closed(s, rhs))) << name;
      EXPECT_TRUE(checker.check(Ctx{}, rhs, g->type_value))
          << name << ": " << checker.error();
    }
    ++checked;
  }
  EXPECT_GT(checked, 60);
}

}  // namespace
}  // namespace nary
