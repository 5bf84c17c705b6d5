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

#include <filesystem>

#include "nary/core_check.h"
#include "nary/pretty.h"
#include "test_support.h"

namespace nary {
namespace {

std::string show(const Session& s, const Value& v) {
  return pretty(s.metas.zonk(quote(s, 0, v)));
}

struct Elab : ::testing::Test {
  std::unique_ptr<testing::Checked> prelude = testing::check("");

  std::pair<std::string, std::string> run(const std::string& text) {
    auto [t, ty] = testing::elaborate(prelude->session, text);
    return {pretty(t), show(prelude->session, ty)};
  }
};

TEST_F(Elab, BuiltinTypes) {
  EXPECT_EQ(run("suc zero").second, "Nat");
  EXPECT_EQ(run("Set").second, "Set (lsuc lzero)");
  EXPECT_EQ(run("Level").second, "Set");
  EXPECT_EQ(run("Set (lmax lzero (lsuc lzero))").second,
            "Set (lsuc (lsuc lzero))");
  EXPECT_EQ(run("tt").second, "Unit");
  EXPECT_EQ(run("cons 1 nil").second, "List Nat");
  EXPECT_EQ(run("(1, tt)").second, "Nat * Unit");
}

TEST_F(Elab, UnderAppliedBuiltinsExpand) {
  EXPECT_EQ(run("suc").second, "Nat -> Nat");
  EXPECT_EQ(run("cons 1").second, "List Nat -> List Nat");
}

TEST_F(Elab, ImplicitArgumentsAreInserted) {
  auto [t, ty] = run("map suc (cons 1 nil)");
  EXPECT_EQ(ty, "List Nat");
  EXPECT_NE(t.find("{"), std::string::npos) << t;
}

TEST_F(Elab, ExplicitImplicitArguments) {
  auto [t, ty] = run("map {lzero} {lzero} {Nat} {Nat} suc nil");
  EXPECT_EQ(ty, "List Nat");
}

TEST_F(Elab, HiddenLambdaIsInserted) {
  Session& ps = prelude->session;
  Elaborator el(ps);
  ps.metas.begin_decl();
  auto [ty, sort] = el.check_type(Ctx{}, parse_expr("{A : Set} -> A -> A"));
  Term t = el.check(Ctx{}, parse_expr("\\x. x"), eval(ps, {}, ty));
  EXPECT_EQ(pretty(t), "\\{_} x. x");
}

TEST_F(Elab, LevelQuantificationLandsInSetOmega) {
  EXPECT_EQ(run("(l : Level) -> Set l").second, "Setw");
  EXPECT_EQ(run("{l : Level} -> Set l -> Set l").second, "Setw");
  EXPECT_EQ(run("(n : Nat) -> Levels n").second, "Set");
}

TEST_F(Elab, LevelsOfDependentTypes) {
  EXPECT_EQ(run("(A : Set) -> A").second, "Set (lsuc lzero)");
  EXPECT_EQ(run("(A : Set) * A").second, "Set (lsuc lzero)");
  EXPECT_EQ(run("Lift (lsuc lzero) Nat").second, "Set (lsuc lzero)");
  EXPECT_THROW(run("Set 2"), ElabError);
}

TEST_F(Elab, LetAndAnnotation) {
  auto [t, ty] = run("let n : Nat = 2 in (suc n : Nat)");
  EXPECT_EQ(ty, "Nat");
}

TEST_F(Elab, HoleBecomesMeta) {
  Session& ps = prelude->session;
  std::size_t before = ps.metas.meta_count();
  run("(_ : Nat)");
  EXPECT_GT(ps.metas.meta_count(), before);
}

TEST_F(Elab, Errors) {
  EXPECT_THROW(run("zero zero"), ElabError);
  EXPECT_THROW(run("nosuchname"), ElabError);
  EXPECT_THROW(run("fst zero"), ElabError);
  EXPECT_THROW(run("(tt : Nat)"), ElabError);
}

TEST_F(Elab, ImplicitApplicationOfExplicitPiFails) {
  EXPECT_THROW(run("suc {zero}"), ElabError);
}

TEST_F(Elab, ErrorsCarryPositions) {
  try {
    run("suc\n  tt");
    FAIL();
  } catch (const ElabError& e) {
    EXPECT_EQ(e.span.line, 2);
  }
}

// Elaboration completes every implicit argument: each closed definition of
// the prelude and corpus re-checks under plain conversion, which rejects
// any mismatch in application implicitness.
TEST(ElabProperty, ElaboratedDefinitionsRecheck) {
  namespace fs = std::filesystem;
  std::vector<std::string> files{NARY_PRELUDE_PATH};
  for (const auto& e : fs::recursive_directory_iterator(NARY_CORPUS_DIR)) {
    if (e.path().extension() == ".nry") files.push_back(e.path().string());
  }
  int checked = 0;
  for (const auto& f : files) {
    auto c = testing::check(read_file(f), f != NARY_PRELUDE_PATH);
    Session& s = c->session;
    for (const auto& name : s.globals.order()) {
      const GlobalDef* g = s.globals.find(name);
      if (!g || !g->def || g->def->arity != 0) continue;
      Term rhs = s.metas.zonk(g->def->clauses[0].rhs);
      std::vector<MetaId> left;
      collect_metas(rhs, left);
      if (!left.empty()) continue;
      CoreChecker cc(s, [&](const Ctx& ctx, const Value& a, const Value& b) {
        return conv(s, ctx, a, b);
      });
      EXPECT_TRUE(cc.check(Ctx{}, rhs, g->type_value))
          << f << ": " << name << ": " << cc.error();
      ++checked;
    }
  }
  EXPECT_GT(checked, 30);
}

}  // namespace
}  // namespace nary
