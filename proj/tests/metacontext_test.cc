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

#include "nary/metacontext.h"
#include "nary/pretty.h"

namespace nary {
namespace {

MetaId fresh(MetaContext& mc, Span at = Span{1, 1}) {
  return mc.fresh(tm::nat(), 0, {}, at, MetaReason::kHole);
}

TEST(MetaContext, FreshMetasAreUnsolved) {
  MetaContext mc;
  mc.begin_decl();
  MetaId a = fresh(mc);
  MetaId b = fresh(mc);
  EXPECT_NE(a, b);
  EXPECT_FALSE(mc.is_solved(a));
  EXPECT_EQ(mc.entry(b).decl, mc.current_decl());
}

TEST(MetaContext, SolveRejectsOccurrence) {
  MetaContext mc;
  MetaId a = fresh(mc);
  EXPECT_EQ(mc.solve(a, tm::suc(tm::meta(a))), SolveStatus::kOccursError);
  EXPECT_FALSE(mc.is_solved(a));
}

TEST(MetaContext, SolveRejectsOpenTerms) {
  MetaContext mc;
  MetaId a = fresh(mc);
  EXPECT_EQ(mc.solve(a, tm::var(0)), SolveStatus::kScopeError);
}

TEST(MetaContext, SolveSeesThroughSolvedMetas) {
  MetaContext mc;
  MetaId a = fresh(mc);
  MetaId b = fresh(mc);
  ASSERT_EQ(mc.solve(b, tm::suc(tm::meta(a))), SolveStatus::kOk);
  EXPECT_EQ(mc.solve(a, tm::meta(b)), SolveStatus::kOccursError);
}

TEST(MetaContext, ZonkSubstitutesAndBetaReduces) {
  MetaContext mc;
  MetaId f = mc.fresh(tm::pi("x", false, tm::nat(), tm::lzero(), tm::nat(),
                             tm::lzero()),
                      1, {"x"}, Span{}, MetaReason::kHole);
  ASSERT_EQ(mc.solve(f, tm::lam("x", false, tm::suc(tm::var(0)))),
            SolveStatus::kOk);
  Term t = tm::app(tm::meta(f), tm::zero());
  EXPECT_EQ(pretty(mc.zonk(t)), "1");
}

TEST(MetaContext, ZonkLeavesUnsolvedMetas) {
  MetaContext mc;
  MetaId a = fresh(mc);
  Term t = tm::suc(tm::meta(a));
  EXPECT_EQ(mc.zonk(t), t);
}

TEST(MetaContext, SolvingWakesBlockedConstraints) {
  MetaContext mc;
  MetaId a = fresh(mc);
  ConstraintEntry c;
  int id = mc.add_constraint(c);
  mc.postpone(id, {a});
  EXPECT_FALSE(mc.has_active());
  ASSERT_EQ(mc.solve(a, tm::zero()), SolveStatus::kOk);
  ASSERT_TRUE(mc.has_active());
  EXPECT_EQ(mc.pop_active(), id);
  EXPECT_EQ(mc.constraint(id).status, ConstraintStatus::kActive);
}

TEST(MetaContext, UnrelatedSolutionsDoNotWake) {
  MetaContext mc;
  MetaId a = fresh(mc);
  MetaId b = fresh(mc);
  int id = mc.add_constraint(ConstraintEntry{});
  mc.postpone(id, {a});
  ASSERT_EQ(mc.solve(b, tm::zero()), SolveStatus::kOk);
  EXPECT_FALSE(mc.has_active());
}

TEST(MetaContext, UnsolvedReportIsPerDeclarationAndOrdered) {
  MetaContext mc;
  mc.begin_decl();
  fresh(mc, Span{1, 1});
  mc.begin_decl();
  MetaId late = fresh(mc, Span{3, 9});
  MetaId early = fresh(mc, Span{3, 2});
  MetaId solved = fresh(mc, Span{2, 2});
  ASSERT_EQ(mc.solve(solved, tm::zero()), SolveStatus::kOk);
  std::vector<MetaId> expected = {early, late};
  EXPECT_EQ(mc.unsolved_metas(mc.current_decl()), expected);
  EXPECT_EQ(mc.unsolved_metas(1).size(), 1u);
}

TEST(MetaContext, SolvedConstraintsAreNotReported) {
  MetaContext mc;
  mc.begin_decl();
  int a = mc.add_constraint(ConstraintEntry{});
  int b = mc.add_constraint(ConstraintEntry{});
  mc.constraint(a).status = ConstraintStatus::kSolved;
  std::vector<int> expected = {b};
  EXPECT_EQ(mc.unsolved_constraints(mc.current_decl()), expected);
}

}  // namespace
}  // namespace nary
