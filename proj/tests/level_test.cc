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

#include "level_oracle.h"
#include "nary/level.h"

namespace nary {
namespace {

LevelNF atom(const std::string& k, unsigned off = 0) {
  return LevelNF::atom(k, off);
}
LevelNF meta(const std::string& k, unsigned off = 0) {
  return LevelNF::atom(k, off, AtomKind::kMeta);
}

TEST(LevelNF, ConstantsCollapse) {
  EXPECT_TRUE(nf_equal(nf_max(LevelNF::constant(2), LevelNF::constant(1)),
                       LevelNF::constant(2)));
  EXPECT_TRUE(nf_equal(nf_suc(LevelNF::constant(0)), LevelNF::constant(1)));
}

TEST(LevelNF, ConstantDroppedUnderLargerAtom) {
  LevelNF l = nf_max(atom("a", 2), LevelNF::constant(1));
  EXPECT_EQ(l.constant_part(), 0u);
  EXPECT_EQ(l.atoms().size(), 1u);
}

TEST(LevelNF, OneAtomPerHead) {
  LevelNF l = nf_max(atom("a", 1), atom("a", 3));
  ASSERT_EQ(l.atoms().size(), 1u);
  EXPECT_EQ(l.atoms().at("a").offset, 3u);
}

TEST(LevelNF, SucOfMaxWithZero) {
  EXPECT_TRUE(nf_equal(nf_suc(nf_max(atom("a"), LevelNF::constant(0))),
                       nf_suc(atom("a"))));
}

TEST(LevelNF, RenderingIsCanonical) {
  EXPECT_EQ(nf_max(atom("b"), atom("a", 1)).to_string(),
            nf_max(atom("a", 1), atom("b")).to_string());
}

TEST(LevelLaws, ExhaustiveEnumeration) {
  testing::LawCheck c = testing::check_level_laws();
  EXPECT_GE(c.instances, 4000u);
  for (const auto& f : c.failures) ADD_FAILURE() << f;
}

TEST(SolveLevel, SingleMetaAgainstClosedLevel) {
  auto r = solve_level(meta("?1"), LevelNF::constant(2));
  auto* s = std::get_if<LevelSolved>(&r);
  ASSERT_NE(s, nullptr);
  ASSERT_EQ(s->assignments.size(), 1u);
  EXPECT_TRUE(nf_equal(s->assignments[0].value, LevelNF::constant(2)));
}

TEST(SolveLevel, OffsetIsConsumed) {
  auto r = solve_level(meta("?1", 1), atom("a", 3));
  auto* s = std::get_if<LevelSolved>(&r);
  ASSERT_NE(s, nullptr);
  EXPECT_TRUE(nf_equal(s->assignments[0].value, atom("a", 2)));
}

TEST(SolveLevel, OffsetTooLargeFails) {
  auto r = solve_level(meta("?1", 2), LevelNF::constant(1));
  EXPECT_TRUE(std::holds_alternative<LevelFailed>(r));
}

TEST(SolveLevel, RigidMismatchFails) {
  auto r = solve_level(atom("a"), atom("b"));
  EXPECT_TRUE(std::holds_alternative<LevelFailed>(r));
}

TEST(SolveLevel, EqualRigidLevelsNeedNothing) {
  auto r = solve_level(nf_max(atom("a"), atom("b", 1)),
                       nf_max(atom("b", 1), atom("a")));
  auto* s = std::get_if<LevelSolved>(&r);
  ASSERT_NE(s, nullptr);
  EXPECT_TRUE(s->assignments.empty());
}

TEST(SolveLevel, TwoMetasPostpone) {
  auto r = solve_level(nf_max(meta("?1"), meta("?2")), LevelNF::constant(0));
  EXPECT_TRUE(std::holds_alternative<LevelPostponed>(r));
}

TEST(SolveLevel, OutOfScopeAtomPostponesOrFails) {
  auto r = solve_level(meta("?1"), atom("a"),
                       [](const LevelAtom& x) { return x.key != "a"; });
  EXPECT_FALSE(std::holds_alternative<LevelSolved>(r));
}

}  // namespace
}  // namespace nary
