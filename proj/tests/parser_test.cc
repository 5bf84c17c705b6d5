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

#include "nary/pretty.h"
#include "nary/surface.h"
#include "roundtrip.h"
#include "test_support.h"

namespace nary {
namespace {

TEST(Parser, DeclarationKinds) {
  auto ds = parse_file(
      "#expect unsolved\n"
      "f : Nat -> Nat\n"
      "f zero = 1\n"
      "f (suc n) = n\n"
      "postulate P : Nat -> Set\n");
  ASSERT_EQ(ds.size(), 5u);
  EXPECT_EQ(ds[0].kind, DeclKind::kExpect);
  EXPECT_EQ(ds[0].name, "unsolved");
  EXPECT_EQ(ds[1].kind, DeclKind::kSignature);
  EXPECT_EQ(ds[2].kind, DeclKind::kClause);
  EXPECT_EQ(ds[3].params.size(), 1u);
  EXPECT_EQ(ds[3].params[0].pat.to_string(), "(suc n)");
  EXPECT_EQ(ds[4].kind, DeclKind::kPostulate);
}

TEST(Parser, ContinuationLinesAreIndented) {
  auto ds = parse_file("f : Nat ->\n  Nat\nf n = n\n");
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[0].expr->kind, Sx::kPi);
}

TEST(Parser, ImplicitPatternsAndNumerals) {
  auto ds = parse_file("g {suc n} 2 (cons x xs) = x\n");
  ASSERT_EQ(ds.size(), 1u);
  ASSERT_EQ(ds[0].params.size(), 3u);
  EXPECT_TRUE(ds[0].params[0].implicit);
  EXPECT_EQ(ds[0].params[1].pat.to_string(), "2");
  EXPECT_EQ(ds[0].params[2].pat.kind, PatKind::kCons);
}

TEST(Parser, IdentifiersWithDashesAndPrimes) {
  SPtr e = parse_expr("zw-aux x' -> y");
  ASSERT_EQ(e->kind, Sx::kPi);
  EXPECT_EQ(e->kids[0]->kind, Sx::kApp);
  EXPECT_EQ(e->kids[0]->kids[0]->name, "zw-aux");
}

TEST(Parser, DependentAndNonDependentBinders) {
  SPtr pi = parse_expr("(x y : Nat) -> {A : Set} -> A");
  ASSERT_EQ(pi->kind, Sx::kPi);
  EXPECT_EQ(pi->name, "x");
  EXPECT_EQ(pi->kids[1]->name, "y");
  EXPECT_TRUE(pi->kids[1]->kids[1]->implicit);
  SPtr sg = parse_expr("(x : Nat) * Id Nat x x");
  EXPECT_EQ(sg->kind, Sx::kSigma);
  SPtr prod = parse_expr("Nat * Nat * Nat");
  ASSERT_EQ(prod->kind, Sx::kSigma);
  EXPECT_EQ(prod->kids[1]->kind, Sx::kSigma);
}

TEST(Parser, PairsNestToTheRight) {
  SPtr p = parse_expr("(1, 2, 3)");
  ASSERT_EQ(p->kind, Sx::kPair);
  EXPECT_EQ(p->kids[1]->kind, Sx::kPair);
}

TEST(Parser, LambdasLetsAndAnnotations) {
  SPtr l = parse_expr("\\{x} (y : Nat) z. y");
  ASSERT_EQ(l->kind, Sx::kLam);
  EXPECT_TRUE(l->implicit);
  EXPECT_TRUE(l->kids[1]->kids[0] != nullptr);
  SPtr let = parse_expr("let A : Set = Nat in (zero : A)");
  ASSERT_EQ(let->kind, Sx::kLet);
  EXPECT_EQ(let->kids[2]->kind, Sx::kAnn);
}

TEST(Parser, TrailingLambdaArgument) {
  SPtr e = parse_expr("f \\x. x");
  ASSERT_EQ(e->kind, Sx::kApp);
  EXPECT_EQ(e->kids[1]->kind, Sx::kLam);
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse_file("f : Nat ->\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span.line, 2);
  }
  EXPECT_THROW(parse_file("f : (Nat\n"), ParseError);
  EXPECT_THROW(parse_file("#expect maybe\n"), ParseError);
  EXPECT_THROW(parse_file("f : Nat $ Nat\n"), ParseError);
}

TEST(Pretty, PrintsCoreForms) {
  EXPECT_EQ(pretty(tm::numeral(3)), "3");
  EXPECT_EQ(pretty(tm::sort(tm::lzero())), "Set");
  EXPECT_EQ(pretty(tm::sort_omega()), "Setw");
  EXPECT_EQ(pretty(tm::pi("_", false, tm::nat(), nullptr,
                          tm::nat(), nullptr)),
            "Nat -> Nat");
  EXPECT_EQ(pretty(tm::lam("x", true, tm::var(0))), "\\{x}. x");
}

TEST(Pretty, FreshNamesAvoidCapture) {
  Term t = tm::lam("x", false, tm::lam("x", false, tm::var(1)));
  std::string s = pretty(t);
  SPtr back = parse_expr(s);
  ASSERT_EQ(back->kind, Sx::kLam);
  EXPECT_NE(back->name, back->kids[1]->name) << s;
}

// Every declaration of the prelude and the corpus survives
// print -> parse -> elaborate.
TEST(RoundTrip, AllCorpusDeclarations) {
  namespace fs = std::filesystem;
  for (const auto& entry :
       fs::recursive_directory_iterator(NARY_CORPUS_DIR)) {
    if (entry.path().extension() != ".nry") continue;
    auto c = testing::check(read_file(entry.path().string()));
    auto r = testing::round_trip_globals(c->session);
    EXPECT_GT(r.checked, 0);
    for (const auto& f : r.failures) {
      ADD_FAILURE() << entry.path().filename() << ": " << f;
    }
  }
}

}  // namespace
}  // namespace nary
