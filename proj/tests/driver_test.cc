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

#include <algorithm>
#include <filesystem>

#include "test_support.h"

namespace nary {
namespace {

const char* const kOkDecl = "x : Nat\nx = zero\n";
const char* const kUnsolvedDecl = "x : Nat\nx = (\\(y : Nat). zero) _\n";
const char* const kTypeErrorDecl = "x : Nat\nx = tt\n";

std::vector<std::string> corpus_files() {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(NARY_CORPUS_DIR)) {
    if (e.path().extension() == ".nry") files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  return files;
}

struct Case {
  const char* pragma;
  const char* decl;
  int code;
};

class ExitCodes : public ::testing::TestWithParam<Case> {};

TEST_P(ExitCodes, MatchExpectation) {
  const Case& c = GetParam();
  std::string text = std::string(c.pragma) + c.decl;
  auto r = testing::check(text, false);
  EXPECT_EQ(r->exit_code, c.code) << text << "\n" << r->output;
}

INSTANTIATE_TEST_SUITE_P(
    Matrix, ExitCodes,
    ::testing::Values(Case{"", kOkDecl, 0}, Case{"", kUnsolvedDecl, 1},
                      Case{"", kTypeErrorDecl, 1},
                      Case{"#expect ok\n", kOkDecl, 0},
                      Case{"#expect ok\n", kUnsolvedDecl, 1},
                      Case{"#expect ok\n", kTypeErrorDecl, 1},
                      Case{"#expect unsolved\n", kOkDecl, 1},
                      Case{"#expect unsolved\n", kUnsolvedDecl, 0},
                      Case{"#expect unsolved\n", kTypeErrorDecl, 1},
                      Case{"#expect typeerror\n", kOkDecl, 1},
                      Case{"#expect typeerror\n", kUnsolvedDecl, 1},
                      Case{"#expect typeerror\n", kTypeErrorDecl, 0}));

TEST(Driver, ParseErrorExitsWithTwo) {
  auto r = testing::check("x : (Nat\n", false);
  EXPECT_EQ(r->exit_code, 2);
  EXPECT_NE(r->output.find("2:1"), std::string::npos) << r->output;
}

TEST(Driver, ExpectationAppliesToNextDeclarationOnly) {
  auto r = testing::check(
      std::string("#expect typeerror\n") + kTypeErrorDecl + "y : Nat\ny = 1\n",
      false);
  EXPECT_EQ(r->exit_code, 0) << r->output;
}

TEST(Driver, ReportLines) {
  auto r = testing::check(std::string(kUnsolvedDecl) + "z : Nat\nz = tt\n" +
                              "w : Nat\nw = 2\n",
                          false);
  ASSERT_EQ(r->reports.size(), 3u);
  EXPECT_EQ(format_report(r->reports[0]),
            "UNSOLVED x: 1 metas, 0 constraints");
  EXPECT_EQ(r->reports[1].span.line, 3);
  EXPECT_EQ(format_report(r->reports[1]).rfind("TYPEERROR z: 4:5: ", 0), 0u)
      << format_report(r->reports[1]);
  EXPECT_EQ(format_report(r->reports[2]), "OK w");
  EXPECT_NE(r->output.find("  ?"), std::string::npos) << r->output;
  EXPECT_NE(r->output.find("  expected ok, got unsolved"), std::string::npos);
}

TEST(Driver, PrintMetasAndNormalForms) {
  Options o;
  o.print_metas = true;
  o.nf = {"t"};
  auto q = testing::check("t : List Nat\nt = map suc (cons 1 nil)\n", true, o);
  EXPECT_EQ(q->exit_code, 0) << q->output;
  EXPECT_NE(q->output.find(" := "), std::string::npos) << q->output;
  EXPECT_NE(q->output.find("t : List Nat\n"), std::string::npos) << q->output;
  EXPECT_NE(q->output.find("t = cons 2 nil\n"), std::string::npos)
      << q->output;
}

TEST(Driver, TraceLines) {
  Options o;
  o.trace_unify = true;
  auto r = testing::check("t : List Nat\nt = map suc (cons 1 nil)\n", true, o);
  EXPECT_NE(r->output.find("RULE "), std::string::npos) << r->output;
}

TEST(Driver, CorpusOutputIsDeterministic) {
  for (const auto& f : corpus_files()) {
    Options o;
    o.trace_unify = true;
    o.print_metas = true;
    auto a = testing::check(read_file(f), true, o);
    auto b = testing::check(read_file(f), true, o);
    EXPECT_EQ(a->output, b->output) << f;
  }
}

TEST(Driver, CorpusSolutionsValidate) {
  for (const auto& f : corpus_files()) {
    auto r = testing::check(read_file(f));
    for (const auto& p : validate(r->session)) ADD_FAILURE() << f << ": " << p;
  }
}

TEST(Driver, CorpusMeetsItsExpectations) {
  for (const auto& f : corpus_files()) {
    auto r = testing::check(read_file(f));
    EXPECT_EQ(r->exit_code, 0) << f << "\n" << r->output;
  }
}

TEST(Driver, MissingFileThrows) {
  EXPECT_THROW(read_file("/nonexistent/file.nry"), std::runtime_error);
}

}  // namespace
}  // namespace nary
