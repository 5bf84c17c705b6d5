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

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nary/globals.h"

namespace nary {

enum class Sx : std::uint8_t {
  kVar,    // name; builtins are resolved by the elaborator
  kHole,   // _
  kNum,    // num
  kApp,    // {fn, arg}, implicit
  kLam,    // {annotation?, body}, name, implicit
  kPi,     // {dom, cod}, name ("_" when anonymous), implicit
  kSigma,  // {fst, snd}, name
  kPair,   // {a, b}
  kAnn,    // {e, type}
  kLet,    // {annotation?, bound, body}, name
};

struct SExpr;
using SPtr = std::shared_ptr<const SExpr>;

struct SExpr {
  Sx kind = Sx::kVar;
  Span span;
  std::string name;
  bool implicit = false;
  unsigned num = 0;
  std::vector<SPtr> kids;
};

struct SPattern {
  Pattern pat;
  bool implicit = false;
};

enum class DeclKind : std::uint8_t { kSignature, kClause, kPostulate, kExpect };

struct SDecl {
  DeclKind kind = DeclKind::kSignature;
  Span span;
  std::string name;              // or the tag of an expect pragma
  std::vector<SPattern> params;  // kClause
  SPtr expr;                     // type or right-hand side
};

struct ParseError : std::runtime_error {
  ParseError(Span at, const std::string& what)
      : std::runtime_error(what), span(at) {}
  Span span;
};

/// Parses a whole file. Throws ParseError.
std::vector<SDecl> parse_file(const std::string& text);
/// Parses a single expression. Throws ParseError.
SPtr parse_expr(const std::string& text);

}  // namespace nary
