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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nary/term.h"
#include "nary/value.h"

namespace nary {

struct Span {
  int line = 0;
  int col = 0;
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

enum class PatKind : std::uint8_t { kVar, kZero, kSuc, kNil, kCons };

/// Constructor pattern over Nat/List. Variables bind in left-to-right,
/// depth-first order.
struct Pattern {
  PatKind kind = PatKind::kVar;
  std::string name;  // kVar
  std::vector<Pattern> kids;

  static Pattern var(std::string name);
  static Pattern zero();
  static Pattern suc(Pattern p);
  static Pattern nil();
  static Pattern cons(Pattern h, Pattern t);

  bool is_var() const { return kind == PatKind::kVar; }
  int var_count() const;
  std::string to_string() const;
};

struct Clause {
  std::vector<Pattern> params;  // one per consumed parameter
  std::vector<bool> implicit;   // parameter implicitness
  Term rhs;                     // scoped over the pattern variables
  Span span;
  int var_count() const;
};

/// A global defined by non-overlapping constructor-pattern clauses.
struct ClauseDef {
  std::string name;
  Term type;
  int arity = 0;            // number of parameters each clause consumes
  int explicit_arity = 0;   // of which explicit
  std::vector<int> matched; // parameter positions holding constructor patterns
  std::vector<Clause> clauses;
  /// Per-clause rigid head of the right-hand side with pattern variables
  /// kept abstract; only computed for single-position definitions.
  std::vector<std::string> inversion_summary;

  bool single_position() const { return matched.size() == 1; }
};

struct GlobalDef {
  std::string name;
  Term type;
  Value type_value;
  bool postulate = false;
  std::optional<ClauseDef> def;  // absent while being checked, or postulate
};

class Globals {
 public:
  GlobalDef* find(const std::string& name);
  const GlobalDef* find(const std::string& name) const;
  GlobalDef& add(GlobalDef def);
  void remove(const std::string& name);
  const std::vector<std::string>& order() const { return order_; }

 private:
  std::map<std::string, GlobalDef> defs_;
  std::vector<std::string> order_;
};

}  // namespace nary
