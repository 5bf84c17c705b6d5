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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nary/context.h"
#include "nary/eval.h"
#include "nary/surface.h"
#include "nary/unify.h"

namespace nary {

struct ElabError : std::runtime_error {
  ElabError(Span at, const std::string& what)
      : std::runtime_error(what), span(at) {}
  Span span;
};

/// Bidirectional elaboration of surface expressions into core terms.
/// Unification problems are solved eagerly; what cannot be decided yet
/// stays in the session's metacontext.
class Elaborator {
 public:
  explicit Elaborator(Session& s) : s_(s) {}

  std::pair<Term, Value> infer(const Ctx& ctx, const SPtr& e);
  Term check(const Ctx& ctx, const SPtr& e, const Value& expected);
  /// Elaborates a type; returns the term and its sort (Set l or the
  /// limit sort).
  std::pair<Term, Value> check_type(const Ctx& ctx, const SPtr& e);

  /// Binds the variables of a clause pattern of type `type` in `ctx` and
  /// returns the value the pattern denotes.
  Value bind_pattern(Ctx& ctx, const Pattern& p, const Value& type, Span at);

 private:
  Value ev(const Ctx& ctx, const Term& t) const;
  Term qt(const Ctx& ctx, const Value& v) const;
  void unify(const Ctx& ctx, const Value& a, const Value& b, Span at);
  FreshMeta meta(const Ctx& ctx, const Value& type, Span at, MetaReason why);
  FreshMeta level_meta(const Ctx& ctx, Span at);
  /// A fresh type `?T : Set ?l`; returns ?T and the level ?l.
  std::pair<FreshMeta, FreshMeta> type_meta(const Ctx& ctx, Span at);
  Term level_of(const Ctx& ctx, const Value& type, Span at);
  Term sort_level(const Ctx& ctx, const Value& sort) const;

  std::pair<Term, Value> infer_spine(const Ctx& ctx, const SPtr& e,
                                     const Value* expected, bool* done);
  std::pair<Term, Value> apply_args(
      const Ctx& ctx, Term t, Value type,
      const std::vector<std::pair<SPtr, bool>>& args, std::size_t from,
      Span at);
  std::pair<Term, Value> insert_implicits(const Ctx& ctx, Term t, Value type,
                                          Span at);
  std::pair<Term, Value> builtin(const Ctx& ctx, const std::string& name,
                                 const std::vector<std::pair<SPtr, bool>>& args,
                                 Span at, const Value* expected, bool* done);
  std::pair<Term, Value> infer_lambda(const Ctx& ctx, const SPtr& e);
  std::pair<Term, Value> binder_type(const Ctx& ctx, const SPtr& e);
  std::pair<Term, Value> let(const Ctx& ctx, const SPtr& e,
                             const Value* expected, bool as_type);

  Session& s_;
};

/// True iff `name` is a builtin former or constructor of the core language.
bool is_builtin(const std::string& name);

}  // namespace nary
