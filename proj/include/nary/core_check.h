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

#include <functional>
#include <string>

#include "nary/context.h"
#include "nary/eval.h"

namespace nary {

/// Decides or enforces `a == b` at some context; returns false on failure.
using Equate = std::function<bool(const Ctx&, const Value&, const Value&)>;

/// Type checker for elaborated core terms. Every judgemental equality is
/// routed through `equate`, so the same checker serves as a constraint
/// generator (with the unifier) and as an independent validator (with
/// `conv`).
class CoreChecker {
 public:
  CoreChecker(Session& s, Equate equate) : s_(s), equate_(std::move(equate)) {}

  /// Null when the type cannot be synthesised or a check failed.
  Value infer(const Ctx& ctx, const Term& t);
  bool check(const Ctx& ctx, const Term& t, const Value& type);
  /// Checks that `t` is a type; stores its sort in `sort` when given.
  bool check_type(const Ctx& ctx, const Term& t, Value* sort = nullptr);

  /// Set when a failure came from `equate`, as opposed to a term the
  /// checker could not handle structurally.
  bool mismatch() const { return mismatch_; }
  const std::string& error() const { return error_; }

 private:
  bool fail(std::string why, bool mismatch);
  bool eq(const Ctx& ctx, const Value& a, const Value& b);
  Value sort_of_binder(const Ctx& ctx, const Term& type, const Term& level,
                       Value* level_value);

  Session& s_;
  Equate equate_;
  bool mismatch_ = false;
  std::string error_;
};

/// Meta-free definitional equality with eta for functions, pairs, Lift and
/// unit-like types. Unsolved metas are compared by identity only.
bool conv(const Session& s, const Ctx& ctx, const Value& a, const Value& b);

/// True iff every inhabitant of the type is definitionally equal to one
/// canonical value (Unit, Lift of such a type, Sigma of such types).
bool is_eta_unit(const Session& s, const Value& type);
/// The canonical inhabitant of an eta-unit type.
Value eta_unit_value(const Session& s, const Value& type);

}  // namespace nary
