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

#include <string>
#include <vector>

#include "nary/context.h"
#include "nary/eval.h"

namespace nary {

enum class Outcome : std::uint8_t { kProgress, kPostponed, kFailed };

struct UnifyResult {
  Outcome outcome = Outcome::kProgress;
  std::vector<MetaId> blockers;  // kPostponed
  std::string reason;            // kFailed

  static UnifyResult progress() { return {}; }
  static UnifyResult postponed(std::vector<MetaId> b) {
    return {Outcome::kPostponed, std::move(b), {}};
  }
  static UnifyResult failed(std::string why) {
    return {Outcome::kFailed, {}, std::move(why)};
  }
};

/// Creates a metavariable abstracted over the bound entries of `ctx` and
/// returns it applied to them.
struct FreshMeta {
  MetaId id;
  Term term;    // in ctx scope
  Value value;  // in ctx scope
};
FreshMeta fresh_meta(Session& s, const Ctx& ctx, const Value& type, Span span,
                     MetaReason reason);

/// Unifies two values, solving metas on the way. Sub-problems that cannot
/// be decided yet are queued as postponed child constraints of `parent`.
UnifyResult unify(Session& s, const Ctx& ctx, const Value& lhs,
                  const Value& rhs, int parent = -1);

/// Solves `?m spine == rhs` when the spine is a Miller pattern.
UnifyResult pattern_solve(Session& s, const Ctx& ctx, const Value& flex,
                          const Value& rhs, int parent = -1);

/// Queues `lhs == rhs` and runs the solver loop. Returns false and sets
/// `error` when some constraint failed.
bool unify_now(Session& s, const Ctx& ctx, const Value& lhs, const Value& rhs,
               Span span, std::string& error);

/// Runs all active constraints to a fixpoint, then solves metas of
/// eta-unit type. Returns false and sets `error` on the first failure.
bool solve_all(Session& s, std::string& error);

/// Solves a type-valued meta `?m tel` as a function type whose domain and
/// codomain are fresh metas. Returns false when `flex` is not of that shape
/// or the solution was rejected.
bool refine_to_pi(Session& s, const Value& flex, const std::string& name,
                  bool implicit);

/// Renders a value in `ctx` for traces and messages.
std::string show(const Session& s, const Ctx& ctx, const Value& v);

}  // namespace nary
