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

#include "nary/context.h"
#include "nary/globals.h"
#include "nary/level.h"
#include "nary/metacontext.h"
#include "nary/term.h"
#include "nary/value.h"

namespace nary {

/// One firing of the inversion rule, with the verdict of replaying the
/// constraint under every other clause choice.
struct InversionEvent {
  std::string global;
  MetaId meta = 0;
  int chosen = 0;
  std::string constraint;
  std::vector<int> alternatives;
  std::vector<bool> alternative_failed;
};

struct Trace {
  bool enabled = false;
  std::vector<std::string> lines;
};

/// Everything one checking run owns: the global table, the metacontext and
/// the optional unifier trace. Sessions share nothing.
struct Session {
  Globals globals;
  MetaContext metas;
  Trace trace;
  /// When set, every inversion is replayed under the other clause choices.
  bool audit_inversions = false;
  bool replaying = false;
  std::vector<InversionEvent> inversions;
  std::size_t solver_steps = 0;
};

Value eval(const Session& s, const Env& env, const Term& t);
Value instantiate(const Session& s, const Closure& c, const Value& arg);
Value apply(const Session& s, const Value& fn, const Value& arg,
            bool implicit = false);
Value apply_elim(const Session& s, const Value& v, const Elim& e);
Value apply_spine(const Session& s, Value v, const ElimSpine& spine);
Value fst_of(const Session& s, const Value& v);
Value snd_of(const Session& s, const Value& v);

/// Resolves solved metas at the head and retries blocked clausal
/// definitions, until the head is stable.
Value force(const Session& s, const Value& v);

/// Read-back into a beta-normal core term at binder depth `depth`.
Term quote(const Session& s, int depth, const Value& v);
Term quote_level(const Session& s, int depth, const LevelNF& nf);

/// Partial renaming from a source scope of depth `cod` into a target scope
/// of depth `dom`. Binders entered during read-back extend both scopes.
struct Renaming {
  int dom = 0;
  int cod = 0;
  std::map<int, int> to;          // source level -> target level
  std::optional<MetaId> occurs;  // meta that must not appear
};

struct RenameError {
  enum Kind { kOccurs, kScope } kind;
  int level;
};

/// Read-back through a renaming; throws RenameError on an escaping
/// variable or an occurrence of `r.occurs`.
Term rename(const Session& s, const Renaming& r, const Value& v);

/// quote . eval, after zonking.
Term nf(const Session& s, const Env& env, const Term& t);

/// Canonical level of a level-valued value (VLevel or a level neutral).
LevelNF to_level(const Session& s, const Value& v);
LevelNF normalize_level(const Session& s, const Env& env, const Term& t);

/// Structural identity of a value, used as level-atom key.
std::string value_key(const Session& s, const Value& v);

/// True iff the value contains an unsolved metavariable (after forcing).
bool has_unsolved_meta(const Session& s, const Value& v);
void collect_unsolved_metas(const Session& s, const Value& v,
                            std::vector<MetaId>& out);

/// True iff the de Bruijn level occurs free in the value (after forcing).
bool mentions_level(const Session& s, const Value& v, int level);

/// The type of a neutral value, or null when it cannot be determined.
Value neutral_type(const Session& s, const Ctx& ctx, const Value& v);

enum class MatchResult { kMatch, kNoMatch, kBlocked };

/// Matches forced `args` against one clause, binding pattern variables.
MatchResult match_clause(const Session& s, const Clause& c,
                         const std::vector<Value>& args, Env& bound,
                         int* blocked_position = nullptr);

}  // namespace nary
