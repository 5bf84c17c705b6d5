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
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace nary {

struct Val;
using Value = std::shared_ptr<const Val>;

enum class AtomKind {
  kRigid,    // bound level variable, postulate, or any neutral with a rigid head
  kMeta,     // unsolved metavariable (possibly applied to a spine)
  kBlocked,  // clausal definition stuck on an unsolved metavariable
};

/// One `head + offset` summand of a level. `key` is the canonical identity
/// of the head; two atoms with equal keys denote the same level expression.
struct LevelAtom {
  std::string key;
  unsigned offset = 0;
  AtomKind kind = AtomKind::kRigid;
  Value head;  // may be null when the level is built symbolically

  bool flexible() const { return kind != AtomKind::kRigid; }
};

/// Canonical universe level: the maximum of a constant and a set of atoms.
///
/// Invariants maintained by every constructor and operation:
///   - at most one atom per head key (the maximal offset is kept);
///   - the constant is dropped (stored as 0) whenever some atom has an
///     offset at least as large, since `lmax (a + k) c == a + k` for c <= k.
class LevelNF {
 public:
  LevelNF() = default;

  static LevelNF constant(unsigned k);
  static LevelNF atom(LevelAtom a);
  static LevelNF atom(std::string key, unsigned offset = 0,
                      AtomKind kind = AtomKind::kRigid, Value head = nullptr);

  unsigned constant_part() const { return constant_; }
  const std::map<std::string, LevelAtom>& atoms() const { return atoms_; }
  bool is_closed() const { return atoms_.empty(); }
  bool has_flexible() const;

  /// Human readable canonical rendering, e.g. `{a+1, b+0 | 0}`.
  std::string to_string() const;

  friend LevelNF nf_max(const LevelNF& x, const LevelNF& y);
  friend LevelNF nf_add(const LevelNF& x, unsigned k);

 private:
  void canonicalize();

  unsigned constant_ = 0;
  std::map<std::string, LevelAtom> atoms_;
};

LevelNF nf_max(const LevelNF& x, const LevelNF& y);
LevelNF nf_suc(const LevelNF& x);
LevelNF nf_add(const LevelNF& x, unsigned k);
bool nf_equal(const LevelNF& x, const LevelNF& y);

struct LevelAssignment {
  LevelAtom target;  // the metavariable atom (its offset has been consumed)
  LevelNF value;
};

struct LevelSolved {
  std::vector<LevelAssignment> assignments;
};
struct LevelPostponed {};
struct LevelFailed {
  std::string reason;
};
using LevelSolveResult = std::variant<LevelSolved, LevelPostponed, LevelFailed>;

/// Solves `lhs == rhs` inside the single-meta-atom fragment. `in_scope`
/// decides whether an atom may appear in the solution of a metavariable;
/// when absent every atom is admissible.
LevelSolveResult solve_level(
    const LevelNF& lhs, const LevelNF& rhs,
    const std::function<bool(const LevelAtom&)>& in_scope = {});

}  // namespace nary
