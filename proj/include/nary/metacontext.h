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

#include <deque>
#include <string>
#include <vector>

#include "nary/context.h"
#include "nary/globals.h"
#include "nary/term.h"
#include "nary/value.h"

namespace nary {

enum class MetaReason : std::uint8_t {
  kImplicit,   // implicit argument insertion
  kHole,       // user underscore
  kEta,        // child of an eta-expansion
  kInversion,  // pattern variable of an inverted clause
  kLevel,      // universe level of an inferred type
  kRefine,     // refinement of a meta-typed function head
};

const char* to_string(MetaReason r);

struct MetaEntry {
  MetaId id = 0;
  Term type;  // closed: Pi over the creation telescope
  int tel_size = 0;
  std::vector<std::string> tel_names;
  Term solution;  // closed lambda over the telescope; null while unsolved
  Span span;
  MetaReason reason = MetaReason::kHole;
  int decl = 0;
};

enum class ConstraintStatus : std::uint8_t { kActive, kPostponed, kSolved, kFailed };

struct ConstraintEntry {
  int id = 0;
  Ctx ctx;
  Value lhs;
  Value rhs;
  ConstraintStatus status = ConstraintStatus::kActive;
  std::vector<MetaId> blockers;
  std::string failure;
  Span span;
  int decl = 0;
  int parent = -1;
};

enum class SolveStatus : std::uint8_t { kOk, kOccursError, kScopeError };

/// Session-local metavariable store and constraint queue. All mutation of
/// solutions goes through `solve`.
class MetaContext {
 public:
  MetaId fresh(Term type, int tel_size, std::vector<std::string> tel_names,
               Span span, MetaReason reason);
  const MetaEntry& entry(MetaId id) const { return metas_.at(id); }
  bool is_solved(MetaId id) const { return metas_.at(id).solution != nullptr; }
  std::size_t meta_count() const { return metas_.size(); }

  /// Validates and stores a solution, then wakes constraints blocked on `id`.
  SolveStatus solve(MetaId id, Term solution);

  int add_constraint(ConstraintEntry c);
  ConstraintEntry& constraint(int id) { return constraints_.at(id); }
  const ConstraintEntry& constraint(int id) const { return constraints_.at(id); }
  std::size_t constraint_count() const { return constraints_.size(); }

  void postpone(int id, std::vector<MetaId> blockers);
  bool has_active() const { return !active_.empty(); }
  int pop_active();
  void push_active(int id);

  int current_decl() const { return decl_; }
  void begin_decl() { ++decl_; }

  /// Replaces solved metas by their solutions, recursively, beta-reducing
  /// the resulting redexes at meta heads.
  Term zonk(const Term& t) const;

  /// Unsolved metas and unsolved constraints of declaration `decl`, ordered
  /// by source span.
  std::vector<MetaId> unsolved_metas(int decl) const;
  std::vector<int> unsolved_constraints(int decl) const;

 private:
  std::vector<MetaEntry> metas_;
  std::vector<ConstraintEntry> constraints_;
  std::deque<int> active_;
  int decl_ = 0;
};

}  // namespace nary
