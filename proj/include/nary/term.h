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

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nary {

using MetaId = std::uint32_t;

enum class Tm : std::uint8_t {
  kVar, kGlobal, kMeta,
  kApp, kLam, kPi, kSigma, kPair, kFst, kSnd,
  kUnit, kTT, kEmpty, kAbsurd,
  kNat, kZero, kSuc,
  kList, kNil, kCons,
  kId, kRefl, kJ,
  kLift, kLiftIn, kLower,
  kSort, kSortOmega, kLevel, kLZero, kLSuc, kLMax,
  kLet,
};

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

/// Core syntax node. Children live in `kids`; the number of binders each
/// child sits under is given by `binders_under(kind, i)`.
///
/// Child layout per kind:
///   App    {fn, arg}                    (implicit = argument implicitness)
///   Lam    {body}
///   Pi     {dom, dom_level, cod, cod_level}   levels may be null (omega)
///   Sigma  {fst, fst_level, snd, snd_level}
///   Pair   {a, b}        Fst/Snd/Suc/List/LiftIn/Lower/Sort/LSuc {x}
///   Absurd {motive, target}   Cons {head, tail}   Id {type, lhs, rhs}
///   J      {motive, refl_case, equation}    Lift {level, type}
///   LMax   {a, b}        Let {annotation, bound, body}
struct TermNode {
  Tm kind;
  int index = 0;      // kVar: de Bruijn index
  MetaId meta = 0;    // kMeta
  std::string name;   // kGlobal name, or binder hint
  bool implicit = false;
  std::vector<Term> kids;
};

int binders_under(Tm kind, std::size_t child);

namespace tm {
Term var(int index);
Term global(std::string name);
Term meta(MetaId id);
Term app(Term fn, Term arg, bool implicit = false);
Term lam(std::string name, bool implicit, Term body);
Term pi(std::string name, bool implicit, Term dom, Term dom_level, Term cod,
        Term cod_level);
Term sigma(std::string name, Term fst, Term fst_level, Term snd,
           Term snd_level);
Term pair(Term a, Term b);
Term fst(Term t);
Term snd(Term t);
Term unit();
Term tt();
Term empty();
Term absurd(Term motive, Term target);
Term nat();
Term zero();
Term suc(Term t);
Term numeral(unsigned n);
Term list(Term elem);
Term nil();
Term cons(Term head, Term tail);
Term id(Term type, Term lhs, Term rhs);
Term refl();
Term j(Term motive, Term refl_case, Term equation);
Term lift_type(Term level, Term type);
Term lift(Term t);
Term lower(Term t);
Term sort(Term level);
Term sort_omega();
Term level();
Term lzero();
Term lsuc(Term t);
Term lmax(Term a, Term b);
Term let(std::string name, Term annotation, Term bound, Term body);
Term with_kids(const TermNode& node, std::vector<Term> kids);
}  // namespace tm

/// True iff every free index is below `depth`. Globals and metas are checked
/// by the optional predicates when provided.
bool well_scoped(const Term& t, int depth);

/// Adds `by` to every index >= `cutoff`.
Term shift(const Term& t, int by, int cutoff = 0);

/// Replaces the free indices 0..args.size()-1 by `args` (index 0 is the last
/// element), decrementing the remaining free indices.
Term instantiate(const Term& body, const std::vector<Term>& args);

/// Alpha-equivalence; binder hints are ignored. When `ignore_levels` is set,
/// Pi/Sigma level annotations are not compared.
bool alpha_equal(const Term& a, const Term& b, bool ignore_levels = false);

/// True iff the free index `index` occurs in t.
bool mentions_var(const Term& t, int index);
bool mentions_meta(const Term& t, MetaId id);
void collect_metas(const Term& t, std::vector<MetaId>& out);
void collect_globals(const Term& t, std::vector<std::string>& out);

/// Splits an application spine into head and arguments (outermost last).
struct Spine {
  Term head;
  std::vector<Term> args;
  std::vector<bool> implicit;
};
Spine unapply(const Term& t);

/// Recognises `suc (suc ... zero)` and returns its value.
bool as_numeral(const Term& t, unsigned& n);

}  // namespace nary
