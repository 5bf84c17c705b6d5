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

#include "nary/term.h"

#include <algorithm>
#include <functional>
#include <utility>

namespace nary {

int binders_under(Tm kind, std::size_t child) {
  switch (kind) {
    case Tm::kLam:
      return 1;
    case Tm::kPi:
    case Tm::kSigma:
      return child >= 2 ? 1 : 0;
    case Tm::kLet:
      return child == 2 ? 1 : 0;
    default:
      return 0;
  }
}

namespace tm {
namespace {
Term node(Tm kind, std::vector<Term> kids = {}, std::string name = {},
          bool implicit = false) {
  auto n = std::make_shared<TermNode>();
  n->kind = kind;
  n->kids = std::move(kids);
  n->name = std::move(name);
  n->implicit = implicit;
  return n;
}
}  // namespace

Term var(int index) {
  auto n = std::make_shared<TermNode>();
  n->kind = Tm::kVar;
  n->index = index;
  return n;
}
Term global(std::string name) { return node(Tm::kGlobal, {}, std::move(name)); }
Term meta(MetaId id) {
  auto n = std::make_shared<TermNode>();
  n->kind = Tm::kMeta;
  n->meta = id;
  return n;
}
Term app(Term fn, Term arg, bool implicit) {
  return node(Tm::kApp, {std::move(fn), std::move(arg)}, {}, implicit);
}
Term lam(std::string name, bool implicit, Term body) {
  return node(Tm::kLam, {std::move(body)}, std::move(name), implicit);
}
Term pi(std::string name, bool implicit, Term dom, Term dom_level, Term cod,
        Term cod_level) {
  return node(Tm::kPi,
              {std::move(dom), std::move(dom_level), std::move(cod),
               std::move(cod_level)},
              std::move(name), implicit);
}
Term sigma(std::string name, Term fst, Term fst_level, Term snd,
           Term snd_level) {
  return node(Tm::kSigma,
              {std::move(fst), std::move(fst_level), std::move(snd),
               std::move(snd_level)},
              std::move(name));
}
Term pair(Term a, Term b) { return node(Tm::kPair, {std::move(a), std::move(b)}); }
Term fst(Term t) { return node(Tm::kFst, {std::move(t)}); }
Term snd(Term t) { return node(Tm::kSnd, {std::move(t)}); }
Term unit() { return node(Tm::kUnit); }
Term tt() { return node(Tm::kTT); }
Term empty() { return node(Tm::kEmpty); }
Term absurd(Term motive, Term target) {
  return node(Tm::kAbsurd, {std::move(motive), std::move(target)});
}
Term nat() { return node(Tm::kNat); }
Term zero() { return node(Tm::kZero); }
Term suc(Term t) { return node(Tm::kSuc, {std::move(t)}); }
Term numeral(unsigned n) {
  Term t = zero();
  for (unsigned i = 0; i < n; ++i) t = suc(t);
  return t;
}
Term list(Term elem) { return node(Tm::kList, {std::move(elem)}); }
Term nil() { return node(Tm::kNil); }
Term cons(Term head, Term tail) {
  return node(Tm::kCons, {std::move(head), std::move(tail)});
}
Term id(Term type, Term lhs, Term rhs) {
  return node(Tm::kId, {std::move(type), std::move(lhs), std::move(rhs)});
}
Term refl() { return node(Tm::kRefl); }
Term j(Term motive, Term refl_case, Term equation) {
  return node(Tm::kJ,
              {std::move(motive), std::move(refl_case), std::move(equation)});
}
Term lift_type(Term level, Term type) {
  return node(Tm::kLift, {std::move(level), std::move(type)});
}
Term lift(Term t) { return node(Tm::kLiftIn, {std::move(t)}); }
Term lower(Term t) { return node(Tm::kLower, {std::move(t)}); }
Term sort(Term level) { return node(Tm::kSort, {std::move(level)}); }
Term sort_omega() { return node(Tm::kSortOmega); }
Term level() { return node(Tm::kLevel); }
Term lzero() { return node(Tm::kLZero); }
Term lsuc(Term t) { return node(Tm::kLSuc, {std::move(t)}); }
Term lmax(Term a, Term b) { return node(Tm::kLMax, {std::move(a), std::move(b)}); }
Term let(std::string name, Term annotation, Term bound, Term body) {
  return node(Tm::kLet,
              {std::move(annotation), std::move(bound), std::move(body)},
              std::move(name));
}
Term with_kids(const TermNode& n, std::vector<Term> kids) {
  auto out = std::make_shared<TermNode>(n);
  out->kids = std::move(kids);
  return out;
}
}  // namespace tm

namespace {

// Rebuilds `t` bottom-up, rewriting variables with `on_var(index, depth)`.
Term map_vars(const Term& t, int depth,
              const std::function<Term(int, int)>& on_var) {
  if (!t) return t;
  if (t->kind == Tm::kVar) return on_var(t->index, depth);
  if (t->kids.empty()) return t;
  std::vector<Term> kids;
  kids.reserve(t->kids.size());
  bool changed = false;
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    kids.push_back(
        map_vars(t->kids[i], depth + binders_under(t->kind, i), on_var));
    changed = changed || kids.back() != t->kids[i];
  }
  return changed ? tm::with_kids(*t, std::move(kids)) : t;
}

bool any_node(const Term& t, int depth,
              const std::function<bool(const TermNode&, int)>& pred) {
  if (!t) return false;
  if (pred(*t, depth)) return true;
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    if (any_node(t->kids[i], depth + binders_under(t->kind, i), pred)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool well_scoped(const Term& t, int depth) {
  return !any_node(t, 0, [depth](const TermNode& n, int under) {
    return n.kind == Tm::kVar && (n.index < 0 || n.index >= depth + under);
  });
}

Term shift(const Term& t, int by, int cutoff) {
  if (by == 0) return t;
  return map_vars(t, 0, [by, cutoff](int index, int depth) {
    return index >= cutoff + depth ? tm::var(index + by) : tm::var(index);
  });
}

Term instantiate(const Term& body, const std::vector<Term>& args) {
  const int k = static_cast<int>(args.size());
  return map_vars(body, 0, [&](int index, int depth) {
    if (index < depth) return tm::var(index);
    const int free = index - depth;
    if (free < k) return shift(args[k - 1 - free], depth);
    return tm::var(index - k);
  });
}

bool alpha_equal(const Term& a, const Term& b, bool ignore_levels) {
  if (a == b) return true;
  if (!a || !b) return ignore_levels;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Tm::kVar:
      return a->index == b->index;
    case Tm::kGlobal:
      return a->name == b->name;
    case Tm::kMeta:
      return a->meta == b->meta;
    case Tm::kApp:
    case Tm::kLam:
    case Tm::kPi:
      if (a->implicit != b->implicit) return false;
      break;
    default:
      break;
  }
  if (a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i) {
    const bool level_slot =
        (a->kind == Tm::kPi || a->kind == Tm::kSigma) && (i == 1 || i == 3);
    if (level_slot && ignore_levels) continue;
    if (!a->kids[i] || !b->kids[i]) {
      if (a->kids[i] != b->kids[i]) return false;
      continue;
    }
    if (!alpha_equal(a->kids[i], b->kids[i], ignore_levels)) return false;
  }
  return true;
}

bool mentions_var(const Term& t, int index) {
  return any_node(t, 0, [index](const TermNode& n, int under) {
    return n.kind == Tm::kVar && n.index == index + under;
  });
}

bool mentions_meta(const Term& t, MetaId id) {
  return any_node(t, 0, [id](const TermNode& n, int) {
    return n.kind == Tm::kMeta && n.meta == id;
  });
}

void collect_metas(const Term& t, std::vector<MetaId>& out) {
  any_node(t, 0, [&out](const TermNode& n, int) {
    if (n.kind == Tm::kMeta &&
        std::find(out.begin(), out.end(), n.meta) == out.end()) {
      out.push_back(n.meta);
    }
    return false;
  });
}

void collect_globals(const Term& t, std::vector<std::string>& out) {
  any_node(t, 0, [&out](const TermNode& n, int) {
    if (n.kind == Tm::kGlobal &&
        std::find(out.begin(), out.end(), n.name) == out.end()) {
      out.push_back(n.name);
    }
    return false;
  });
}

Spine unapply(const Term& t) {
  Spine s;
  Term cur = t;
  while (cur->kind == Tm::kApp) {
    s.args.push_back(cur->kids[1]);
    s.implicit.push_back(cur->implicit);
    cur = cur->kids[0];
  }
  std::reverse(s.args.begin(), s.args.end());
  std::reverse(s.implicit.begin(), s.implicit.end());
  s.head = cur;
  return s;
}

bool as_numeral(const Term& t, unsigned& n) {
  unsigned count = 0;
  Term cur = t;
  while (cur->kind == Tm::kSuc) {
    ++count;
    cur = cur->kids[0];
  }
  if (cur->kind != Tm::kZero) return false;
  n = count;
  return true;
}

}  // namespace nary
