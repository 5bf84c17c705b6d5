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

#include "nary/metacontext.h"

#include <algorithm>
#include <utility>

namespace nary {

const char* to_string(MetaReason r) {
  switch (r) {
    case MetaReason::kImplicit:
      return "implicit";
    case MetaReason::kHole:
      return "underscore";
    case MetaReason::kEta:
      return "eta";
    case MetaReason::kInversion:
      return "inversion";
    case MetaReason::kLevel:
      return "level";
    case MetaReason::kRefine:
      return "refine";
  }
  return "?";
}

MetaId MetaContext::fresh(Term type, int tel_size,
                          std::vector<std::string> tel_names, Span span,
                          MetaReason reason) {
  MetaEntry e;
  e.id = static_cast<MetaId>(metas_.size());
  e.type = std::move(type);
  e.tel_size = tel_size;
  e.tel_names = std::move(tel_names);
  e.span = span;
  e.reason = reason;
  e.decl = decl_;
  metas_.push_back(std::move(e));
  return metas_.back().id;
}

SolveStatus MetaContext::solve(MetaId id, Term solution) {
  Term z = zonk(solution);
  if (mentions_meta(z, id)) return SolveStatus::kOccursError;
  if (!well_scoped(z, 0)) return SolveStatus::kScopeError;
  metas_.at(id).solution = std::move(z);
  for (auto& c : constraints_) {
    if (c.status != ConstraintStatus::kPostponed) continue;
    if (std::find(c.blockers.begin(), c.blockers.end(), id) ==
        c.blockers.end()) {
      continue;
    }
    c.status = ConstraintStatus::kActive;
    active_.push_back(c.id);
  }
  return SolveStatus::kOk;
}

int MetaContext::add_constraint(ConstraintEntry c) {
  c.id = static_cast<int>(constraints_.size());
  c.decl = decl_;
  constraints_.push_back(std::move(c));
  return constraints_.back().id;
}

void MetaContext::postpone(int id, std::vector<MetaId> blockers) {
  auto& c = constraints_.at(id);
  c.status = ConstraintStatus::kPostponed;
  c.blockers = std::move(blockers);
}

int MetaContext::pop_active() {
  int id = active_.front();
  active_.pop_front();
  return id;
}

void MetaContext::push_active(int id) {
  constraints_.at(id).status = ConstraintStatus::kActive;
  active_.push_back(id);
}

Term MetaContext::zonk(const Term& t) const {
  if (!t) return t;
  if (t->kind == Tm::kMeta) {
    const auto& e = metas_.at(t->meta);
    return e.solution ? zonk(e.solution) : t;
  }
  if (t->kind == Tm::kApp) {
    Spine s = unapply(t);
    if (s.head->kind == Tm::kMeta && is_solved(s.head->meta)) {
      Term head = zonk(s.head);
      std::size_t i = 0;
      std::vector<Term> consumed;
      while (i < s.args.size() && head->kind == Tm::kLam) {
        consumed.push_back(s.args[i]);
        head = head->kids[0];
        ++i;
      }
      // head now lives under consumed.size() binders.
      Term out = instantiate(head, consumed);
      for (; i < s.args.size(); ++i) out = tm::app(out, s.args[i], s.implicit[i]);
      return zonk(out);
    }
  }
  if (t->kids.empty()) return t;
  std::vector<Term> kids;
  kids.reserve(t->kids.size());
  bool changed = false;
  for (const auto& k : t->kids) {
    kids.push_back(zonk(k));
    changed = changed || kids.back() != k;
  }
  if (!changed) return t;
  // Substituted solutions can expose redexes at eliminations.
  switch (t->kind) {
    case Tm::kApp:
      if (kids[0]->kind == Tm::kLam) {
        return zonk(instantiate(kids[0]->kids[0], {kids[1]}));
      }
      break;
    case Tm::kFst:
      if (kids[0]->kind == Tm::kPair) return kids[0]->kids[0];
      break;
    case Tm::kSnd:
      if (kids[0]->kind == Tm::kPair) return kids[0]->kids[1];
      break;
    case Tm::kLower:
      if (kids[0]->kind == Tm::kLiftIn) return kids[0]->kids[0];
      break;
    default:
      break;
  }
  return tm::with_kids(*t, std::move(kids));
}

std::vector<MetaId> MetaContext::unsolved_metas(int decl) const {
  std::vector<MetaId> out;
  for (const auto& m : metas_) {
    if (m.decl == decl && !m.solution) out.push_back(m.id);
  }
  std::stable_sort(out.begin(), out.end(), [this](MetaId a, MetaId b) {
    return metas_[a].span < metas_[b].span;
  });
  return out;
}

std::vector<int> MetaContext::unsolved_constraints(int decl) const {
  std::vector<int> out;
  for (const auto& c : constraints_) {
    if (c.decl == decl && c.status != ConstraintStatus::kSolved) {
      out.push_back(c.id);
    }
  }
  std::stable_sort(out.begin(), out.end(), [this](int a, int b) {
    return constraints_[a].span < constraints_[b].span;
  });
  return out;
}

}  // namespace nary
