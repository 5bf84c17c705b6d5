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

#include "nary/globals.h"

#include <algorithm>
#include <utility>

#include "nary/context.h"

namespace nary {

Pattern Pattern::var(std::string name) {
  Pattern p;
  p.kind = PatKind::kVar;
  p.name = std::move(name);
  return p;
}
Pattern Pattern::zero() {
  Pattern p;
  p.kind = PatKind::kZero;
  return p;
}
Pattern Pattern::suc(Pattern inner) {
  Pattern p;
  p.kind = PatKind::kSuc;
  p.kids = {std::move(inner)};
  return p;
}
Pattern Pattern::nil() {
  Pattern p;
  p.kind = PatKind::kNil;
  return p;
}
Pattern Pattern::cons(Pattern h, Pattern t) {
  Pattern p;
  p.kind = PatKind::kCons;
  p.kids = {std::move(h), std::move(t)};
  return p;
}

int Pattern::var_count() const {
  if (kind == PatKind::kVar) return 1;
  int n = 0;
  for (const auto& k : kids) n += k.var_count();
  return n;
}

std::string Pattern::to_string() const {
  switch (kind) {
    case PatKind::kVar:
      return name;
    case PatKind::kZero:
      return "zero";
    case PatKind::kNil:
      return "nil";
    case PatKind::kSuc: {
      unsigned n = 1;
      const Pattern* cur = &kids[0];
      while (cur->kind == PatKind::kSuc) {
        ++n;
        cur = &cur->kids[0];
      }
      if (cur->kind == PatKind::kZero) return std::to_string(n);
      return "(suc " + kids[0].to_string() + ")";
    }
    case PatKind::kCons:
      return "(cons " + kids[0].to_string() + " " + kids[1].to_string() + ")";
  }
  return "?";
}

int Clause::var_count() const {
  int n = 0;
  for (const auto& p : params) n += p.var_count();
  return n;
}

GlobalDef* Globals::find(const std::string& name) {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

const GlobalDef* Globals::find(const std::string& name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

GlobalDef& Globals::add(GlobalDef def) {
  std::string name = def.name;
  if (defs_.count(name) == 0) order_.push_back(name);
  auto [it, inserted] = defs_.insert_or_assign(name, std::move(def));
  return it->second;
}

void Globals::remove(const std::string& name) {
  defs_.erase(name);
  order_.erase(std::remove(order_.begin(), order_.end(), name), order_.end());
}

Ctx Ctx::bind(std::string name, Value type, bool hidden) const {
  Ctx out = *this;
  out.env.push_back(val::var(depth()));
  out.entries.push_back(
      CtxEntry{std::move(name), std::move(type), false, hidden});
  return out;
}

Ctx Ctx::define(std::string name, Value type, Value value) const {
  Ctx out = *this;
  out.env.push_back(std::move(value));
  out.entries.push_back(
      CtxEntry{std::move(name), std::move(type), true, false});
  return out;
}

std::vector<std::string> Ctx::names() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.name);
  return out;
}

int Ctx::lookup(const std::string& name) const {
  for (int i = depth(); i-- > 0;) {
    if (!entries[i].hidden && entries[i].name == name) return i;
  }
  return -1;
}

std::vector<int> Ctx::bound_levels() const {
  std::vector<int> out;
  for (int i = 0; i < depth(); ++i) {
    if (!entries[i].defined) out.push_back(i);
  }
  return out;
}

}  // namespace nary
