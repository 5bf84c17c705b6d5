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

#include "nary/level.h"

#include <fmt/format.h>

#include <algorithm>
#include <optional>
#include <utility>

namespace nary {

LevelNF LevelNF::constant(unsigned k) {
  LevelNF nf;
  nf.constant_ = k;
  return nf;
}

LevelNF LevelNF::atom(LevelAtom a) {
  LevelNF nf;
  std::string key = a.key;
  nf.atoms_.emplace(std::move(key), std::move(a));
  return nf;
}

LevelNF LevelNF::atom(std::string key, unsigned offset, AtomKind kind,
                      Value head) {
  return atom(LevelAtom{std::move(key), offset, kind, std::move(head)});
}

bool LevelNF::has_flexible() const {
  return std::any_of(atoms_.begin(), atoms_.end(),
                     [](const auto& kv) { return kv.second.flexible(); });
}

void LevelNF::canonicalize() {
  for (const auto& [key, a] : atoms_) {
    if (a.offset >= constant_) {
      constant_ = 0;
      break;
    }
  }
}

std::string LevelNF::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, a] : atoms_) {
    if (!first) out += ", ";
    first = false;
    out += fmt::format("{}+{}", key, a.offset);
  }
  out += fmt::format(" | {}}}", constant_);
  return out;
}

LevelNF nf_max(const LevelNF& x, const LevelNF& y) {
  LevelNF out = x;
  out.constant_ = std::max(x.constant_, y.constant_);
  for (const auto& [key, a] : y.atoms_) {
    auto it = out.atoms_.find(key);
    if (it == out.atoms_.end()) {
      out.atoms_.emplace(key, a);
    } else if (a.offset > it->second.offset) {
      it->second.offset = a.offset;
    }
  }
  out.canonicalize();
  return out;
}

LevelNF nf_add(const LevelNF& x, unsigned k) {
  LevelNF out = x;
  // A dropped constant stays dropped: c <= offset implies c + k <= offset + k.
  if (out.constant_ > 0 || out.atoms_.empty()) out.constant_ += k;
  for (auto& [key, a] : out.atoms_) a.offset += k;
  out.canonicalize();
  return out;
}

LevelNF nf_suc(const LevelNF& x) { return nf_add(x, 1); }

bool nf_equal(const LevelNF& x, const LevelNF& y) {
  if (x.constant_part() != y.constant_part()) return false;
  if (x.atoms().size() != y.atoms().size()) return false;
  auto it = y.atoms().begin();
  for (const auto& [key, a] : x.atoms()) {
    if (key != it->first || a.offset != it->second.offset) return false;
    ++it;
  }
  return true;
}

namespace {

const LevelAtom* lone_meta(const LevelNF& nf) {
  if (nf.constant_part() != 0 || nf.atoms().size() != 1) return nullptr;
  const LevelAtom& a = nf.atoms().begin()->second;
  return a.kind == AtomKind::kMeta ? &a : nullptr;
}

// Attempts `meta + k == other`. Returns nullopt when no decision can be made.
std::optional<LevelSolveResult> solve_against(
    const LevelAtom& meta, const LevelNF& other,
    const std::function<bool(const LevelAtom&)>& in_scope) {
  if (other.atoms().count(meta.key) != 0) return std::nullopt;
  const unsigned k = meta.offset;
  if (other.constant_part() > 0 && other.constant_part() < k) {
    return LevelFailed{fmt::format("level {} cannot equal {}+{}",
                                   other.to_string(), meta.key, k)};
  }
  LevelNF value = LevelNF::constant(other.constant_part() > 0
                                        ? other.constant_part() - k
                                        : 0);
  for (const auto& [key, a] : other.atoms()) {
    if (a.offset < k) {
      if (a.flexible()) return std::nullopt;
      return LevelFailed{fmt::format("level {} cannot equal {}+{}",
                                     other.to_string(), meta.key, k)};
    }
    if (in_scope && !in_scope(a)) {
      if (other.has_flexible()) return std::nullopt;
      return LevelFailed{fmt::format("level atom {} is out of scope for {}",
                                     key, meta.key)};
    }
    LevelAtom shifted = a;
    shifted.offset -= k;
    value = nf_max(value, LevelNF::atom(shifted));
  }
  LevelAtom target = meta;
  target.offset = 0;
  return LevelSolved{{LevelAssignment{std::move(target), std::move(value)}}};
}

}  // namespace

LevelSolveResult solve_level(
    const LevelNF& lhs, const LevelNF& rhs,
    const std::function<bool(const LevelAtom&)>& in_scope) {
  if (nf_equal(lhs, rhs)) return LevelSolved{};
  if (const LevelAtom* m = lone_meta(lhs)) {
    if (auto r = solve_against(*m, rhs, in_scope)) return *r;
  }
  if (const LevelAtom* m = lone_meta(rhs)) {
    if (auto r = solve_against(*m, lhs, in_scope)) return *r;
  }
  if (!lhs.has_flexible() && !rhs.has_flexible()) {
    return LevelFailed{fmt::format("levels {} and {} differ", lhs.to_string(),
                                   rhs.to_string())};
  }
  return LevelPostponed{};
}

}  // namespace nary
