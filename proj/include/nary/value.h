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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nary/level.h"
#include "nary/term.h"

namespace nary {

using Env = std::vector<Value>;

struct Closure {
  Env env;
  Term body;
};

enum class Vk : std::uint8_t {
  kLam, kPi, kSigma, kPair,
  kUnit, kTT, kEmpty,
  kNat, kZero, kSuc,
  kList, kNil, kCons,
  kId, kRefl,
  kLift, kLiftIn,
  kSort, kSortOmega, kLevelType, kLevel,
  kNeutral,
};

enum class HeadKind : std::uint8_t { kVar, kMeta, kGlobal };

struct Head {
  HeadKind kind = HeadKind::kVar;
  int level = 0;       // kVar: de Bruijn level
  MetaId meta = 0;     // kMeta
  std::string global;  // kGlobal
};

enum class ElimKind : std::uint8_t { kApp, kFst, kSnd, kLower, kJ, kAbsurd };

struct Elim {
  ElimKind kind = ElimKind::kApp;
  Value arg;  // kApp
  bool implicit = false;
  Value motive;     // kJ, kAbsurd
  Value refl_case;  // kJ
};

using ElimSpine = std::vector<Elim>;

/// Weak-head value. Field use per kind:
///   Lam:     body
///   Pi:      args {dom, dom_level?}, body (codomain), body_level (cod level)
///   Sigma:   args {fst, fst_level?}, body (second), body_level
///   Pair {a,b}  Suc {n}  List {A}  Cons {h,t}  Id {A,x,y}  Lift {l,A}
///   LiftIn {x}  Sort/Level: level   Neutral: head + spine
struct Val {
  Vk kind;
  std::string name;
  bool implicit = false;
  std::vector<Value> args;
  std::optional<Closure> body;
  std::optional<Closure> body_level;
  LevelNF level;
  Head head;
  ElimSpine spine;
};

namespace val {
Value simple(Vk kind);
Value with_args(Vk kind, std::vector<Value> args);
Value var(int level);
Value meta(MetaId id);
Value global(std::string name);
Value neutral(Head head, ElimSpine spine);
Value lam(std::string name, bool implicit, Closure body);
Value pi(std::string name, bool implicit, Value dom, Value dom_level,
         Closure cod, std::optional<Closure> cod_level);
Value sigma(std::string name, Value fst, Value fst_level, Closure snd,
            std::optional<Closure> snd_level);
Value sort(LevelNF level);
Value level(LevelNF level);
Value pair(Value a, Value b);
Value suc(Value n);
}  // namespace val

inline bool is_neutral(const Value& v) { return v->kind == Vk::kNeutral; }
inline bool is_meta_headed(const Value& v) {
  return v->kind == Vk::kNeutral && v->head.kind == HeadKind::kMeta;
}

}  // namespace nary
