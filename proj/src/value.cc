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

#include "nary/value.h"

#include <utility>

namespace nary::val {

Value simple(Vk kind) {
  auto v = std::make_shared<Val>();
  v->kind = kind;
  return v;
}

Value with_args(Vk kind, std::vector<Value> args) {
  auto v = std::make_shared<Val>();
  v->kind = kind;
  v->args = std::move(args);
  return v;
}

Value neutral(Head head, ElimSpine spine) {
  auto v = std::make_shared<Val>();
  v->kind = Vk::kNeutral;
  v->head = std::move(head);
  v->spine = std::move(spine);
  return v;
}

Value var(int level) {
  Head h;
  h.kind = HeadKind::kVar;
  h.level = level;
  return neutral(std::move(h), {});
}

Value meta(MetaId id) {
  Head h;
  h.kind = HeadKind::kMeta;
  h.meta = id;
  return neutral(std::move(h), {});
}

Value global(std::string name) {
  Head h;
  h.kind = HeadKind::kGlobal;
  h.global = std::move(name);
  return neutral(std::move(h), {});
}

Value lam(std::string name, bool implicit, Closure body) {
  auto v = std::make_shared<Val>();
  v->kind = Vk::kLam;
  v->name = std::move(name);
  v->implicit = implicit;
  v->body = std::move(body);
  return v;
}

Value pi(std::string name, bool implicit, Value dom, Value dom_level,
         Closure cod, std::optional<Closure> cod_level) {
  auto v = std::make_shared<Val>();
  v->kind = Vk::kPi;
  v->name = std::move(name);
  v->implicit = implicit;
  v->args = {std::move(dom), std::move(dom_level)};
  v->body = std::move(cod);
  v->body_level = std::move(cod_level);
  return v;
}

Value sigma(std::string name, Value fst, Value fst_level, Closure snd,
            std::optional<Closure> snd_level) {
  auto v = std::make_shared<Val>();
  v->kind = Vk::kSigma;
  v->name = std::move(name);
  v->args = {std::move(fst), std::move(fst_level)};
  v->body = std::move(snd);
  v->body_level = std::move(snd_level);
  return v;
}

Value sort(LevelNF level) {
  auto v = std::make_shared<Val>();
  v->kind = Vk::kSort;
  v->level = std::move(level);
  return v;
}

Value level(LevelNF level) {
  auto v = std::make_shared<Val>();
  v->kind = Vk::kLevel;
  v->level = std::move(level);
  return v;
}

Value pair(Value a, Value b) { return with_args(Vk::kPair, {std::move(a), std::move(b)}); }
Value suc(Value n) { return with_args(Vk::kSuc, {std::move(n)}); }

}  // namespace nary::val
