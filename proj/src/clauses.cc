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

#include "nary/clauses.h"

#include <fmt/format.h>

#include <algorithm>
#include <optional>

namespace nary {

const char* to_string(ClauseError e) {
  switch (e) {
    case ClauseError::kOk:
      return "ok";
    case ClauseError::kCoverage:
      return "coverage error";
    case ClauseError::kOverlap:
      return "overlap error";
    case ClauseError::kTermination:
      return "termination error";
  }
  return "?";
}

namespace {

using Row = std::vector<Pattern>;

int ctor_arity(PatKind k) {
  switch (k) {
    case PatKind::kSuc:
      return 1;
    case PatKind::kCons:
      return 2;
    default:
      return 0;
  }
}

std::vector<PatKind> siblings(PatKind k) {
  if (k == PatKind::kZero || k == PatKind::kSuc) {
    return {PatKind::kZero, PatKind::kSuc};
  }
  return {PatKind::kNil, PatKind::kCons};
}

Pattern wildcard() { return Pattern::var("_"); }

Pattern make(PatKind k, std::vector<Pattern> kids) {
  Pattern p;
  p.kind = k;
  p.kids = std::move(kids);
  return p;
}

std::vector<Row> specialize(const std::vector<Row>& rows, PatKind c) {
  std::vector<Row> out;
  for (const Row& r : rows) {
    Row next;
    if (r[0].is_var()) {
      next.assign(ctor_arity(c), wildcard());
    } else if (r[0].kind == c) {
      next = r[0].kids;
    } else {
      continue;
    }
    next.insert(next.end(), r.begin() + 1, r.end());
    out.push_back(std::move(next));
  }
  return out;
}

// A value vector matched by no row, if one exists.
std::optional<Row> missing(const std::vector<Row>& rows, std::size_t n) {
  if (n == 0) {
    if (rows.empty()) return Row{};
    return std::nullopt;
  }
  std::vector<PatKind> seen;
  for (const Row& r : rows) {
    if (!r[0].is_var()) seen.push_back(r[0].kind);
  }
  if (!seen.empty()) {
    bool complete = true;
    for (PatKind c : siblings(seen[0])) {
      complete = complete && std::find(seen.begin(), seen.end(), c) != seen.end();
    }
    if (complete) {
      for (PatKind c : siblings(seen[0])) {
        const int a = ctor_arity(c);
        auto w = missing(specialize(rows, c), n - 1 + a);
        if (!w) continue;
        Row out{make(c, Row(w->begin(), w->begin() + a))};
        out.insert(out.end(), w->begin() + a, w->end());
        return out;
      }
      return std::nullopt;
    }
  }
  std::vector<Row> rest;
  for (const Row& r : rows) {
    if (r[0].is_var()) rest.emplace_back(r.begin() + 1, r.end());
  }
  auto w = missing(rest, n - 1);
  if (!w) return std::nullopt;
  Pattern head = wildcard();
  if (!seen.empty()) {
    for (PatKind c : siblings(seen[0])) {
      if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
        head = make(c, Row(ctor_arity(c), wildcard()));
        break;
      }
    }
  }
  Row out{head};
  out.insert(out.end(), w->begin(), w->end());
  return out;
}

bool compatible(const Pattern& p, const Pattern& q) {
  if (p.is_var() || q.is_var()) return true;
  if (p.kind != q.kind) return false;
  for (std::size_t i = 0; i < p.kids.size(); ++i) {
    if (!compatible(p.kids[i], q.kids[i])) return false;
  }
  return true;
}

std::string show_row(const std::string& name, const Row& row) {
  std::string out = name;
  for (const auto& p : row) out += " " + p.to_string();
  return out;
}

// The term a pattern denotes inside the clause body, `depth` binders deep.
Term pattern_term(const Pattern& p, int& next_var, int var_count, int depth) {
  switch (p.kind) {
    case PatKind::kVar:
      return tm::var(var_count - 1 - next_var++ + depth);
    case PatKind::kZero:
      return tm::zero();
    case PatKind::kSuc:
      return tm::suc(pattern_term(p.kids[0], next_var, var_count, depth));
    case PatKind::kNil:
      return tm::nil();
    case PatKind::kCons: {
      Term h = pattern_term(p.kids[0], next_var, var_count, depth);
      return tm::cons(h, pattern_term(p.kids[1], next_var, var_count, depth));
    }
  }
  return nullptr;
}

bool strict_subterm(const Term& arg, const Term& pat) {
  for (const auto& k : pat->kids) {
    if (alpha_equal(arg, k) || strict_subterm(arg, k)) return true;
  }
  return false;
}

struct Call {
  std::vector<Term> args;
  int depth;
};

void recursive_calls(const Term& t, const std::string& name, int depth,
                     std::vector<Call>& out) {
  if (!t) return;
  if (t->kind == Tm::kApp || t->kind == Tm::kGlobal) {
    Spine sp = unapply(t);
    if (sp.head->kind == Tm::kGlobal && sp.head->name == name) {
      out.push_back(Call{sp.args, depth});
      for (const auto& a : sp.args) recursive_calls(a, name, depth, out);
      return;
    }
  }
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    recursive_calls(t->kids[i], name, depth + binders_under(t->kind, i), out);
  }
}

bool decreases_at(const ClauseDef& def, int pos) {
  for (const Clause& c : def.clauses) {
    std::vector<Call> calls;
    recursive_calls(c.rhs, def.name, 0, calls);
    const int vars = c.var_count();
    for (const Call& call : calls) {
      if (static_cast<int>(call.args.size()) <= pos) return false;
      int next = 0;
      for (int i = 0; i < pos; ++i) next += c.params[i].var_count();
      Term pat = pattern_term(c.params[pos], next, vars, call.depth);
      if (!strict_subterm(call.args[pos], pat)) return false;
    }
  }
  return true;
}

std::string head_name(const Value& v) {
  switch (v->kind) {
    case Vk::kPi: return "Pi";
    case Vk::kSigma: return "Sigma";
    case Vk::kSort: return "Set";
    case Vk::kSortOmega: return "Setw";
    case Vk::kNat: return "Nat";
    case Vk::kList: return "List";
    case Vk::kUnit: return "Unit";
    case Vk::kEmpty: return "Empty";
    case Vk::kId: return "Id";
    case Vk::kLift: return "Lift";
    case Vk::kLevelType: return "Level";
    case Vk::kZero: return "zero";
    case Vk::kSuc: return "suc";
    case Vk::kNil: return "nil";
    case Vk::kCons: return "cons";
    case Vk::kTT: return "tt";
    case Vk::kRefl: return "refl";
    default: return "flexible";
  }
}

}  // namespace

ClauseCheck check_clauses(const Session& s, ClauseDef& def) {
  def.matched.clear();
  def.inversion_summary.clear();
  for (int i = 0; i < def.arity; ++i) {
    for (const Clause& c : def.clauses) {
      if (!c.params[i].is_var()) {
        def.matched.push_back(i);
        break;
      }
    }
  }
  std::vector<Row> rows;
  for (const Clause& c : def.clauses) rows.push_back(c.params);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      bool overlap = true;
      for (int k = 0; k < def.arity && overlap; ++k) {
        overlap = compatible(rows[i][k], rows[j][k]);
      }
      if (overlap) {
        return {ClauseError::kOverlap,
                fmt::format("clauses {} and {} of {} overlap", j + 1, i + 1,
                            def.name)};
      }
    }
  }
  if (auto w = missing(rows, static_cast<std::size_t>(def.arity))) {
    return {ClauseError::kCoverage,
            fmt::format("missing case {}", show_row(def.name, *w))};
  }
  bool recursive = false;
  for (const Clause& c : def.clauses) {
    std::vector<Call> calls;
    recursive_calls(c.rhs, def.name, 0, calls);
    recursive = recursive || !calls.empty();
  }
  if (recursive) {
    bool ok = false;
    for (int pos : def.matched) ok = ok || decreases_at(def, pos);
    if (!ok) {
      return {ClauseError::kTermination,
              fmt::format("recursion in {} is not structural", def.name)};
    }
  }
  if (def.single_position()) {
    for (const Clause& c : def.clauses) {
      Env env;
      for (int i = 0; i < c.var_count(); ++i) env.push_back(val::var(i));
      def.inversion_summary.push_back(head_name(force(s, eval(s, env, c.rhs))));
    }
  }
  return {};
}

}  // namespace nary
