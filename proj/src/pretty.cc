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

#include "nary/pretty.h"

#include <fmt/format.h>

#include <algorithm>
#include <set>

namespace nary {

namespace {

enum Prec { kFull = 0, kStar = 1, kApp = 2, kAtom = 3 };

class Printer {
 public:
  explicit Printer(std::vector<std::string> names) : names_(std::move(names)) {}

  std::string print(const Term& t, int prec) {
    switch (t->kind) {
      case Tm::kLam:
        return wrap(prec > kFull, lambda(t));
      case Tm::kLet:
        return wrap(prec > kFull, let(t));
      case Tm::kPi:
        return wrap(prec > kFull, pi(t));
      case Tm::kSigma:
        return sigma(t, prec);
      case Tm::kApp:
      case Tm::kFst:
      case Tm::kSnd:
      case Tm::kAbsurd:
      case Tm::kSuc:
      case Tm::kList:
      case Tm::kCons:
      case Tm::kId:
      case Tm::kJ:
      case Tm::kLift:
      case Tm::kLiftIn:
      case Tm::kLower:
      case Tm::kLSuc:
      case Tm::kLMax:
        return application(t, prec);
      case Tm::kSort:
        if (t->kids[0]->kind == Tm::kLZero) return "Set";
        return application(t, prec);
      default:
        return atom(t);
    }
  }

 private:
  static std::string wrap(bool parens, std::string s) {
    return parens ? "(" + s + ")" : s;
  }

  std::string var(int index) const {
    const int n = static_cast<int>(names_.size());
    if (index < 0 || index >= n) return fmt::format("#{}", index);
    return names_[n - 1 - index];
  }

  // Picks a printable binder name that captures nothing.
  std::string fresh(const std::string& hint, const Term& body, bool used) {
    if (!used) return "_";
    std::string base =
        hint.empty() || hint == "_" || hint[0] == '%' ? "x" : hint;
    std::vector<std::string> globals;
    collect_globals(body, globals);
    std::string name = base;
    while (std::find(names_.begin(), names_.end(), name) != names_.end() ||
           std::find(globals.begin(), globals.end(), name) != globals.end()) {
      name += "'";
    }
    return name;
  }

  template <typename F>
  std::string under(const std::string& name, F&& f) {
    names_.push_back(name);
    std::string out = f();
    names_.pop_back();
    return out;
  }

  std::string lambda(const Term& t) {
    std::string out = "\\";
    Term cur = t;
    std::size_t pushed = 0;
    while (cur->kind == Tm::kLam) {
      const Term& body = cur->kids[0];
      std::string n = fresh(cur->name, body, mentions_var(body, 0));
      out += cur->implicit ? "{" + n + "} " : n + " ";
      names_.push_back(n);
      ++pushed;
      cur = body;
    }
    out.back() = '.';
    out += " " + print(cur, kFull);
    names_.resize(names_.size() - pushed);
    return out;
  }

  std::string let(const Term& t) {
    std::string n = fresh(t->name, t->kids[2], true);
    std::string out = "let " + n;
    if (t->kids[0]) out += " : " + print(t->kids[0], kFull);
    out += " = " + print(t->kids[1], kFull) + " in ";
    return out + under(n, [&] { return print(t->kids[2], kFull); });
  }

  std::string pi(const Term& t) {
    const Term& cod = t->kids[2];
    const bool dep = mentions_var(cod, 0);
    if (!dep && !t->implicit) {
      return print(t->kids[0], kStar) + " -> " +
             under("_", [&] { return print(cod, kFull); });
    }
    std::string n = fresh(t->name, cod, true);
    std::string dom = n + " : " + print(t->kids[0], kFull);
    dom = t->implicit ? "{" + dom + "}" : "(" + dom + ")";
    return dom + " -> " + under(n, [&] { return print(cod, kFull); });
  }

  std::string sigma(const Term& t, int prec) {
    const Term& snd = t->kids[2];
    if (!mentions_var(snd, 0)) {
      return wrap(prec > kStar,
                  print(t->kids[0], kApp) + " * " +
                      under("_", [&] { return print(snd, kStar); }));
    }
    std::string n = fresh(t->name, snd, true);
    return wrap(prec > kFull,
                "(" + n + " : " + print(t->kids[0], kFull) + ") * " +
                    under(n, [&] { return print(snd, kFull); }));
  }

  static const char* builtin(Tm k) {
    switch (k) {
      case Tm::kFst: return "fst";
      case Tm::kSnd: return "snd";
      case Tm::kAbsurd: return "absurd";
      case Tm::kSuc: return "suc";
      case Tm::kList: return "List";
      case Tm::kCons: return "cons";
      case Tm::kId: return "Id";
      case Tm::kJ: return "J";
      case Tm::kLift: return "Lift";
      case Tm::kLiftIn: return "lift";
      case Tm::kLower: return "lower";
      case Tm::kLSuc: return "lsuc";
      case Tm::kLMax: return "lmax";
      case Tm::kSort: return "Set";
      default: return "";
    }
  }

  std::string application(const Term& t, int prec) {
    unsigned n = 0;
    if (t->kind == Tm::kSuc && as_numeral(t, n)) return std::to_string(n);
    std::string out;
    if (t->kind == Tm::kApp) {
      Spine sp = unapply(t);
      out = print(sp.head, kApp);
      for (std::size_t i = 0; i < sp.args.size(); ++i) {
        out += sp.implicit[i] ? " {" + print(sp.args[i], kFull) + "}"
                              : " " + print(sp.args[i], kAtom);
      }
    } else {
      out = builtin(t->kind);
      for (const auto& k : t->kids) out += " " + print(k, kAtom);
    }
    return wrap(prec > kApp, out);
  }

  std::string atom(const Term& t) {
    switch (t->kind) {
      case Tm::kVar:
        return var(t->index);
      case Tm::kGlobal:
        return t->name;
      case Tm::kMeta:
        return fmt::format("?{}", t->meta);
      case Tm::kPair: {
        std::string out = "(" + print(t->kids[0], kFull);
        Term cur = t->kids[1];
        while (cur->kind == Tm::kPair) {
          out += " , " + print(cur->kids[0], kFull);
          cur = cur->kids[1];
        }
        return out + " , " + print(cur, kFull) + ")";
      }
      case Tm::kUnit: return "Unit";
      case Tm::kTT: return "tt";
      case Tm::kEmpty: return "Empty";
      case Tm::kNat: return "Nat";
      case Tm::kZero: return "0";
      case Tm::kNil: return "nil";
      case Tm::kRefl: return "refl";
      case Tm::kSortOmega: return "Setw";
      case Tm::kLevel: return "Level";
      case Tm::kLZero: return "lzero";
      case Tm::kSort: return "Set";
      default:
        return "<?>";
    }
  }

  std::vector<std::string> names_;
};

}  // namespace

std::string pretty(const Term& t, const std::vector<std::string>& names) {
  return Printer(names).print(t, kFull);
}

}  // namespace nary
