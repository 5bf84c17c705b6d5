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

#include <fmt/format.h>

#include <cctype>
#include <optional>

#include "nary/surface.h"

namespace nary {

namespace {

enum class Tok : std::uint8_t { kIdent, kNum, kSym, kPragma, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  Span span;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(const std::string& s, std::size_t i) {
  const char c = s[i];
  if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' ||
      c == '\'') {
    return true;
  }
  return c == '-' && i + 1 < s.size() && s[i + 1] != '>' && s[i + 1] != '-';
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '-') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.span = Span{line, col};
    std::size_t j = i;
    if (ident_start(c)) {
      while (j < s.size() && ident_char(s, j)) ++j;
      t.kind = Tok::kIdent;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::kNum;
    } else if (c == '#') {
      ++j;
      while (j < s.size() && ident_char(s, j)) ++j;
      t.kind = Tok::kPragma;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      j += 2;
      t.kind = Tok::kSym;
    } else if (std::string("(){}:=*,\\.").find(c) != std::string::npos) {
      ++j;
      t.kind = Tok::kSym;
    } else {
      throw ParseError(t.span, fmt::format("unexpected character '{}'", c));
    }
    t.text = s.substr(i, j - i);
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.span = Span{line, col};
  out.push_back(end);
  return out;
}

SPtr node(Sx kind, Span span, std::vector<SPtr> kids = {},
          std::string name = {}, bool implicit = false) {
  auto e = std::make_shared<SExpr>();
  e->kind = kind;
  e->span = span;
  e->kids = std::move(kids);
  e->name = std::move(name);
  e->implicit = implicit;
  return e;
}

bool reserved(const std::string& w) {
  return w == "let" || w == "in" || w == "postulate";
}

class Parser {
 public:
  Parser(const std::vector<Token>& toks, std::size_t begin, std::size_t end)
      : toks_(toks), pos_(begin), end_(end) {}

  bool at_end() const { return pos_ >= end_; }

  void expect_end() {
    if (!at_end()) error("end of declaration");
  }

  SPtr expr() {
    if (is("\\")) return lambda();
    if (is_word("let")) return let();
    return arrow();
  }

  SDecl decl() {
    SDecl d;
    d.span = peek().span;
    if (peek().kind == Tok::kPragma) {
      if (peek().text != "#expect") error("#expect");
      ++pos_;
      d.kind = DeclKind::kExpect;
      d.name = ident();
      if (d.name != "ok" && d.name != "unsolved" && d.name != "typeerror") {
        error_at(d.span, "ok, unsolved or typeerror");
      }
      expect_end();
      return d;
    }
    if (is_word("postulate")) {
      ++pos_;
      d.kind = DeclKind::kPostulate;
      d.name = ident();
      sym(":");
      d.expr = expr();
      expect_end();
      return d;
    }
    d.name = ident();
    if (is(":")) {
      ++pos_;
      d.kind = DeclKind::kSignature;
      d.expr = expr();
      expect_end();
      return d;
    }
    d.kind = DeclKind::kClause;
    while (!is("=")) d.params.push_back(pattern_param());
    sym("=");
    d.expr = expr();
    expect_end();
    return d;
  }

 private:
  const Token& peek() const { return toks_[std::min(pos_, end_)]; }

  [[noreturn]] void error(const std::string& expected) const {
    error_at(peek().span, expected);
  }
  [[noreturn]] static void error_at(Span at, const std::string& expected) {
    throw ParseError(at, "expected " + expected);
  }

  bool is(const char* s) const {
    return !at_end() && peek().kind == Tok::kSym && peek().text == s;
  }
  bool is_word(const char* s) const {
    return !at_end() && peek().kind == Tok::kIdent && peek().text == s;
  }
  void sym(const char* s) {
    if (!is(s)) error(fmt::format("'{}'", s));
    ++pos_;
  }
  std::string ident() {
    if (at_end() || peek().kind != Tok::kIdent || reserved(peek().text)) {
      error("a name");
    }
    return toks_[pos_++].text;
  }

  Pattern pattern_atom() {
    if (!at_end() && peek().kind == Tok::kNum) {
      unsigned n = static_cast<unsigned>(std::stoul(toks_[pos_++].text));
      Pattern p = Pattern::zero();
      while (n-- > 0) p = Pattern::suc(p);
      return p;
    }
    if (is("(")) {
      ++pos_;
      Pattern p = pattern_app();
      sym(")");
      return p;
    }
    std::string w = ident();
    if (w == "zero") return Pattern::zero();
    if (w == "nil") return Pattern::nil();
    if (w == "suc" || w == "cons") error("a parenthesised constructor");
    return Pattern::var(w);
  }

  Pattern pattern_app() {
    if (is_word("suc")) {
      ++pos_;
      return Pattern::suc(pattern_atom());
    }
    if (is_word("cons")) {
      ++pos_;
      Pattern h = pattern_atom();
      return Pattern::cons(h, pattern_atom());
    }
    return pattern_atom();
  }

  SPattern pattern_param() {
    if (is("{")) {
      ++pos_;
      SPattern p{pattern_app(), true};
      sym("}");
      return p;
    }
    return SPattern{pattern_atom(), false};
  }

  SPtr lambda() {
    sym("\\");
    struct Binder {
      std::string name;
      bool implicit;
      SPtr type;
      Span span;
    };
    std::vector<Binder> binders;
    while (!is(".")) {
      Span bs = peek().span;
      if (is("(") || is("{")) {
        const bool imp = is("{");
        ++pos_;
        std::vector<std::string> names;
        do {
          names.push_back(ident());
        } while (!at_end() && peek().kind == Tok::kIdent);
        SPtr type;
        if (is(":")) {
          ++pos_;
          type = expr();
        } else if (!imp) {
          error("':'");
        }
        sym(imp ? "}" : ")");
        for (auto& n : names) binders.push_back({n, imp, type, bs});
      } else {
        binders.push_back({ident(), false, nullptr, bs});
      }
    }
    if (binders.empty()) error("a binder");
    sym(".");
    SPtr body = expr();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = node(Sx::kLam, it->span, {it->type, body}, it->name, it->implicit);
    }
    return body;
  }

  SPtr let() {
    Span at = peek().span;
    ++pos_;
    std::string name = ident();
    SPtr ann;
    if (is(":")) {
      ++pos_;
      ann = expr();
    }
    sym("=");
    SPtr bound = expr();
    if (!is_word("in")) error("'in'");
    ++pos_;
    SPtr body = expr();
    return node(Sx::kLet, at, {ann, bound, body}, name);
  }

  struct Group {
    std::vector<std::string> names;
    bool implicit;
    SPtr type;
    Span span;
  };

  // `(x y : A)` or `{x : A}`; restores the position and returns nothing
  // when the tokens do not form a binder group.
  std::optional<Group> try_group() {
    const std::size_t save = pos_;
    if (!is("(") && !is("{")) return std::nullopt;
    Group g;
    g.span = peek().span;
    g.implicit = is("{");
    ++pos_;
    while (!at_end() && peek().kind == Tok::kIdent && !reserved(peek().text)) {
      g.names.push_back(toks_[pos_++].text);
    }
    if (g.names.empty() || !is(":")) {
      pos_ = save;
      return std::nullopt;
    }
    ++pos_;
    try {
      g.type = expr();
      sym(g.implicit ? "}" : ")");
    } catch (const ParseError&) {
      pos_ = save;
      return std::nullopt;
    }
    return g;
  }

  SPtr arrow() {
    const std::size_t save = pos_;
    std::vector<Group> groups;
    while (auto g = try_group()) groups.push_back(std::move(*g));
    if (!groups.empty() && is("->")) {
      ++pos_;
      SPtr body = expr();
      for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
        for (auto n = g->names.rbegin(); n != g->names.rend(); ++n) {
          body = node(Sx::kPi, g->span, {g->type, body}, *n, g->implicit);
        }
      }
      return body;
    }
    if (groups.size() == 1 && !groups[0].implicit && is("*")) {
      ++pos_;
      SPtr body = expr();
      const Group& g = groups[0];
      for (auto n = g.names.rbegin(); n != g.names.rend(); ++n) {
        body = node(Sx::kSigma, g.span, {g.type, body}, *n);
      }
      return body;
    }
    pos_ = save;
    SPtr lhs = star();
    if (is("->")) {
      ++pos_;
      return node(Sx::kPi, lhs->span, {lhs, expr()}, "_");
    }
    return lhs;
  }

  SPtr star() {
    SPtr lhs = app();
    if (is("*")) {
      ++pos_;
      return node(Sx::kSigma, lhs->span, {lhs, star()}, "_");
    }
    return lhs;
  }

  bool atom_start() const {
    if (at_end()) return false;
    const Token& t = peek();
    if (t.kind == Tok::kNum) return true;
    if (t.kind == Tok::kIdent) return !reserved(t.text);
    return t.kind == Tok::kSym && (t.text == "(" || t.text == "{");
  }

  SPtr app() {
    if (is("{")) error("an expression");
    SPtr head = atom();
    while (atom_start()) {
      if (is("{")) {
        ++pos_;
        SPtr arg = expr();
        sym("}");
        head = node(Sx::kApp, head->span, {head, arg}, {}, true);
      } else if (is("\\")) {
        break;
      } else {
        head = node(Sx::kApp, head->span, {head, atom()});
      }
    }
    if (is("\\")) head = node(Sx::kApp, head->span, {head, lambda()});
    return head;
  }

  SPtr atom() {
    if (at_end()) error("an expression");
    const Token& t = peek();
    if (t.kind == Tok::kNum) {
      ++pos_;
      auto e = std::make_shared<SExpr>();
      e->kind = Sx::kNum;
      e->span = t.span;
      e->num = static_cast<unsigned>(std::stoul(t.text));
      return e;
    }
    if (t.kind == Tok::kIdent && !reserved(t.text)) {
      ++pos_;
      return node(t.text == "_" ? Sx::kHole : Sx::kVar, t.span, {}, t.text);
    }
    if (is("(")) {
      Span at = t.span;
      ++pos_;
      SPtr e = expr();
      if (is(":")) {
        ++pos_;
        SPtr type = expr();
        sym(")");
        return node(Sx::kAnn, at, {e, type});
      }
      if (is(",")) {
        std::vector<SPtr> parts{e};
        while (is(",")) {
          ++pos_;
          parts.push_back(expr());
        }
        sym(")");
        SPtr out = parts.back();
        for (std::size_t i = parts.size() - 1; i-- > 0;) {
          out = node(Sx::kPair, parts[i]->span, {parts[i], out});
        }
        return out;
      }
      sym(")");
      return e;
    }
    error("an expression");
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  std::size_t end_;
};

}  // namespace

std::vector<SDecl> parse_file(const std::string& text) {
  std::vector<Token> toks = lex(text);
  std::vector<SDecl> out;
  std::size_t i = 0;
  const std::size_t last = toks.size() - 1;
  while (i < last) {
    if (toks[i].span.col != 1) {
      throw ParseError(toks[i].span, "expected a declaration at column 1");
    }
    std::size_t j = i + 1;
    while (j < last && toks[j].span.col != 1) ++j;
    Parser p(toks, i, j);
    out.push_back(p.decl());
    i = j;
  }
  return out;
}

SPtr parse_expr(const std::string& text) {
  std::vector<Token> toks = lex(text);
  const std::size_t last = toks.size() - 1;
  Parser p(toks, 0, last);
  SPtr e = p.expr();
  p.expect_end();
  return e;
}

}  // namespace nary
