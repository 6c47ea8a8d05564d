//  Copyright 2026 The aset Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef ASET_LOGIC_PARSER_HPP_
#define ASET_LOGIC_PARSER_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aset/core/errors.hpp"
#include "aset/logic/formula.hpp"

// Concrete syntax, loosest binding first:
//
//   formula := imp ("<->" formula)?
//   imp     := or ("->" imp)?
//   or      := and ("\/" and)*
//   and     := unary ("/\" unary)*
//   unary   := "~" unary | quant | atom
//   quant   := ("forall" | "exists") id (":" id | "in" id)? body
//            | "B" "(" id "in" id "," id "in" id ")" body
//   body    := "." formula | unary
//   atom    := "true" | "false" | "(" formula ")" | id "(" ids ")" | id "=" id | id "in" id | id
//
// A dot gives the quantifier the widest possible scope; without one it
// binds like negation.

namespace aset::logic {

namespace detail {

enum class Tok { kIdent, kLParen, kRParen, kComma, kDot, kColon, kEq, kAnd, kOr, kImp, kIff, kNot, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

inline std::vector<Token> lex(std::string_view src, std::size_t line0 = 1, std::size_t col0 = 1) {
  std::vector<Token> out;
  std::size_t line = line0, col = col0;
  std::size_t i = 0;
  auto at = [&](std::size_t k) { return i + k < src.size() ? src[i + k] : '\0'; };
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '#') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    std::size_t l = line, c = col;
    auto sym = [&](Tok t, std::size_t len) {
      out.push_back({t, std::string(src.substr(i, len)), l, c});
      advance(len);
    };
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      sym(Tok::kIdent, j - i);
    } else if (ch == '(') {
      sym(Tok::kLParen, 1);
    } else if (ch == ')') {
      sym(Tok::kRParen, 1);
    } else if (ch == ',') {
      sym(Tok::kComma, 1);
    } else if (ch == '.') {
      sym(Tok::kDot, 1);
    } else if (ch == ':') {
      sym(Tok::kColon, 1);
    } else if (ch == '=') {
      sym(Tok::kEq, 1);
    } else if (ch == '~') {
      sym(Tok::kNot, 1);
    } else if (ch == '/' && at(1) == '\\') {
      sym(Tok::kAnd, 2);
    } else if (ch == '\\' && at(1) == '/') {
      sym(Tok::kOr, 2);
    } else if (ch == '-' && at(1) == '>') {
      sym(Tok::kImp, 2);
    } else if (ch == '<' && at(1) == '-' && at(2) == '>') {
      sym(Tok::kIff, 3);
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
    }
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

inline bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "in" || s == "true" || s == "false";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr parse_all() {
    FormulaPtr f = formula();
    if (peek().kind != Tok::kEnd) fail("unexpected '" + peek().text + "' after formula");
    return f;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(t.kind == Tok::kEnd ? msg + " (at end of input)" : msg, t.line, t.column);
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }

  bool at_word(const char* w, std::size_t k = 0) const {
    return peek(k).kind == Tok::kIdent && peek(k).text == w;
  }

  std::string ident(const char* what) {
    if (peek().kind != Tok::kIdent || is_keyword(peek().text)) fail(std::string("expected ") + what);
    return next().text;
  }

  static FormulaPtr at(FormulaPtr f, const Token& t) {
    Formula g = *f;
    g.line = t.line;
    g.column = t.column;
    return detail::node(std::move(g));
  }

  FormulaPtr formula() {
    const Token& start = peek();
    FormulaPtr lhs = imp();
    if (accept(Tok::kIff)) return at(iff(lhs, formula()), start);
    return lhs;
  }

  FormulaPtr imp() {
    const Token& start = peek();
    FormulaPtr lhs = disjunction();
    if (accept(Tok::kImp)) return at(implies(lhs, imp()), start);
    return lhs;
  }

  FormulaPtr disjunction() {
    const Token& start = peek();
    FormulaPtr lhs = conjunction();
    while (accept(Tok::kOr)) lhs = at(disj(lhs, conjunction()), start);
    return lhs;
  }

  FormulaPtr conjunction() {
    const Token& start = peek();
    FormulaPtr lhs = unary();
    while (accept(Tok::kAnd)) lhs = at(conj(lhs, unary()), start);
    return lhs;
  }

  FormulaPtr body() {
    if (accept(Tok::kDot)) return formula();
    return unary();
  }

  FormulaPtr unary() {
    const Token& start = peek();
    if (accept(Tok::kNot)) return at(neg(unary()), start);
    if (at_word("forall") || at_word("exists")) {
      bool universal = next().text == "forall";
      std::string x = ident("a variable after quantifier");
      if (accept(Tok::kColon)) {
        std::string sort = ident("a sort name");
        return at(universal ? forall(x, body(), sort) : exists(x, body(), sort), start);
      }
      if (at_word("in")) {
        next();
        std::string a = ident("a bounding variable");
        return at(universal ? bforall(x, a, body()) : bexists(x, a, body()), start);
      }
      return at(universal ? forall(x, body()) : exists(x, body()), start);
    }
    if (at_word("B") && peek(1).kind == Tok::kLParen && peek(2).kind == Tok::kIdent && peek(3).kind == Tok::kIdent &&
        peek(3).text == "in") {
      next();
      next();
      std::string x = ident("a variable");
      next();  // in
      std::string a = ident("a bounding variable");
      expect(Tok::kComma, "','");
      std::string y = ident("a variable");
      if (!at_word("in")) fail("expected 'in'");
      next();
      std::string b = ident("a bounding variable");
      expect(Tok::kRParen, "')'");
      return at(biquant(x, a, y, b, body()), start);
    }
    return atom();
  }

  FormulaPtr atom() {
    const Token& start = peek();
    if (accept(Tok::kLParen)) {
      FormulaPtr f = formula();
      expect(Tok::kRParen, "')'");
      return f;
    }
    if (at_word("true")) {
      next();
      return at(top(), start);
    }
    if (at_word("false")) {
      next();
      return at(bottom(), start);
    }
    std::string x = ident("a formula");
    if (accept(Tok::kLParen)) {
      std::vector<std::string> args;
      if (peek().kind != Tok::kRParen) {
        args.push_back(ident("an argument"));
        while (accept(Tok::kComma)) args.push_back(ident("an argument"));
      }
      expect(Tok::kRParen, "')'");
      return at(rel(x, std::move(args)), start);
    }
    if (accept(Tok::kEq)) return at(eq(x, ident("a variable after '='")), start);
    if (at_word("in")) {
      next();
      return at(mem(x, ident("a variable after 'in'")), start);
    }
    return at(rel(x, {}), start);  // propositional letter
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses one formula. `line`/`column` locate the text inside a larger
/// file so that errors point at the right place.
inline FormulaPtr parse(std::string_view text, std::size_t line = 1, std::size_t column = 1) {
  return detail::Parser(detail::lex(text, line, column)).parse_all();
}

// -- printing -------------------------------------------------------------------

namespace detail {

inline int level(Kind k) {
  switch (k) {
    case Kind::kIff: return 0;
    case Kind::kImplies: return 1;
    case Kind::kOr: return 2;
    case Kind::kAnd: return 3;
    default: return 4;
  }
}

// `prec`: minimum level the context accepts without parentheses.
// `open_right`: nothing follows this subformula inside its group, so a
// dotted quantifier may run to the end.
inline std::string print(const Formula& f, int prec, bool open_right) {
  auto join_args = [&] {
    std::string s;
    for (std::size_t i = 0; i < f.args.size(); ++i) s += (i ? ", " : "") + f.args[i];
    return s;
  };
  switch (f.kind) {
    case Kind::kTrue: return "true";
    case Kind::kFalse: return "false";
    case Kind::kEq: return f.args[0] + " = " + f.args[1];
    case Kind::kMem: return f.args[0] + " in " + f.args[1];
    case Kind::kRel: return f.args.empty() ? f.name : f.name + "(" + join_args() + ")";
    case Kind::kNot: return "~" + print(*f.sub[0], 4, open_right);
    default: break;
  }
  if (f.is_quantifier()) {
    std::string head;
    if (f.kind == Kind::kBiquant) {
      head = "B(" + f.var + " in " + f.bound + ", " + f.var2 + " in " + f.bound2 + ")";
    } else {
      head = (f.kind == Kind::kForall || f.kind == Kind::kBForall) ? "forall " : "exists ";
      head += f.var;
      if (!f.bound.empty()) head += " in " + f.bound;
      if (!f.sort.empty()) head += " : " + f.sort;
    }
    std::string s = head + ". " + print(*f.sub[0], 0, true);
    return open_right ? s : "(" + s + ")";
  }
  int me = level(f.kind);
  // /\ and \/ associate to the left; -> and <-> to the right
  bool left_assoc = f.kind == Kind::kAnd || f.kind == Kind::kOr;
  int lp = left_assoc ? me : me + 1;
  int rp = left_assoc ? me + 1 : me;
  const char* op = f.kind == Kind::kAnd ? " /\\ " : f.kind == Kind::kOr ? " \\/ " : f.kind == Kind::kImplies ? " -> " : " <-> ";
  bool paren = me < prec;
  std::string s = print(*f.sub[0], lp, false) + op + print(*f.sub[1], rp, paren || open_right);
  return paren ? "(" + s + ")" : s;
}

}  // namespace detail

/// Canonical text; parse(to_string(f)) == f.
inline std::string to_string(const Formula& f) { return detail::print(f, 0, true); }
inline std::string to_string(const FormulaPtr& f) { return to_string(*f); }

}  // namespace aset::logic

#endif  // ASET_LOGIC_PARSER_HPP_
