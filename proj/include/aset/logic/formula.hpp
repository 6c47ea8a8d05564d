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

#ifndef ASET_LOGIC_FORMULA_HPP_
#define ASET_LOGIC_FORMULA_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aset/core/errors.hpp"

namespace aset::logic {

enum class Kind {
  kTrue, kFalse, kEq, kMem, kRel, kNot, kAnd, kOr, kImplies, kIff,
  kForall, kExists, kBForall, kBExists, kBiquant,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula node. Atoms keep their variable arguments in `args`;
/// quantifiers keep the bound variable in `var` and, for bounded ones, the
/// bounding variable in `bound`. B(x in a, y in b) uses var/bound and
/// var2/bound2. Source positions are carried along but ignored by ==.
struct Formula {
  Kind kind = Kind::kTrue;
  std::string name;               // relation symbol
  std::vector<std::string> args;  // atom arguments
  std::vector<FormulaPtr> sub;
  std::string var, bound, var2, bound2;
  std::string sort;  // optional annotation on forall / exists
  std::size_t line = 0, column = 0;

  bool is_atom() const { return kind == Kind::kEq || kind == Kind::kMem || kind == Kind::kRel; }
  bool is_binary() const {
    return kind == Kind::kAnd || kind == Kind::kOr || kind == Kind::kImplies || kind == Kind::kIff;
  }
  bool is_quantifier() const {
    return kind == Kind::kForall || kind == Kind::kExists || kind == Kind::kBForall || kind == Kind::kBExists ||
           kind == Kind::kBiquant;
  }
};

bool operator==(const Formula& a, const Formula& b);

inline bool same(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.name != b.name || a.args != b.args || a.var != b.var || a.bound != b.bound ||
      a.var2 != b.var2 || a.bound2 != b.bound2 || a.sort != b.sort || a.sub.size() != b.sub.size())
    return false;
  for (std::size_t i = 0; i < a.sub.size(); ++i)
    if (!same(a.sub[i], b.sub[i])) return false;
  return true;
}

// -- builders -------------------------------------------------------------------

namespace detail {
inline FormulaPtr node(Formula f) { return std::make_shared<const Formula>(std::move(f)); }
}  // namespace detail

inline FormulaPtr top() { return detail::node({Kind::kTrue}); }
inline FormulaPtr bottom() { return detail::node({Kind::kFalse}); }

inline FormulaPtr eq(std::string a, std::string b) {
  Formula f{Kind::kEq};
  f.args = {std::move(a), std::move(b)};
  return detail::node(std::move(f));
}

inline FormulaPtr mem(std::string x, std::string a) {
  Formula f{Kind::kMem};
  f.args = {std::move(x), std::move(a)};
  return detail::node(std::move(f));
}

inline FormulaPtr rel(std::string name, std::vector<std::string> args) {
  Formula f{Kind::kRel};
  f.name = std::move(name);
  f.args = std::move(args);
  return detail::node(std::move(f));
}

inline FormulaPtr neg(FormulaPtr p) {
  Formula f{Kind::kNot};
  f.sub = {std::move(p)};
  return detail::node(std::move(f));
}

inline FormulaPtr binary(Kind k, FormulaPtr a, FormulaPtr b) {
  Formula f{k};
  f.sub = {std::move(a), std::move(b)};
  return detail::node(std::move(f));
}

inline FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return binary(Kind::kAnd, std::move(a), std::move(b)); }
inline FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return binary(Kind::kOr, std::move(a), std::move(b)); }
inline FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return binary(Kind::kImplies, std::move(a), std::move(b)); }
inline FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return binary(Kind::kIff, std::move(a), std::move(b)); }

inline FormulaPtr quant(Kind k, std::string x, std::string sort, FormulaPtr body) {
  Formula f{k};
  f.var = std::move(x);
  f.sort = std::move(sort);
  f.sub = {std::move(body)};
  return detail::node(std::move(f));
}

inline FormulaPtr forall(std::string x, FormulaPtr body, std::string sort = "") {
  return quant(Kind::kForall, std::move(x), std::move(sort), std::move(body));
}
inline FormulaPtr exists(std::string x, FormulaPtr body, std::string sort = "") {
  return quant(Kind::kExists, std::move(x), std::move(sort), std::move(body));
}

inline FormulaPtr bounded(Kind k, std::string x, std::string a, FormulaPtr body) {
  Formula f{k};
  f.var = std::move(x);
  f.bound = std::move(a);
  f.sub = {std::move(body)};
  return detail::node(std::move(f));
}

inline FormulaPtr bforall(std::string x, std::string a, FormulaPtr body) {
  return bounded(Kind::kBForall, std::move(x), std::move(a), std::move(body));
}
inline FormulaPtr bexists(std::string x, std::string a, FormulaPtr body) {
  return bounded(Kind::kBExists, std::move(x), std::move(a), std::move(body));
}

inline FormulaPtr biquant(std::string x, std::string a, std::string y, std::string b, FormulaPtr body) {
  Formula f{Kind::kBiquant};
  f.var = std::move(x);
  f.bound = std::move(a);
  f.var2 = std::move(y);
  f.bound2 = std::move(b);
  f.sub = {std::move(body)};
  return detail::node(std::move(f));
}

/// B(x in a, y in b) phi  ==  (forall x in a. exists y in b. phi) /\ (forall y in b. exists x in a. phi)
inline FormulaPtr expand_biquant(const Formula& f) {
  if (f.kind != Kind::kBiquant) throw PreconditionError("not a B(...) formula");
  const auto& phi = f.sub[0];
  return conj(bforall(f.var, f.bound, bexists(f.var2, f.bound2, phi)),
              bforall(f.var2, f.bound2, bexists(f.var, f.bound, phi)));
}

// -- variables ------------------------------------------------------------------

inline void free_vars_into(const Formula& f, std::set<std::string>& bound, std::vector<std::string>& out) {
  auto note = [&](const std::string& v) {
    if (!bound.count(v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  if (f.is_atom()) {
    for (const auto& a : f.args) note(a);
    return;
  }
  switch (f.kind) {
    case Kind::kForall:
    case Kind::kExists:
    case Kind::kBForall:
    case Kind::kBExists: {
      if (!f.bound.empty()) note(f.bound);
      bool fresh = bound.insert(f.var).second;
      free_vars_into(*f.sub[0], bound, out);
      if (fresh) bound.erase(f.var);
      return;
    }
    case Kind::kBiquant: {
      note(f.bound);
      note(f.bound2);
      bool f1 = bound.insert(f.var).second;
      bool f2 = bound.insert(f.var2).second;
      free_vars_into(*f.sub[0], bound, out);
      if (f1) bound.erase(f.var);
      if (f2) bound.erase(f.var2);
      return;
    }
    default:
      for (const auto& s : f.sub) free_vars_into(*s, bound, out);
  }
}

/// Free variables in order of first occurrence.
inline std::vector<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound;
  std::vector<std::string> out;
  free_vars_into(f, bound, out);
  return out;
}

inline void all_vars_into(const Formula& f, std::set<std::string>& out) {
  for (const auto& a : f.args) out.insert(a);
  for (const auto* s : {&f.var, &f.bound, &f.var2, &f.bound2})
    if (!s->empty()) out.insert(*s);
  for (const auto& s : f.sub) all_vars_into(*s, out);
}

inline std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  for (std::size_t i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!taken.count(cand)) return cand;
  }
}

/// Capture-avoiding substitution of the variable `to` for free occurrences
/// of `from`.
inline FormulaPtr substitute(const FormulaPtr& f, const std::string& from, const std::string& to) {
  Formula g = *f;
  if (f->is_atom()) {
    for (auto& a : g.args)
      if (a == from) a = to;
    return detail::node(std::move(g));
  }
  if (!f->is_quantifier()) {
    for (auto& s : g.sub) s = substitute(s, from, to);
    return detail::node(std::move(g));
  }
  if (g.bound == from) g.bound = to;
  if (g.bound2 == from) g.bound2 = to;
  // a binder of `from` shadows it
  if (g.var == from || g.var2 == from) return detail::node(std::move(g));
  std::set<std::string> taken;
  all_vars_into(*f, taken);
  taken.insert(from);
  taken.insert(to);
  FormulaPtr body = g.sub[0];
  for (std::string* v : {&g.var, &g.var2}) {
    if (v->empty() || *v != to) continue;
    std::string fresh = fresh_name(*v, taken);
    taken.insert(fresh);
    body = substitute(body, *v, fresh);
    *v = fresh;
  }
  g.sub[0] = substitute(body, from, to);
  return detail::node(std::move(g));
}

/// True when every quantifier is bounded (B counts as bounded).
inline bool is_bounded(const Formula& f) {
  if (f.kind == Kind::kForall || f.kind == Kind::kExists) return false;
  for (const auto& s : f.sub)
    if (!is_bounded(*s)) return false;
  return true;
}

inline std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  for (const auto& s : f.sub) d = std::max(d, depth(*s));
  return d + 1;
}

}  // namespace aset::logic

#endif  // ASET_LOGIC_FORMULA_HPP_
