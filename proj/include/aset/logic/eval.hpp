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

#ifndef ASET_LOGIC_EVAL_HPP_
#define ASET_LOGIC_EVAL_HPP_

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"
#include "aset/logic/formula.hpp"

namespace aset::logic {

struct SortedVar {
  std::string name;
  std::string sort;
  bool operator==(const SortedVar&) const = default;
};

/// Sorts, relation symbols and the implicit conversions between sorts.
/// Membership is just a relation; `membership` names the one that `x in a`
/// and the bounded quantifiers refer to.
struct Signature {
  struct Relation {
    std::string name;
    std::vector<std::string> sorts;
  };

  std::vector<std::string> sorts;
  std::vector<std::pair<std::string, std::string>> coercions;  // from, to
  std::vector<Relation> relations;
  std::string membership = "in";
  std::string default_sort;

  bool has_sort(const std::string& s) const { return std::find(sorts.begin(), sorts.end(), s) != sorts.end(); }

  bool coercible(const std::string& from, const std::string& to) const {
    if (from == to) return true;
    return std::find(coercions.begin(), coercions.end(), std::pair{from, to}) != coercions.end();
  }

  /// First declared relation called `name` whose sorts accept the arguments.
  std::optional<std::size_t> resolve(const std::string& name, const std::vector<std::string>& arg_sorts) const {
    for (std::size_t i = 0; i < relations.size(); ++i) {
      const auto& r = relations[i];
      if (r.name != name || r.sorts.size() != arg_sorts.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < arg_sorts.size() && ok; ++k) ok = coercible(arg_sorts[k], r.sorts[k]);
      if (ok) return i;
    }
    return std::nullopt;
  }

  /// Sort of x in `x in a` for a of sort `set_sort`.
  std::optional<std::string> element_sort(const std::string& set_sort) const {
    for (const auto& r : relations)
      if (r.name == membership && r.sorts.size() == 2 && coercible(set_sort, r.sorts[1])) return r.sorts[0];
    return std::nullopt;
  }
};

namespace detail {

class SortChecker {
 public:
  explicit SortChecker(const Signature& sig) : sig_(sig) {}

  void check(const Formula& f, std::vector<SortedVar>& ctx) const {
    switch (f.kind) {
      case Kind::kTrue:
      case Kind::kFalse: return;
      case Kind::kEq: {
        auto a = sort_of(f, f.args[0], ctx), b = sort_of(f, f.args[1], ctx);
        if (!sig_.coercible(a, b) && !sig_.coercible(b, a))
          fail(f, "cannot compare " + f.args[0] + " : " + a + " with " + f.args[1] + " : " + b);
        return;
      }
      case Kind::kMem:
      case Kind::kRel: {
        const std::string& name = f.kind == Kind::kMem ? sig_.membership : f.name;
        std::vector<std::string> ss;
        for (const auto& a : f.args) ss.push_back(sort_of(f, a, ctx));
        if (!sig_.resolve(name, ss)) {
          std::string got;
          for (const auto& s : ss) got += (got.empty() ? "" : ", ") + s;
          fail(f, "no relation " + name + " on (" + got + ")");
        }
        return;
      }
      case Kind::kForall:
      case Kind::kExists: {
        std::string s = f.sort.empty() ? sig_.default_sort : f.sort;
        if (s.empty()) fail(f, "no sort for " + f.var + " and no default sort");
        if (!sig_.has_sort(s)) fail(f, "unknown sort " + s);
        scoped(f, {{f.var, s}}, ctx);
        return;
      }
      case Kind::kBForall:
      case Kind::kBExists: {
        scoped(f, {{f.var, elem(f, f.bound, ctx)}}, ctx);
        return;
      }
      case Kind::kBiquant: {
        auto s1 = elem(f, f.bound, ctx), s2 = elem(f, f.bound2, ctx);
        scoped(f, {{f.var, s1}, {f.var2, s2}}, ctx);
        return;
      }
      default:
        for (const auto& s : f.sub) check(*s, ctx);
    }
  }

 private:
  [[noreturn]] static void fail(const Formula& f, const std::string& msg) {
    throw ParseError("sort error: " + msg, f.line ? f.line : 1, f.column ? f.column : 1);
  }

  static std::string sort_of(const Formula& f, const std::string& v, const std::vector<SortedVar>& ctx) {
    for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
      if (it->name == v) return it->sort;
    fail(f, "unbound variable " + v);
  }

  std::string elem(const Formula& f, const std::string& a, const std::vector<SortedVar>& ctx) const {
    auto s = sig_.element_sort(sort_of(f, a, ctx));
    if (!s) fail(f, "no membership relation on " + a);
    return *s;
  }

  void scoped(const Formula& f, std::vector<SortedVar> vars, std::vector<SortedVar>& ctx) const {
    for (auto& v : vars) ctx.push_back(std::move(v));
    check(*f.sub[0], ctx);
    ctx.resize(ctx.size() - vars.size());
  }

  const Signature& sig_;
};

}  // namespace detail

/// Throws ParseError pointing at the offending node.
inline void check_sorts(const Formula& f, const Signature& sig, std::vector<SortedVar> context = {}) {
  detail::SortChecker(sig).check(f, context);
}

/// An interpretation of a signature in a Heyting category: sorts are
/// objects, an n-ary relation is a subobject of the left-nested product
/// (...((1 * S1) * S2) ...) * Sn, and a coercion is an arrow.
template <Heyting C>
class Structure {
 public:
  using Object = typename C::Object;
  using Arrow = typename C::Arrow;

  explicit Structure(const C& c) : c_(&c) {}

  Structure& add_sort(const std::string& name, const Object& obj) {
    if (sig_.has_sort(name)) throw PreconditionError("sort declared twice: " + name);
    sig_.sorts.push_back(name);
    objects_.emplace(name, obj);
    if (sig_.default_sort.empty()) sig_.default_sort = name;
    return *this;
  }

  Structure& add_coercion(const std::string& from, const std::string& to, const Arrow& f) {
    if (c_->dom(f) != sort_object(from) || c_->cod(f) != sort_object(to))
      throw PreconditionError("coercion " + from + " -> " + to + " has the wrong type");
    sig_.coercions.emplace_back(from, to);
    coercions_.emplace(std::pair{from, to}, f);
    return *this;
  }

  Structure& add_relation(const std::string& name, const std::vector<std::string>& sorts, const Subset& sub) {
    Object t = tuple_object(sorts);
    if (sub.size() != c_->sub_top(t).size())
      throw PreconditionError("relation " + name + " does not live on its declared sorts");
    sig_.relations.push_back({name, sorts});
    relations_.push_back(sub);
    return *this;
  }

  Structure& set_membership(const std::string& name) {
    sig_.membership = name;
    return *this;
  }

  Structure& set_default_sort(const std::string& name) {
    sort_object(name);
    sig_.default_sort = name;
    return *this;
  }

  const C& category() const { return *c_; }
  const Signature& signature() const { return sig_; }
  const Subset& relation(std::size_t i) const { return relations_.at(i); }

  const Object& sort_object(const std::string& name) const {
    auto it = objects_.find(name);
    if (it == objects_.end()) throw PreconditionError("unknown sort " + name);
    return it->second;
  }

  Arrow coercion(const std::string& from, const std::string& to) const {
    if (from == to) return c_->identity(sort_object(from));
    auto it = coercions_.find({from, to});
    if (it == coercions_.end()) throw PreconditionError("no coercion " + from + " -> " + to);
    return it->second;
  }

  Object tuple_object(const std::vector<std::string>& sorts) const {
    Object t = c_->terminal();
    for (const auto& s : sorts) t = c_->product(t, sort_object(s)).apex;
    return t;
  }

 private:
  const C* c_;
  Signature sig_;
  std::map<std::string, Object> objects_;
  std::map<std::pair<std::string, std::string>, Arrow> coercions_;
  std::vector<Subset> relations_;
};

/// Kripke-Joyal interpretation: a formula in context Gamma denotes a
/// subobject of the context object (...(1 * S1) ...) * Sn.
template <Heyting C>
class KripkeJoyal {
 public:
  using Object = typename C::Object;
  using Arrow = typename C::Arrow;

  /// `max_context` caps the cardinality of any context object visited.
  KripkeJoyal(const Structure<C>& s, std::vector<SortedVar> context, std::size_t max_context = std::size_t{1} << 22)
      : s_(s), c_(s.category()), max_context_(max_context) {
    Ctx root;
    root.obj = c_.terminal();
    ctxs_.push_back(std::move(root));
    std::size_t id = 0;
    for (const auto& v : context) id = extend(id, v.name, v.sort);
    top_ = id;
    context_ = std::move(context);
  }

  const Object& context_object() const { return ctxs_[top_].obj; }

  Subset eval(const FormulaPtr& f) {
    check_sorts(*f, s_.signature(), context_);
    return go(*f, top_);
  }

 private:
  struct Ctx {
    std::vector<SortedVar> vars;
    Object obj{};
    std::vector<Arrow> proj;  // to each variable's sort
    std::optional<Arrow> drop;  // to the context one shorter
  };

  std::size_t extend(std::size_t id, const std::string& name, const std::string& sort) {
    auto key = std::tuple{id, name, sort};
    if (auto it = ext_.find(key); it != ext_.end()) return it->second;
    const Ctx& base = ctxs_[id];
    const Object& so = s_.sort_object(sort);
    Cone<C> k = c_.product(base.obj, so);
    if (c_.cardinality(k.apex) > max_context_)
      throw ResourceBound("context of " + std::to_string(base.vars.size() + 1) + " variables exceeds " +
                          std::to_string(max_context_) + " elements");
    Ctx next;
    next.vars = base.vars;
    next.vars.push_back({name, sort});
    next.obj = k.apex;
    for (const auto& p : base.proj) next.proj.push_back(c_.compose(p, k.first));
    next.proj.push_back(k.second);
    next.drop = k.first;
    ctxs_.push_back(std::move(next));
    ext_.emplace(key, ctxs_.size() - 1);
    return ctxs_.size() - 1;
  }

  std::size_t lookup(std::size_t id, const std::string& v) const {
    const auto& vars = ctxs_[id].vars;
    for (std::size_t i = vars.size(); i-- > 0;)
      if (vars[i].name == v) return i;
    throw PreconditionError("unbound variable " + v);
  }

  Arrow term(std::size_t id, const std::string& v, const std::string& to_sort) const {
    std::size_t i = lookup(id, v);
    const Ctx& g = ctxs_[id];
    return c_.compose(s_.coercion(g.vars[i].sort, to_sort), g.proj[i]);
  }

  std::string sort_in(std::size_t id, const std::string& v) const { return ctxs_[id].vars[lookup(id, v)].sort; }

  Subset atom_rel(const std::string& name, const std::vector<std::string>& args, std::size_t id) {
    std::vector<std::string> ss;
    for (const auto& a : args) ss.push_back(sort_in(id, a));
    auto r = s_.signature().resolve(name, ss);
    if (!r) throw PreconditionError("no relation " + name + " for these arguments");
    const auto& rs = s_.signature().relations[*r].sorts;
    const Ctx& g = ctxs_[id];
    Object t = c_.terminal();
    Arrow tuple = c_.to_terminal(g.obj);
    for (std::size_t k = 0; k < args.size(); ++k) {
      Cone<C> p = c_.product(t, s_.sort_object(rs[k]));
      tuple = c_.mediate(p, tuple, term(id, args[k], rs[k]));
      t = p.apex;
    }
    return c_.sub_pullback(tuple, s_.relation(*r));
  }

  Subset go(const Formula& f, std::size_t id) {
    auto key = std::pair{&f, id};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Subset out = compute(f, id);
    memo_.emplace(key, out);
    return out;
  }

  Subset compute(const Formula& f, std::size_t id) {
    const Object gamma = ctxs_[id].obj;
    const auto& sig = s_.signature();
    switch (f.kind) {
      case Kind::kTrue: return c_.sub_top(gamma);
      case Kind::kFalse: return c_.sub_bottom(gamma);
      case Kind::kEq: {
        auto a = sort_in(id, f.args[0]), b = sort_in(id, f.args[1]);
        std::string common = sig.coercible(a, b) ? b : a;
        return c_.sub_key(c_.equalizer(term(id, f.args[0], common), term(id, f.args[1], common)));
      }
      case Kind::kMem: return atom_rel(sig.membership, f.args, id);
      case Kind::kRel: return atom_rel(f.name, f.args, id);
      case Kind::kNot: return c_.sub_implies(gamma, go(*f.sub[0], id), c_.sub_bottom(gamma));
      case Kind::kAnd: return c_.sub_meet(gamma, go(*f.sub[0], id), go(*f.sub[1], id));
      case Kind::kOr: return c_.sub_join(gamma, go(*f.sub[0], id), go(*f.sub[1], id));
      case Kind::kImplies: return c_.sub_implies(gamma, go(*f.sub[0], id), go(*f.sub[1], id));
      case Kind::kIff: {
        Subset a = go(*f.sub[0], id), b = go(*f.sub[1], id);
        return c_.sub_meet(gamma, c_.sub_implies(gamma, a, b), c_.sub_implies(gamma, b, a));
      }
      case Kind::kForall:
      case Kind::kExists: {
        std::string sort = f.sort.empty() ? sig.default_sort : f.sort;
        std::size_t inner = extend(id, f.var, sort);
        Subset body = go(*f.sub[0], inner);
        const Arrow& drop = *ctxs_[inner].drop;
        return f.kind == Kind::kForall ? c_.sub_forall(drop, body) : c_.sub_exists(drop, body);
      }
      case Kind::kBForall:
      case Kind::kBExists: {
        // forall x in a. phi == forall x. (x in a -> phi); dually with /\.
        std::string sort = *sig.element_sort(sort_in(id, f.bound));
        std::size_t inner = extend(id, f.var, sort);
        const Object delta = ctxs_[inner].obj;
        Subset m = atom_rel(sig.membership, {f.var, f.bound}, inner);
        Subset body = go(*f.sub[0], inner);
        const Arrow& drop = *ctxs_[inner].drop;
        if (f.kind == Kind::kBForall) return c_.sub_forall(drop, c_.sub_implies(delta, m, body));
        return c_.sub_exists(drop, c_.sub_meet(delta, m, body));
      }
      case Kind::kBiquant: {
        expansions_.push_back(expand_biquant(f));
        return go(*expansions_.back(), id);
      }
    }
    throw Error("unknown formula kind");
  }

  const Structure<C>& s_;
  const C& c_;
  std::size_t max_context_;
  std::deque<Ctx> ctxs_;
  std::map<std::tuple<std::size_t, std::string, std::string>, std::size_t> ext_;
  std::map<std::pair<const Formula*, std::size_t>, Subset> memo_;
  std::vector<FormulaPtr> expansions_;
  std::vector<SortedVar> context_;
  std::size_t top_ = 0;
};

/// The subobject of the context object interpreting `phi`.
template <Heyting C>
Subset kripke_joyal_eval(const FormulaPtr& phi, const Structure<C>& env, const std::vector<SortedVar>& context = {},
                         std::size_t max_context = std::size_t{1} << 22) {
  KripkeJoyal<C> kj(env, context, max_context);
  return kj.eval(phi);
}

/// A closed formula is valid when it denotes the top subobject of 1.
template <Heyting C>
bool valid(const FormulaPtr& phi, const Structure<C>& env, std::size_t max_context = std::size_t{1} << 22) {
  const C& c = env.category();
  return kripke_joyal_eval(phi, env, {}, max_context) == c.sub_top(c.terminal());
}

}  // namespace aset::logic

#endif  // ASET_LOGIC_EVAL_HPP_
