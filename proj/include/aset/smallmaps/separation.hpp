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

#ifndef ASET_SMALLMAPS_SEPARATION_HPP_
#define ASET_SMALLMAPS_SEPARATION_HPP_

#include <string>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"
#include "aset/logic/eval.hpp"
#include "aset/logic/formula.hpp"
#include "aset/smallmaps/map_class.hpp"

namespace aset {

namespace detail {

// Throws unless every quantifier of f ranges along a small map: an
// unbounded one over S needs S -> 1 small, a bounded one over a needs the
// membership relation's projection onto a's sort to be small.
template <Heyting C>
void require_small_quantifiers(const C& c, const MapClass<C>& cls, const logic::Structure<C>& env,
                               const logic::Formula& f, std::vector<logic::SortedVar>& ctx) {
  using logic::Kind;
  const auto& sig = env.signature();
  auto sort_of = [&](const std::string& v) {
    for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
      if (it->name == v) return it->sort;
    throw PreconditionError("unbound variable " + v);
  };
  auto membership_small = [&](const std::string& set_sort) {
    for (std::size_t i = 0; i < sig.relations.size(); ++i) {
      const auto& r = sig.relations[i];
      if (r.name != sig.membership || r.sorts.size() != 2 || !sig.coercible(set_sort, r.sorts[1])) continue;
      auto t = env.tuple_object(r.sorts);
      auto k = c.product(c.product(c.terminal(), env.sort_object(r.sorts[0])).apex, env.sort_object(r.sorts[1]));
      auto proj = c.compose(k.second, c.sub_mono(t, env.relation(i)));
      return cls.contains(c, proj);
    }
    return false;
  };
  auto scoped = [&](std::vector<logic::SortedVar> vars) {
    for (auto& v : vars) ctx.push_back(v);
    require_small_quantifiers(c, cls, env, *f.sub[0], ctx);
    ctx.resize(ctx.size() - vars.size());
  };
  switch (f.kind) {
    case Kind::kForall:
    case Kind::kExists: {
      std::string s = f.sort.empty() ? sig.default_sort : f.sort;
      if (!cls.contains(c, c.to_terminal(env.sort_object(s))))
        throw PreconditionError("quantifier over " + f.var + " : " + s + " does not run along a small map");
      scoped({{f.var, s}});
      return;
    }
    case Kind::kBForall:
    case Kind::kBExists:
    case Kind::kBiquant: {
      std::vector<logic::SortedVar> vars;
      for (auto [x, a] : {std::pair{f.var, f.bound}, std::pair{f.var2, f.bound2}}) {
        if (x.empty()) continue;
        std::string s = sort_of(a);
        if (!membership_small(s))
          throw PreconditionError("membership bounding " + x + " in " + a + " is not small");
        vars.push_back({x, *sig.element_sort(s)});
      }
      scoped(vars);
      return;
    }
    default:
      for (const auto& s : f.sub) require_small_quantifiers(c, cls, env, *s, ctx);
  }
}

}  // namespace detail

/// Separation for bounded formulas: with every quantifier of phi running
/// along a small map, {x | phi(x)} must be a bounded subobject of x's sort,
/// i.e. its inclusion is in the class. Throws PreconditionError when phi is
/// outside the syntactic fragment.
template <Heyting C>
bool bounded_separation_check(const MapClass<C>& cls, const logic::Structure<C>& env, const logic::FormulaPtr& phi,
                              const logic::SortedVar& x) {
  const C& c = env.category();
  logic::check_sorts(*phi, env.signature(), {x});
  std::vector<logic::SortedVar> ctx{x};
  detail::require_small_quantifiers(c, cls, env, *phi, ctx);
  Subset s = logic::kripke_joyal_eval(phi, env, {x});
  // the context object is 1 * X
  auto k = c.product(c.terminal(), env.sort_object(x.sort));
  auto incl = c.compose(k.second, c.sub_mono(k.apex, s));
  return cls.contains(c, incl);
}

}  // namespace aset

#endif  // ASET_SMALLMAPS_SEPARATION_HPP_
