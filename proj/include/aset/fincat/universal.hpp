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

#ifndef ASET_FINCAT_UNIVERSAL_HPP_
#define ASET_FINCAT_UNIVERSAL_HPP_

#include <cstddef>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"

// Derived constructions and universal-property checks that only use the
// category interface.

namespace aset {

enum class SearchResult { kHolds, kFails, kInconclusive };

inline const char* to_string(SearchResult r) {
  switch (r) {
    case SearchResult::kHolds: return "holds";
    case SearchResult::kFails: return "fails";
    case SearchResult::kInconclusive: return "inconclusive";
  }
  return "?";
}

template <Regular C>
bool is_iso(const C& c, const typename C::Arrow& f) {
  return c.is_mono(f) && c.is_cover(f);
}

/// right . top == bottom . left
template <Category C>
bool commutes(const C& c, const typename C::Arrow& top, const typename C::Arrow& right,
              const typename C::Arrow& left, const typename C::Arrow& bottom) {
  if (c.cod(top) != c.dom(right) || c.cod(left) != c.dom(bottom) || c.dom(top) != c.dom(left) ||
      c.cod(right) != c.cod(bottom))
    return false;
  return c.compose(right, top) == c.compose(bottom, left);
}

/// The comparison arrow from the corner of a commuting square into the
/// pullback of its right and bottom edges.
template <Cartesian C>
typename C::Arrow square_comparison(const C& c, const typename C::Arrow& top,
                                    const typename C::Arrow& right, const typename C::Arrow& left,
                                    const typename C::Arrow& bottom) {
  Cone<C> cone = c.pullback(right, bottom);
  return c.mediate(cone, top, left);
}

template <Regular C>
bool is_pullback_square(const C& c, const typename C::Arrow& top, const typename C::Arrow& right,
                        const typename C::Arrow& left, const typename C::Arrow& bottom) {
  if (!commutes(c, top, right, left, bottom)) return false;
  return is_iso(c, square_comparison(c, top, right, left, bottom));
}

/// A commuting square whose comparison arrow into the inscribed pullback is
/// a cover.
template <Regular C>
bool is_quasi_pullback(const C& c, const typename C::Arrow& top, const typename C::Arrow& right,
                       const typename C::Arrow& left, const typename C::Arrow& bottom) {
  if (!commutes(c, top, right, left, bottom)) return false;
  return c.is_cover(square_comparison(c, top, right, left, bottom));
}

/// All h: dom(f) -> apex with first . h = f and second . h = g, by search.
template <Category C>
std::vector<typename C::Arrow> find_mediating(const C& c, const Cone<C>& cone,
                                              const typename C::Arrow& f,
                                              const typename C::Arrow& g) {
  std::vector<typename C::Arrow> out;
  for (const auto& h : c.hom(c.dom(f), cone.apex))
    if (c.compose(cone.first, h) == f && c.compose(cone.second, h) == g) out.push_back(h);
  return out;
}

/// Checks the universal property of a cone over the cospan (f, g) against
/// every competing cone with apex in `tests`. Gives up with kInconclusive
/// once more than `ceiling` candidate arrows have been examined.
template <Category C>
SearchResult verify_pullback(const C& c, const typename C::Arrow& f, const typename C::Arrow& g,
                             const Cone<C>& cone, const std::vector<typename C::Object>& tests,
                             std::size_t ceiling) {
  if (!commutes(c, cone.first, f, cone.second, g)) return SearchResult::kFails;
  std::size_t spent = 0;
  for (const auto& z : tests) {
    auto us = c.hom(z, c.dom(f));
    auto vs = c.hom(z, c.dom(g));
    auto hs = c.hom(z, cone.apex);
    for (const auto& u : us)
      for (const auto& v : vs) {
        if (c.compose(f, u) != c.compose(g, v)) continue;
        std::size_t found = 0;
        for (const auto& h : hs) {
          if (++spent > ceiling) return SearchResult::kInconclusive;
          if (c.compose(cone.first, h) == u && c.compose(cone.second, h) == v) ++found;
        }
        if (found != 1) return SearchResult::kFails;
      }
  }
  return SearchResult::kHolds;
}

/// <f, g>: Z -> cod(f) * cod(g)
template <Cartesian C>
typename C::Arrow pair(const C& c, const typename C::Arrow& f, const typename C::Arrow& g) {
  return c.mediate(c.product(c.cod(f), c.cod(g)), f, g);
}

/// f * g between canonical products.
template <Cartesian C>
typename C::Arrow arrow_product(const C& c, const typename C::Arrow& f,
                                const typename C::Arrow& g) {
  Cone<C> src = c.product(c.dom(f), c.dom(g));
  Cone<C> dst = c.product(c.cod(f), c.cod(g));
  return c.mediate(dst, c.compose(f, src.first), c.compose(g, src.second));
}

template <Cartesian C>
typename C::Arrow diagonal(const C& c, const typename C::Object& x) {
  return pair(c, c.identity(x), c.identity(x));
}

/// f + g between canonical coproducts.
template <Extensive C>
typename C::Arrow sum_arrow(const C& c, const typename C::Arrow& f, const typename C::Arrow& g) {
  Cocone<C> src = c.coproduct(c.dom(f), c.dom(g));
  Cocone<C> dst = c.coproduct(c.cod(f), c.cod(g));
  return c.copair(src, c.compose(dst.first, f), c.compose(dst.second, g));
}

/// The kernel pair of q as a subobject of dom(q) * dom(q).
template <Heyting C>
Subset kernel_pair(const C& c, const typename C::Arrow& q) {
  Cone<C> k = c.pullback(q, q);
  return c.sub_key(pair(c, k.first, k.second));
}

/// Relational composite s . r of r on x * y and s on y * z, as a subobject
/// of x * z: the image of the pullback of the two relations over y.
template <Heyting C>
Subset relation_compose(const C& c, const typename C::Object& x, const typename C::Object& y,
                        const typename C::Object& z, const Subset& r, const Subset& s) {
  Cone<C> xy = c.product(x, y);
  Cone<C> yz = c.product(y, z);
  auto mr = c.sub_mono(xy.apex, r);
  auto ms = c.sub_mono(yz.apex, s);
  Cone<C> over = c.pullback(c.compose(xy.second, mr), c.compose(yz.first, ms));
  auto to_x = c.compose(xy.first, c.compose(mr, over.first));
  auto to_z = c.compose(yz.second, c.compose(ms, over.second));
  return c.sub_exists(pair(c, to_x, to_z), c.sub_top(over.apex));
}

/// The converse of r on x * y, as a subobject of y * x.
template <Heyting C>
Subset relation_converse(const C& c, const typename C::Object& x, const typename C::Object& y,
                         const Subset& r) {
  Cone<C> xy = c.product(x, y);
  auto swap = pair(c, xy.second, xy.first);
  return c.sub_exists(swap, r);
}

template <Heyting C>
bool is_equivalence_relation(const C& c, const typename C::Object& x, const Subset& r) {
  Cone<C> xx = c.product(x, x);
  if (!c.sub_leq(xx.apex, c.sub_key(diagonal(c, x)), r)) return false;
  if (!c.sub_leq(xx.apex, relation_converse(c, x, x, r), r)) return false;
  return c.sub_leq(xx.apex, relation_compose(c, x, x, x, r, r), r);
}

}  // namespace aset

#endif  // ASET_FINCAT_UNIVERSAL_HPP_
