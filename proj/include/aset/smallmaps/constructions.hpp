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

#ifndef ASET_SMALLMAPS_CONSTRUCTIONS_HPP_
#define ASET_SMALLMAPS_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"
#include "aset/fincat/slice.hpp"
#include "aset/fincat/universal.hpp"
#include "aset/smallmaps/axioms.hpp"
#include "aset/smallmaps/catalog.hpp"
#include "aset/smallmaps/map_class.hpp"

namespace aset {

/// The induced class on C/X: an arrow of the slice is small when its
/// underlying arrow (its image under Sigma_X) is.
template <Heyting C>
MapClass<Slice<C>> slice_class(const MapClass<C>& cls, const Slice<C>& slice) {
  return {cls.label + "/" + slice.base().describe_object(slice.over()),
          [cls, base = slice.base()](const Slice<C>&, const SliceArrow<C>& f) { return cls.contains(base, f.map); }};
}

/// Pi_f(p) for a small f, with the adjunction verified against the given
/// test objects before it is returned.
template <Heyting C>
  requires HasPi<C>
PiData<C> pi_along(const C& c, const MapClass<C>& cls, const typename C::Arrow& f, const typename C::Arrow& p,
                   const std::vector<typename C::Object>& tests) {
  if (!cls.contains(c, f)) throw PreconditionError("pi_along: " + c.describe(f) + " is not small");
  auto pd = c.pi_along(f, p);
  if (!verify_pi(c, f, p, pd, tests)) throw Error("pi_along: adjunction failed on a test object");
  return pd;
}

/// The full subcategory of small objects: same arrows, catalog restricted
/// to objects X with X -> 1 small.
template <Heyting C>
class SmallObjects {
 public:
  SmallObjects(const C& c, MapClass<C> cls) : c_(c), cls_(std::move(cls)) {}

  bool is_small(const typename C::Object& x) const { return cls_.contains(c_, c_.to_terminal(x)); }

  std::vector<typename C::Object> objects(std::size_t bound) const {
    std::vector<typename C::Object> out;
    for (const auto& x : c_.objects(bound))
      if (is_small(x)) out.push_back(x);
    return out;
  }

  const C& ambient() const { return c_; }
  const MapClass<C>& map_class() const { return cls_; }

 private:
  const C& c_;
  MapClass<C> cls_;
};

struct PretoposCheck {
  std::string name;
  bool holds = true;
  std::string witness;  // first offending construction, if any
};

/// Closure of the small objects under the Heyting pretopos structure,
/// checked on every catalogued small object (and arrow between them).
template <Heyting C>
std::vector<PretoposCheck> pretopos_report(const C& c, const MapClass<C>& cls, std::size_t bound) {
  SmallObjects<C> s(c, cls);
  auto objs = s.objects(bound);
  std::vector<PretoposCheck> out;
  auto record = [&](const std::string& name, auto&& body) {
    PretoposCheck chk{name, true, ""};
    body(chk);
    out.push_back(chk);
  };
  auto fail = [&](PretoposCheck& chk, const typename C::Object& x) {
    if (!chk.holds) return;
    chk.holds = false;
    chk.witness = c.describe_object(x);
  };
  record("terminal", [&](PretoposCheck& chk) {
    if (!s.is_small(c.terminal())) fail(chk, c.terminal());
  });
  record("initial", [&](PretoposCheck& chk) {
    if (!s.is_small(c.initial())) fail(chk, c.initial());
  });
  record("binary products", [&](PretoposCheck& chk) {
    for (const auto& x : objs)
      for (const auto& y : objs)
        if (auto p = c.product(x, y).apex; !s.is_small(p)) fail(chk, p);
  });
  record("binary coproducts", [&](PretoposCheck& chk) {
    for (const auto& x : objs)
      for (const auto& y : objs)
        if (auto k = c.coproduct(x, y).apex; !s.is_small(k)) fail(chk, k);
  });
  record("pullbacks, equalizers and images", [&](PretoposCheck& chk) {
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const auto& f : c.hom(x, y)) {
          if (auto im = c.dom(c.image(f).mono); !s.is_small(im)) fail(chk, im);
          for (const auto& g : c.hom(x, y))
            if (auto e = c.dom(c.equalizer(f, g)); !s.is_small(e)) fail(chk, e);
          for (const auto& z : objs)
            for (const auto& g : c.hom(z, y))
              if (auto p = c.pullback(f, g).apex; !s.is_small(p)) fail(chk, p);
        }
  });
  record("subobjects", [&](PretoposCheck& chk) {
    for (const auto& x : objs)
      for (const auto& sub : c.subobjects(x))
        if (auto d = c.dom(c.sub_mono(x, sub)); !s.is_small(d)) fail(chk, d);
  });
  if constexpr (HasQuotients<C>) {
    record("quotients of equivalence relations", [&](PretoposCheck& chk) {
      for (const auto& x : objs) {
        Cone<C> xx = c.product(x, x);
        for (const auto& r : c.subobjects(xx.apex))
          if (is_equivalence_relation(c, x, r))
            if (auto q = c.cod(c.quotient(x, r)); !s.is_small(q)) fail(chk, q);
      }
    });
  }
  if constexpr (HasPi<C>) {
    // exponentials y^x as Pi along x -> 1 of the projection x * y -> x
    record("exponentials", [&](PretoposCheck& chk) {
      for (const auto& x : objs)
        for (const auto& y : objs) {
          Cone<C> xy = c.product(x, y);
          auto e = c.dom(c.pi_along(c.to_terminal(x), xy.first).pi);
          if (!s.is_small(e)) fail(chk, e);
        }
    });
  }
  return out;
}

}  // namespace aset

#endif  // ASET_SMALLMAPS_CONSTRUCTIONS_HPP_
