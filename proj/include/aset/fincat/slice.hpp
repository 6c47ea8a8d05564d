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

#ifndef ASET_FINCAT_SLICE_HPP_
#define ASET_FINCAT_SLICE_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"
#include "aset/fincat/universal.hpp"

namespace aset {

template <class C>
struct SliceArrow {
  typename C::Arrow dom;  // structure map of the source
  typename C::Arrow cod;  // structure map of the target
  typename C::Arrow map;

  friend bool operator==(const SliceArrow&, const SliceArrow&) = default;
};

/// The slice C/X. Objects are arrows into X; limits, images and subobjects
/// are those of C, coproducts are copaired over X.
template <Heyting C>
class Slice {
 public:
  using Base = C;
  using Object = typename C::Arrow;
  using Arrow = SliceArrow<C>;
  static constexpr bool kWellPointed = false;

  Slice(C base, typename C::Object over) : base_(std::move(base)), over_(std::move(over)) {}

  const C& base() const { return base_; }
  const typename C::Object& over() const { return over_; }
  std::string name() const { return base_.name() + "/" + base_.describe_object(over_); }

  Object dom(const Arrow& f) const { return f.dom; }
  Object cod(const Arrow& f) const { return f.cod; }
  Arrow identity(const Object& p) const { return {p, p, base_.identity(base_.dom(p))}; }

  Arrow compose(const Arrow& g, const Arrow& f) const {
    if (!(f.cod == g.dom)) throw CompositionError("slice arrows are not composable");
    return {f.dom, g.cod, base_.compose(g.map, f.map)};
  }

  Arrow make(const Object& p, const Object& q, const typename C::Arrow& h) const {
    if (!(base_.compose(q, h) == p)) throw PreconditionError("arrow does not commute over the base");
    return {p, q, h};
  }

  std::vector<Arrow> hom(const Object& p, const Object& q) const {
    std::vector<Arrow> out;
    for (const auto& h : base_.hom(base_.dom(p), base_.dom(q)))
      if (base_.compose(q, h) == p) out.push_back({p, q, h});
    return out;
  }

  std::vector<Object> objects(std::size_t bound) const {
    std::vector<Object> out;
    for (const auto& a : base_.objects(bound))
      for (const auto& p : base_.hom(a, over_)) out.push_back(p);
    return out;
  }

  Object terminal() const { return base_.identity(over_); }
  Arrow to_terminal(const Object& p) const { return {p, terminal(), p}; }

  Cone<Slice> pullback(const Arrow& f, const Arrow& g) const {
    Cone<C> k = base_.pullback(f.map, g.map);
    Object apex = base_.compose(f.dom, k.first);
    return {apex, Arrow{apex, f.dom, k.first}, Arrow{apex, g.dom, k.second}};
  }

  Cone<Slice> product(const Object& p, const Object& q) const {
    return pullback(to_terminal(p), to_terminal(q));
  }

  Arrow mediate(const Cone<Slice>& cone, const Arrow& f, const Arrow& g) const {
    Cone<C> k{base_.dom(cone.apex), cone.first.map, cone.second.map};
    return {f.dom, cone.apex, base_.mediate(k, f.map, g.map)};
  }

  Arrow equalizer(const Arrow& f, const Arrow& g) const {
    auto m = base_.equalizer(f.map, g.map);
    return {base_.compose(f.dom, m), f.dom, m};
  }

  bool is_mono(const Arrow& f) const { return base_.is_mono(f.map); }
  bool is_cover(const Arrow& f) const { return base_.is_cover(f.map); }

  Factorization<Slice> image(const Arrow& f) const {
    auto fac = base_.image(f.map);
    Object mid = base_.compose(f.cod, fac.mono);
    return {Arrow{f.dom, mid, fac.cover}, Arrow{mid, f.cod, fac.mono}};
  }

  Object initial() const { return base_.from_initial(over_); }
  Arrow from_initial(const Object& p) const { return {initial(), p, base_.from_initial(base_.dom(p))}; }

  Cocone<Slice> coproduct(const Object& p, const Object& q) const {
    Cocone<C> k = base_.coproduct(base_.dom(p), base_.dom(q));
    Object s = base_.copair(k, p, q);
    return {s, Arrow{p, s, k.first}, Arrow{q, s, k.second}};
  }

  Arrow copair(const Cocone<Slice>& k, const Arrow& f, const Arrow& g) const {
    Cocone<C> b{base_.dom(k.apex), k.first.map, k.second.map};
    return {k.apex, f.cod, base_.copair(b, f.map, g.map)};
  }

  // Subobjects of p are the subobjects of its domain.
  std::vector<Subset> subobjects(const Object& p) const { return base_.subobjects(base_.dom(p)); }
  Arrow sub_mono(const Object& p, const Subset& s) const {
    auto m = base_.sub_mono(base_.dom(p), s);
    return {base_.compose(p, m), p, m};
  }
  Subset sub_key(const Arrow& m) const { return base_.sub_key(m.map); }
  Subset sub_top(const Object& p) const { return base_.sub_top(base_.dom(p)); }
  Subset sub_bottom(const Object& p) const { return base_.sub_bottom(base_.dom(p)); }
  bool sub_leq(const Object& p, const Subset& a, const Subset& b) const {
    return base_.sub_leq(base_.dom(p), a, b);
  }
  Subset sub_meet(const Object& p, const Subset& a, const Subset& b) const {
    return base_.sub_meet(base_.dom(p), a, b);
  }
  Subset sub_join(const Object& p, const Subset& a, const Subset& b) const {
    return base_.sub_join(base_.dom(p), a, b);
  }
  Subset sub_implies(const Object& p, const Subset& a, const Subset& b) const {
    return base_.sub_implies(base_.dom(p), a, b);
  }
  Subset sub_pullback(const Arrow& f, const Subset& s) const { return base_.sub_pullback(f.map, s); }
  Subset sub_exists(const Arrow& f, const Subset& s) const { return base_.sub_exists(f.map, s); }
  Subset sub_forall(const Arrow& f, const Subset& s) const { return base_.sub_forall(f.map, s); }

  std::size_t cardinality(const Object& p) const { return base_.cardinality(base_.dom(p)); }
  std::vector<std::size_t> fibre_sizes(const Arrow& f) const { return base_.fibre_sizes(f.map); }
  std::string describe(const Arrow& f) const { return base_.describe(f.map); }
  std::string describe_object(const Object& p) const { return "[" + base_.describe(p) + "]"; }

  /// Quotient of p by r, a relation on the slice product p *_X p. The
  /// relation is moved into the base product, quotiented there, and the
  /// structure map is recovered by factoring p through the quotient.
  Arrow quotient(const Object& p, const Subset& r) const
    requires HasQuotients<C>
  {
    Cone<C> fibred = base_.pullback(p, p);
    auto into = pair(base_, fibred.first, fibred.second);
    auto m = base_.sub_mono(fibred.apex, r);
    Subset rel = base_.sub_exists(base_.compose(into, m), base_.sub_top(base_.dom(m)));
    auto q = base_.quotient(base_.dom(p), rel);
    for (const auto& h : base_.hom(base_.cod(q), over_))
      if (base_.compose(h, q) == p) return {p, h, q};
    throw PreconditionError("relation is not contained in the kernel of the structure map");
  }

 private:
  C base_;
  typename C::Object over_;
};

}  // namespace aset

#endif  // ASET_FINCAT_SLICE_HPP_
