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

#ifndef ASET_CORE_CONCEPTS_HPP_
#define ASET_CORE_CONCEPTS_HPP_

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "aset/core/subset.hpp"

namespace aset {

/// A limit cone over a cospan (or a pair of objects, for products).
/// `first` and `second` are the two projections out of `apex`.
template <class C>
struct Cone {
  typename C::Object apex;
  typename C::Arrow first;
  typename C::Arrow second;
};

/// A binary coproduct with its two injections.
template <class C>
struct Cocone {
  typename C::Object apex;
  typename C::Arrow first;
  typename C::Arrow second;
};

/// f = mono . cover
template <class C>
struct Factorization {
  typename C::Arrow cover;
  typename C::Arrow mono;
};

/// Right adjoint to pullback along f, evaluated at an object p: P -> X over
/// dom(f). `counit` goes from the pullback of `pi` along f (the apex of
/// `along`) to P, over X.
template <class C>
struct PiData {
  typename C::Arrow pi;
  Cone<C> along;
  typename C::Arrow counit;
};

template <class C>
concept Category = std::equality_comparable<typename C::Object> &&
                   std::equality_comparable<typename C::Arrow> &&
                   requires(const C& c, const typename C::Object& x,
                            const typename C::Arrow& f, std::size_t n) {
  { c.name() } -> std::convertible_to<std::string>;
  { c.dom(f) } -> std::convertible_to<typename C::Object>;
  { c.cod(f) } -> std::convertible_to<typename C::Object>;
  { c.identity(x) } -> std::convertible_to<typename C::Arrow>;
  { c.compose(f, f) } -> std::convertible_to<typename C::Arrow>;
  { c.hom(x, x) } -> std::convertible_to<std::vector<typename C::Arrow>>;
  { c.objects(n) } -> std::convertible_to<std::vector<typename C::Object>>;
};

/// Finite limits: terminal object, pullbacks with mediating arrows, and
/// equalizers.
template <class C>
concept Cartesian = Category<C> &&
                    requires(const C& c, const typename C::Object& x,
                             const typename C::Arrow& f, const Cone<C>& k) {
  { c.terminal() } -> std::convertible_to<typename C::Object>;
  { c.to_terminal(x) } -> std::convertible_to<typename C::Arrow>;
  { c.pullback(f, f) } -> std::convertible_to<Cone<C>>;
  { c.product(x, x) } -> std::convertible_to<Cone<C>>;
  { c.mediate(k, f, f) } -> std::convertible_to<typename C::Arrow>;
  { c.equalizer(f, f) } -> std::convertible_to<typename C::Arrow>;
};

template <class C>
concept Regular = Cartesian<C> && requires(const C& c, const typename C::Arrow& f) {
  { c.image(f) } -> std::convertible_to<Factorization<C>>;
  { c.is_cover(f) } -> std::convertible_to<bool>;
  { c.is_mono(f) } -> std::convertible_to<bool>;
};

/// Finite coproducts.
template <class C>
concept Extensive = Category<C> &&
                    requires(const C& c, const typename C::Object& x,
                             const typename C::Arrow& f, const Cocone<C>& k) {
  { c.initial() } -> std::convertible_to<typename C::Object>;
  { c.from_initial(x) } -> std::convertible_to<typename C::Arrow>;
  { c.coproduct(x, x) } -> std::convertible_to<Cocone<C>>;
  { c.copair(k, f, f) } -> std::convertible_to<typename C::Arrow>;
};

/// Objects have a finite, globally numbered set of elements; arrows have
/// fibres that can be counted over those elements.
template <class C>
concept SetLike = Category<C> && requires(const C& c, const typename C::Object& x,
                                          const typename C::Arrow& f) {
  { c.cardinality(x) } -> std::convertible_to<std::size_t>;
  { c.fibre_sizes(f) } -> std::convertible_to<std::vector<std::size_t>>;
  { c.describe(f) } -> std::convertible_to<std::string>;
  { c.describe_object(x) } -> std::convertible_to<std::string>;
};

/// Subobject lattices with canonical keys, pullback f*, and both adjoints
/// exists_f -| f* -| forall_f.
template <class C>
concept Heyting = Regular<C> && Extensive<C> && SetLike<C> &&
                  requires(const C& c, const typename C::Object& x,
                           const typename C::Arrow& f, const Subset& s) {
  { c.subobjects(x) } -> std::convertible_to<std::vector<Subset>>;
  { c.sub_mono(x, s) } -> std::convertible_to<typename C::Arrow>;
  { c.sub_key(f) } -> std::convertible_to<Subset>;
  { c.sub_top(x) } -> std::convertible_to<Subset>;
  { c.sub_bottom(x) } -> std::convertible_to<Subset>;
  { c.sub_leq(x, s, s) } -> std::convertible_to<bool>;
  { c.sub_meet(x, s, s) } -> std::convertible_to<Subset>;
  { c.sub_join(x, s, s) } -> std::convertible_to<Subset>;
  { c.sub_implies(x, s, s) } -> std::convertible_to<Subset>;
  { c.sub_pullback(f, s) } -> std::convertible_to<Subset>;
  { c.sub_exists(f, s) } -> std::convertible_to<Subset>;
  { c.sub_forall(f, s) } -> std::convertible_to<Subset>;
};

/// Quotients of equivalence relations R, given as subobjects of x * x.
template <class C>
concept HasQuotients = requires(const C& c, const typename C::Object& x, const Subset& r) {
  { c.quotient(x, r) } -> std::convertible_to<typename C::Arrow>;
};

/// Dependent products along arrows.
template <class C>
concept HasPi = requires(const C& c, const typename C::Arrow& f) {
  { c.pi_along(f, f) } -> std::convertible_to<PiData<C>>;
};

/// Global points detect covers and isomorphisms fibrewise.
template <class C>
concept WellPointed = requires(const C& c) {
  { C::kWellPointed } -> std::convertible_to<bool>;
} && C::kWellPointed;

}  // namespace aset

#endif  // ASET_CORE_CONCEPTS_HPP_
