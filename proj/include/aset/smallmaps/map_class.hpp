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

#ifndef ASET_SMALLMAPS_MAP_CLASS_HPP_
#define ASET_SMALLMAPS_MAP_CLASS_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"

namespace aset {

/// A decidable class of arrows of C, the candidate class of small maps.
template <class C>
struct MapClass {
  std::string label;
  std::function<bool(const C&, const typename C::Arrow&)> member;

  bool contains(const C& c, const typename C::Arrow& f) const { return member(c, f); }
};

template <class C>
MapClass<C> all_maps() {
  return {"all", [](const C&, const typename C::Arrow&) { return true; }};
}

/// Every fibre over a global element has fewer than k elements.
template <SetLike C>
MapClass<C> fibre_bound(std::size_t k) {
  return {"fibre<" + std::to_string(k), [k](const C& c, const typename C::Arrow& f) {
            auto sizes = c.fibre_sizes(f);
            return std::all_of(sizes.begin(), sizes.end(), [k](std::size_t s) { return s < k; });
          }};
}

template <Regular C>
MapClass<C> monos() {
  return {"mono", [](const C& c, const typename C::Arrow& f) { return c.is_mono(f); }};
}

/// Regression class: the domain has an even number of elements. Stable
/// under pullback along covers in the wrong direction, so (A2) fails.
template <SetLike C>
MapClass<C> even_domain() {
  return {"even-domain",
          [](const C& c, const typename C::Arrow& f) { return c.cardinality(c.dom(f)) % 2 == 0; }};
}

/// Table-driven class: arrows are looked up by their printed form; anything
/// not listed gets `fallback`.
template <SetLike C>
MapClass<C> table_class(std::string label, std::map<std::string, bool> rows, bool fallback) {
  return {std::move(label), [rows = std::move(rows), fallback](const C& c, const typename C::Arrow& f) {
            auto it = rows.find(c.describe(f));
            return it == rows.end() ? fallback : it->second;
          }};
}

/// Built-in classes by name: all, mono, even-domain, fibre<k.
template <Regular C>
  requires SetLike<C>
MapClass<C> class_by_name(const std::string& name) {
  if (name == "all") return all_maps<C>();
  if (name == "mono") return monos<C>();
  if (name == "even-domain") return even_domain<C>();
  const std::string prefix = "fibre<";
  if (name.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    std::size_t k = 0;
    try {
      k = std::stoul(name.substr(prefix.size()), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || prefix.size() + used != name.size()) throw PreconditionError("bad class name: " + name);
    return fibre_bound<C>(k);
  }
  throw PreconditionError("unknown class: " + name);
}

}  // namespace aset

#endif  // ASET_SMALLMAPS_MAP_CLASS_HPP_
