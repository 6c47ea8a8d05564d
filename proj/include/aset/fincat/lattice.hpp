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

#ifndef ASET_FINCAT_LATTICE_HPP_
#define ASET_FINCAT_LATTICE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"
#include "aset/fincat/finset.hpp"

namespace aset {

/// The subobject lattice of an object, tabulated from the order alone.
///
/// Elements are the category's canonical subobject keys. Meets, joins and
/// the Heyting implication are found by searching the order relation, so
/// they are independent of the category's own sub_meet / sub_join /
/// sub_implies and can be used to cross-check them.
template <Heyting C>
class SubobjectLattice {
 public:
  using Object = typename C::Object;

  SubobjectLattice(const C& c, const Object& base, std::size_t max_elements = 256)
      : base_(base), elements_(c.subobjects(base)) {
    const std::size_t n = elements_.size();
    if (n > max_elements)
      throw ResourceBound("subobject lattice of " + c.describe_object(base) + " has " +
                          std::to_string(n) + " elements");
    for (std::size_t i = 0; i < n; ++i) index_[elements_[i]] = i;
    order_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) order_[i * n + j] = c.sub_leq(base, elements_[i], elements_[j]);
    top_ = extreme(true);
    bottom_ = extreme(false);
    meet_.assign(n * n, npos);
    join_.assign(n * n, npos);
    implies_.assign(n * n, npos);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        meet_[i * n + j] = bound(i, j, /*lower=*/true);
        join_[i * n + j] = bound(i, j, /*lower=*/false);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // greatest k with k /\ i <= j
        std::vector<std::size_t> candidates;
        for (std::size_t k = 0; k < n; ++k)
          if (leq(meet(k, i), j)) candidates.push_back(k);
        implies_[i * n + j] = greatest(candidates, "implication");
      }
  }

  const Object& base() const { return base_; }
  std::size_t size() const { return elements_.size(); }
  const Subset& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Subset>& elements() const { return elements_; }

  std::size_t index_of(const Subset& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw PreconditionError("not a canonical subobject: " + to_string(s));
    return it->second;
  }

  bool contains(const Subset& s) const { return index_.count(s) != 0; }

  bool leq(std::size_t i, std::size_t j) const { return order_[i * size() + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  std::size_t implies(std::size_t i, std::size_t j) const { return implies_[i * size() + j]; }
  std::size_t negate(std::size_t i) const { return implies(i, bottom_); }
  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }

  /// S /\ T <= U  iff  S <= (T => U), for every triple.
  bool satisfies_heyting_adjunction() const {
    const std::size_t n = size();
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t u = 0; u < n; ++u)
          if (leq(meet(s, t), u) != leq(s, implies(t, u))) return false;
    return true;
  }

  bool is_boolean() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (negate(negate(i)) != i) return false;
    return true;
  }

 private:
  std::size_t extreme(bool top) const {
    std::vector<std::size_t> all(size());
    for (std::size_t i = 0; i < size(); ++i) all[i] = i;
    return top ? greatest(all, "top") : least(all, "bottom");
  }

  std::size_t bound(std::size_t i, std::size_t j, bool lower) const {
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < size(); ++k) {
      bool ok = lower ? (leq(k, i) && leq(k, j)) : (leq(i, k) && leq(j, k));
      if (ok) candidates.push_back(k);
    }
    return lower ? greatest(candidates, "meet") : least(candidates, "join");
  }

  std::size_t greatest(const std::vector<std::size_t>& xs, const char* what) const {
    for (std::size_t k : xs) {
      bool above_all = true;
      for (std::size_t m : xs) above_all = above_all && leq(m, k);
      if (above_all) return k;
    }
    throw Error(std::string("subobject order has no ") + what);
  }

  std::size_t least(const std::vector<std::size_t>& xs, const char* what) const {
    for (std::size_t k : xs) {
      bool below_all = true;
      for (std::size_t m : xs) below_all = below_all && leq(k, m);
      if (below_all) return k;
    }
    throw Error(std::string("subobject order has no ") + what);
  }

  Object base_;
  std::vector<Subset> elements_;
  std::map<Subset, std::size_t> index_;
  std::vector<bool> order_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> implies_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
};

/// Universal quantification along f: X -> Y computed from the Galois
/// connection: the join of every T in Sub(Y) with f*T <= S. Throws if that
/// join does not itself satisfy f*T <= S (no right adjoint).
template <Heyting C>
Subset forall_along(const C& c, const typename C::Arrow& f, const Subset& s,
                    std::size_t max_elements = 256) {
  SubobjectLattice<C> sub_y(c, c.cod(f), max_elements);
  const auto x = c.dom(f);
  std::size_t acc = sub_y.bottom();
  for (std::size_t t = 0; t < sub_y.size(); ++t)
    if (c.sub_leq(x, c.sub_pullback(f, sub_y.element(t)), s)) acc = sub_y.join(acc, t);
  if (!c.sub_leq(x, c.sub_pullback(f, sub_y.element(acc)), s))
    throw UnsupportedStructure("pullback along " + c.describe(f) + " has no right adjoint here");
  return sub_y.element(acc);
}

}  // namespace aset

#endif  // ASET_FINCAT_LATTICE_HPP_
