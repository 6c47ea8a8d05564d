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

#ifndef ASET_SMALLMAPS_POWER_HPP_
#define ASET_SMALLMAPS_POWER_HPP_

#include <cstddef>
#include <vector>

#include "aset/core/errors.hpp"
#include "aset/core/subset.hpp"
#include "aset/fincat/finset.hpp"
#include "aset/smallmaps/map_class.hpp"

namespace aset {

/// The small power class of a finite set: its elements are the subsets that
/// are small objects, numbered in increasing bitmask order, and membership
/// is a subset of carrier * power.
struct PowerClassData {
  std::size_t carrier = 0;
  std::size_t power = 0;
  std::vector<std::size_t> subsets;  // bitmask of each element of the power class
  Subset membership;

  std::size_t index_of(std::size_t bits) const {
    for (std::size_t k = 0; k < subsets.size(); ++k)
      if (subsets[k] == bits) return k;
    return npos;
  }
};

inline PowerClassData power_class(const FinSet& c, const MapClass<FinSet>& cls, std::size_t carrier) {
  if (carrier > c.limits().max_subobject_base) throw ResourceBound("power class base too large");
  PowerClassData pc;
  pc.carrier = carrier;
  for (std::size_t bits = 0; bits < (std::size_t{1} << carrier); ++bits) {
    auto n = static_cast<std::size_t>(__builtin_popcountll(bits));
    if (cls.contains(c, c.to_terminal(n))) pc.subsets.push_back(bits);
  }
  pc.power = pc.subsets.size();
  pc.membership.assign(carrier * pc.power, false);
  for (std::size_t i = 0; i < carrier; ++i)
    for (std::size_t k = 0; k < pc.power; ++k) pc.membership[i * pc.power + k] = ((pc.subsets[k] >> i) & 1U) != 0;
  return pc;
}

/// The bounded subobject classifier: the small power class of 1.
inline PowerClassData bounded_truth_values(const FinSet& c, const MapClass<FinSet>& cls) {
  return power_class(c, cls, 1);
}

/// rho: d -> P_s(c) classifying a small relation r on c * d.
inline FinMap classify(const FinSet& c, const MapClass<FinSet>& cls, const PowerClassData& pc, std::size_t d,
                       const Subset& r) {
  if (r.size() != pc.carrier * d) throw PreconditionError("relation has the wrong size");
  Cone<FinSet> cd = c.product(pc.carrier, d);
  if (!cls.contains(c, c.compose(cd.second, c.sub_mono(cd.apex, r))))
    throw PreconditionError("relation is not small");
  FinMap rho{d, pc.power, std::vector<std::size_t>(d, 0)};
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < pc.carrier; ++i)
      if (r[i * d + j]) bits |= std::size_t{1} << i;
    rho.table[j] = pc.index_of(bits);
  }
  return rho;
}

/// Fibred small power class of p: C -> X: over x, the small subsets of the
/// fibre of p at x.
inline FinMap fibred_power(const FinSet& c, const MapClass<FinSet>& cls, const FinMap& p) {
  auto sizes = c.fibre_sizes(p);
  FinMap out{0, p.cod, {}};
  for (std::size_t x = 0; x < p.cod; ++x) {
    std::size_t n = power_class(c, cls, sizes[x]).power;
    out.table.insert(out.table.end(), n, x);
  }
  out.dom = out.table.size();
  return out;
}

}  // namespace aset

#endif  // ASET_SMALLMAPS_POWER_HPP_
