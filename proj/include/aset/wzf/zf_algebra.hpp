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

#ifndef ASET_WZF_ZF_ALGEBRA_HPP_
#define ASET_WZF_ZF_ALGEBRA_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aset/core/errors.hpp"
#include "aset/fincat/finset.hpp"

namespace aset::wzf {

/// The rank-n stage V_n of the cumulative hierarchy, as a ZF-algebra
/// approximation: elements are hereditarily finite sets of rank < n,
/// ordered by inclusion, with successor x |-> {x} and unions as sups.
///
/// Elements are numbered by stage: V_k occupies indices [0, |V_k|) for
/// every k <= n, and within V_{k+1} \ V_k sets are listed by the bitmask of
/// their members over V_k.
class VApprox {
 public:
  std::size_t rank() const { return stage_sizes_.size() - 1; }
  std::size_t size() const { return members_.size(); }
  /// |V_k| for k <= rank
  std::size_t stage_size(std::size_t k) const { return stage_sizes_.at(k); }
  const std::vector<std::size_t>& stage_sizes() const { return stage_sizes_; }

  /// Sorted member indices.
  const std::vector<std::size_t>& members(std::size_t x) const { return members_.at(x); }

  /// Least k with x in V_k.
  std::size_t stage_of(std::size_t x) const {
    for (std::size_t k = 0; k < stage_sizes_.size(); ++k)
      if (x < stage_sizes_[k]) return k;
    throw PreconditionError("not an element");
  }

  /// Direct (extensional) membership.
  bool contains(std::size_t y, std::size_t x) const {
    const auto& m = members_.at(y);
    return std::binary_search(m.begin(), m.end(), x);
  }

  bool leq(std::size_t x, std::size_t y) const {
    const auto& a = members_.at(x);
    const auto& b = members_.at(y);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  /// {x}, which exists in V_n only when x has rank below n - 1.
  std::optional<std::size_t> successor(std::size_t x) const { return find({x}); }

  /// Union of the given elements, if it is in the table.
  std::optional<std::size_t> sup(const std::vector<std::size_t>& xs) const {
    std::vector<std::size_t> u;
    for (std::size_t x : xs) u.insert(u.end(), members_.at(x).begin(), members_.at(x).end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return find(u);
  }

  /// x eps y  iff  s(x) <= y
  bool epsilon(std::size_t x, std::size_t y) const {
    auto s = successor(x);
    return s && leq(*s, y);
  }

  std::optional<std::size_t> find(const std::vector<std::size_t>& sorted_members) const {
    auto it = index_.find(sorted_members);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Braces notation: {}, {{}}, {{}, {{}}}, ...
  std::string show(std::size_t x) const {
    std::string s = "{";
    const auto& m = members_.at(x);
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? ", " : "") + show(m[i]);
    return s + "}";
  }

  /// Membership eps as a subset of V * V, numbered x * |V| + y.
  Subset membership_relation() const {
    const std::size_t n = size();
    Subset r(n * n, false);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) r[x * n + y] = epsilon(x, y);
    return r;
  }

  friend VApprox build_V(std::size_t, std::size_t);

 private:
  std::vector<std::vector<std::size_t>> members_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
  std::vector<std::size_t> stage_sizes_;
};

/// V_0 = {}, V_{k+1} = all subsets of V_k. Throws ResourceBound when a
/// stage would exceed max_elements.
inline VApprox build_V(std::size_t n, std::size_t max_elements = std::size_t{1} << 16) {
  VApprox v;
  v.stage_sizes_.push_back(0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t prev = v.size();
    if (prev >= 8 * sizeof(std::size_t) - 1 || (std::size_t{1} << prev) > max_elements)
      throw ResourceBound("V_" + std::to_string(k + 1) + " would have 2^" + std::to_string(prev) + " elements");
    const std::size_t next = std::size_t{1} << prev;
    for (std::size_t mask = 0; mask < next; ++mask) {
      std::vector<std::size_t> m;
      for (std::size_t j = 0; j < prev; ++j)
        if ((mask >> j) & 1U) m.push_back(j);
      if (v.index_.count(m)) continue;  // already in an earlier stage
      v.index_.emplace(m, v.members_.size());
      v.members_.push_back(std::move(m));
    }
    v.stage_sizes_.push_back(v.size());
  }
  return v;
}

}  // namespace aset::wzf

#endif  // ASET_WZF_ZF_ALGEBRA_HPP_
