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

#ifndef ASET_CORE_SUBSET_HPP_
#define ASET_CORE_SUBSET_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace aset {

// Canonical subobject key. Every concrete category in this library is
// set-like: an object has a finite set of (possibly sorted) elements with a
// fixed global numbering, and a subobject is identified by the subset of
// elements it contains.
using Subset = std::vector<bool>;

inline Subset full_subset(std::size_t n) { return Subset(n, true); }
inline Subset empty_subset(std::size_t n) { return Subset(n, false); }

inline std::size_t count(const Subset& s) {
  std::size_t n = 0;
  for (bool b : s) n += b ? 1 : 0;
  return n;
}

inline bool is_subset(const Subset& a, const Subset& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

inline Subset intersect(const Subset& a, const Subset& b) {
  Subset r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && b[i];
  return r;
}

inline Subset unite(const Subset& a, const Subset& b) {
  Subset r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] || b[i];
  return r;
}

inline Subset complement(const Subset& a) {
  Subset r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = !a[i];
  return r;
}

inline bool is_full(const Subset& a) {
  for (bool b : a)
    if (!b) return false;
  return true;
}

inline bool is_empty(const Subset& a) {
  for (bool b : a)
    if (b) return false;
  return true;
}

inline std::vector<std::size_t> members(const Subset& a) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) r.push_back(i);
  return r;
}

inline Subset subset_from_bits(std::size_t n, unsigned long long bits) {
  Subset r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = ((bits >> i) & 1ULL) != 0;
  return r;
}

inline std::string to_string(const Subset& a) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace aset

#endif  // ASET_CORE_SUBSET_HPP_
