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

#ifndef ASET_SMALLMAPS_CATALOG_HPP_
#define ASET_SMALLMAPS_CATALOG_HPP_

#include <cstddef>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/fincat/finset.hpp"

namespace aset {

/// Every object up to a size bound and every arrow between them, indexed by
/// endpoint. Arrows come out grouped by domain, then codomain, each group in
/// the category's own hom order.
template <Category C>
class Catalog {
 public:
  using Object = typename C::Object;
  using Arrow = typename C::Arrow;

  Catalog(const C& c, std::size_t bound) : objects_(c.objects(bound)) {
    into_.resize(objects_.size());
    out_.resize(objects_.size());
    for (std::size_t i = 0; i < objects_.size(); ++i)
      for (std::size_t j = 0; j < objects_.size(); ++j)
        for (auto& f : c.hom(objects_[i], objects_[j])) {
          out_[i].push_back(arrows_.size());
          into_[j].push_back(arrows_.size());
          dom_.push_back(i);
          cod_.push_back(j);
          arrows_.push_back(std::move(f));
        }
  }

  const std::vector<Object>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t k) const { return arrows_[k]; }
  std::size_t dom_index(std::size_t k) const { return dom_[k]; }
  std::size_t cod_index(std::size_t k) const { return cod_[k]; }

  std::size_t index_of(const Object& x) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
      if (objects_[i] == x) return i;
    return npos;
  }

  /// Arrows from catalog objects into y; y itself need not be catalogued.
  std::vector<Arrow> arrows_into(const C& c, const Object& y) const {
    std::vector<Arrow> out;
    std::size_t j = index_of(y);
    if (j != npos) {
      for (std::size_t k : into_[j]) out.push_back(arrows_[k]);
      return out;
    }
    for (const auto& x : objects_)
      for (auto& f : c.hom(x, y)) out.push_back(std::move(f));
    return out;
  }

  std::vector<Arrow> arrows_out_of(const C& c, const Object& x) const {
    std::vector<Arrow> out;
    std::size_t i = index_of(x);
    if (i != npos) {
      for (std::size_t k : out_[i]) out.push_back(arrows_[k]);
      return out;
    }
    for (const auto& y : objects_)
      for (auto& f : c.hom(x, y)) out.push_back(std::move(f));
    return out;
  }

 private:
  std::vector<Object> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> dom_;
  std::vector<std::size_t> cod_;
  std::vector<std::vector<std::size_t>> into_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace aset

#endif  // ASET_SMALLMAPS_CATALOG_HPP_
