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

// Subobjects of the terminal presheaf on 0 -> 1 form the three-element
// chain 0 < {0} < {0,1}. Excluded middle fails for the middle element,
// and sheafifying for the cover {u} of 1 collapses the chain to two
// points again.

#include <iostream>

#include "aset/fincat/lattice.hpp"
#include "aset/sheaves/sheaf_category.hpp"
#include "aset/sheaves/sheafify.hpp"

using namespace aset;

int main() {
  PresheafCategory psh(FiniteCategory::arrow_category());
  const auto one = psh.terminal();
  SubobjectLattice<PresheafCategory> lat(psh, one);
  std::cout << "Sub(1) in presheaves has " << lat.size() << " elements\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const std::size_t not_i = lat.negate(i);
    std::cout << "  " << to_string(lat.element(i)) << "  not: " << to_string(lat.element(not_i))
              << "  not not: " << to_string(lat.element(lat.negate(not_i)))
              << "  p or not p is top: " << (lat.join(i, not_i) == lat.top() ? "yes" : "no") << "\n";
  }
  std::cout << "boolean: " << (lat.is_boolean() ? "yes" : "no") << "\n\n";

  auto site = sheaves::arrow_site();
  sheaves::SheafCategory sh(site);
  SubobjectLattice<sheaves::SheafCategory> closed(sh, sh.terminal());
  std::cout << "Sub(1) in sheaves has " << closed.size() << " elements, boolean: "
            << (closed.is_boolean() ? "yes" : "no") << "\n\n";

  // X(1) = 3 points over X(0) = 1 point is not a sheaf; its sheafification
  // keeps one point at 1
  Presheaf fat = psh.make({1, 3}, {{"u", {0, 0, 0}}});
  auto a = sheaves::sheafify(site, fat);
  std::cout << "sheafify " << psh.describe_object(fat) << "\n      -> " << psh.describe_object(a.sheaf) << "\n";
}
