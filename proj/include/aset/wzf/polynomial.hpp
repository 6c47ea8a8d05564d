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

#ifndef ASET_WZF_POLYNOMIAL_HPP_
#define ASET_WZF_POLYNOMIAL_HPP_

#include <cstddef>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"

namespace aset::wzf {

/// The polynomial functor of f: X -> Y, Z |-> Sum_y Z^(X_y).
template <Category C>
struct PolynomialSignature {
  typename C::Arrow f;

  /// Arity of each constructor y, i.e. the size of the fibre of f over y.
  std::vector<std::size_t> arities(const C& c) const
    requires SetLike<C>
  {
    return c.fibre_sizes(f);
  }
};

/// P_f(Z) with its projection to Y.
template <Category C>
struct PolynomialValue {
  typename C::Object object;
  typename C::Arrow over;  // P_f(Z) -> Y
};

/// P_f(Z) = Sum_Y Pi_f X*(Z), computed through the category's own pullback
/// and Pi: pull Z back to X as the projection X * Z -> X, take Pi along f,
/// then forget the map to Y.
template <class C>
  requires Cartesian<C> && HasPi<C>
PolynomialValue<C> polynomial_apply(const C& c, const PolynomialSignature<C>& sig, const typename C::Object& z) {
  Cone<C> xz = c.product(c.dom(sig.f), z);
  PiData<C> pd = c.pi_along(sig.f, xz.first);
  return {c.dom(pd.pi), pd.pi};
}

}  // namespace aset::wzf

#endif  // ASET_WZF_POLYNOMIAL_HPP_
