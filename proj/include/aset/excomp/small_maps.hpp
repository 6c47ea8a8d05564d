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

#ifndef ASET_EXCOMP_SMALL_MAPS_HPP_
#define ASET_EXCOMP_SMALL_MAPS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aset/excomp/completion.hpp"
#include "aset/fincat/universal.hpp"
#include "aset/smallmaps/map_class.hpp"

namespace aset::excomp {

/// A square
///
///     yD --top--> B
///     |yf         |g
///     yC --bot--> A
///
/// with both horizontal arrows covers, the square a quasi-pullback and f in
/// the base class.
struct QuasiPullbackWitness {
  FinMap f;
  ExMorphism top;
  ExMorphism bottom;
};

struct WitnessSearch {
  std::optional<QuasiPullbackWitness> witness;
  bool exhausted = true;  // false when the candidate cap was hit
  std::size_t tried = 0;
};

/// Re-checks every condition on a witness from scratch.
inline bool replay(const ExCompletion& e, const MapClass<FinSet>& base, const ExMorphism& g,
                   const QuasiPullbackWitness& w) {
  FinSet sets;
  if (!well_formed(w.f) || !base.contains(sets, w.f)) return false;
  ExMorphism yf = e.embed(w.f);
  if (!(w.top.dom == yf.dom) || !(w.bottom.dom == yf.cod)) return false;
  if (!(w.top.cod == g.dom) || !(w.bottom.cod == g.cod)) return false;
  if (!e.is_functional(w.top) || !e.is_functional(w.bottom)) return false;
  if (!e.is_cover(w.top) || !e.is_cover(w.bottom)) return false;
  return is_quasi_pullback(e, w.top, g, yf, w.bottom);
}

/// Looks for a witness that g is in the completed class.
///
/// Every witness factors through the pullback of g along the bottom cover,
/// so a candidate is a cover c: C ->> A/~ together with a multiplicity >= 1
/// for each point of that pullback. `slack` bounds how far C and the
/// multiplicities may exceed the minimal choice; slack 0 tries only
/// C = A/~ and multiplicity 1, which already decides every class that is
/// closed under shrinking fibres.
inline WitnessSearch find_witness(const ExCompletion& e, const MapClass<FinSet>& base, const ExMorphism& g,
                                  std::size_t slack = 1, std::size_t cap = 1 << 16) {
  FinSet sets;
  WitnessSearch out;
  const FinMap cg = e.class_map(g);
  const std::size_t ka = cg.cod, kb = cg.dom;

  for (std::size_t m = ka; m <= ka + slack; ++m) {
    // covers C ->> A/~ up to relabelling C: fibre sizes >= 1 summing to m
    std::vector<FinMap> covers;
    std::vector<std::size_t> sizes(ka, 1);
    std::function<void(std::size_t, std::size_t)> split = [&](std::size_t j, std::size_t left) {
      if (j + 1 >= ka) {
        if (ka == 0 && left != 0) return;
        if (ka) sizes[j] = 1 + left;
        FinMap c{m, ka, {}};
        for (std::size_t a = 0; a < ka; ++a) c.table.insert(c.table.end(), sizes[a], a);
        covers.push_back(std::move(c));
        return;
      }
      for (std::size_t extra = 0; extra <= left; ++extra) {
        sizes[j] = 1 + extra;
        split(j + 1, left - extra);
      }
    };
    split(0, m - ka);
    for (const FinMap& c : covers) {
      // points of the pullback: (i, b) with cg(b) == c(i)
      std::vector<std::pair<std::size_t, std::size_t>> pts;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t b = 0; b < kb; ++b)
          if (cg.table[b] == c.table[i]) pts.emplace_back(i, b);
      std::vector<std::size_t> mult(pts.size(), 1);
      const std::size_t top_mult = 1 + (slack > m - ka ? slack - (m - ka) : 0);
      for (;;) {
        if (++out.tried > cap) {
          out.exhausted = false;
          return out;
        }
        FinMap f{0, m, {}};
        std::vector<std::size_t> d;
        for (std::size_t p = 0; p < pts.size(); ++p)
          for (std::size_t r = 0; r < mult[p]; ++r) {
            f.table.push_back(pts[p].first);
            d.push_back(pts[p].second);
          }
        f.dom = f.table.size();
        if (base.contains(sets, f)) {
          ExObject yd = e.embed(f.dom), yc = e.embed(m);
          FinMap dtop{f.dom, kb, d}, cbot{m, ka, c.table};
          QuasiPullbackWitness w{f, e.from_class_map(yd, g.dom, dtop), e.from_class_map(yc, g.cod, cbot)};
          if (replay(e, base, g, w)) {
            out.witness = std::move(w);
            return out;
          }
        }
        std::size_t p = 0;
        while (p < mult.size() && mult[p] == top_mult) mult[p++] = 1;
        if (p == mult.size()) break;
        ++mult[p];
      }
    }
  }
  return out;
}

/// The completed class: arrows with a witness within the given slack.
inline MapClass<ExCompletion> completed_class(const MapClass<FinSet>& base, std::size_t slack = 1) {
  return {"ybar(" + base.label + ")", [base, slack](const ExCompletion& e, const ExMorphism& g) {
            return find_witness(e, base, g, slack).witness.has_value();
          }};
}

}  // namespace aset::excomp

#endif  // ASET_EXCOMP_SMALL_MAPS_HPP_
