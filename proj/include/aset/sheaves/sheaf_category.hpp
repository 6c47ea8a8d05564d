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

#ifndef ASET_SHEAVES_SHEAF_CATEGORY_HPP_
#define ASET_SHEAVES_SHEAF_CATEGORY_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"
#include "aset/fincat/presheaf.hpp"
#include "aset/sheaves/sheafify.hpp"
#include "aset/sheaves/site.hpp"
#include "aset/smallmaps/axioms.hpp"
#include "aset/smallmaps/map_class.hpp"

namespace aset::sheaves {

/// Sheaves on a finite site, as a full subcategory of presheaves. Limits,
/// implication, universal quantification and dependent products are the
/// presheaf ones; colimits, images and joins are sheafified or closed.
class SheafCategory {
 public:
  using Object = Presheaf;
  using Arrow = PshMap;
  static constexpr bool kWellPointed = false;

  explicit SheafCategory(Site site) : site_(std::move(site)), psh_(site_.category) {
    if (!site_is_valid(site_)) throw PreconditionError("not a Grothendieck coverage: " + site_.name);
  }
  SheafCategory(Site site, PresheafCategory::Limits limits)
      : site_(std::move(site)), psh_(site_.category, limits) {
    if (!site_is_valid(site_)) throw PreconditionError("not a Grothendieck coverage: " + site_.name);
  }

  std::string name() const { return "Sh(" + site_.name + ")"; }
  const Site& site() const { return site_; }
  const PresheafCategory& presheaves() const { return psh_; }

  bool contains(const Object& x) const { return psh_.is_presheaf(x) && is_sheaf(site_, x); }

  /// The closure of a subpresheaf: elements covered by it.
  Subset closure(const Object& x, const Subset& s) const {
    const auto& c = site_.category;
    auto off = psh_.offsets(x);
    Subset out(s.size(), false);
    for (std::size_t a = 0; a < c.object_count(); ++a)
      for (std::size_t e = 0; e < x.sizes[a]; ++e) {
        Sieve hit = 0;
        for (std::size_t f : c.arrows_into(a))
          if (s[off[c.dom(f)] + x.restriction[f][e]]) hit |= Sieve{1} << f;
        out[off[a] + e] = site_.covers(a, hit);
      }
    return out;
  }

  bool is_closed(const Object& x, const Subset& s) const { return closure(x, s) == s; }

  // -- category -------------------------------------------------------------

  Object dom(const Arrow& f) const { return f.dom; }
  Object cod(const Arrow& f) const { return f.cod; }
  Arrow identity(const Object& x) const { return psh_.identity(x); }
  Arrow compose(const Arrow& g, const Arrow& f) const { return psh_.compose(g, f); }
  std::vector<Arrow> hom(const Object& x, const Object& y) const { return psh_.hom(x, y); }

  std::vector<Object> objects(std::size_t bound) const {
    std::vector<Object> out;
    for (auto& x : psh_.objects(bound))
      if (is_sheaf(site_, x)) out.push_back(std::move(x));
    return out;
  }

  // -- limits ---------------------------------------------------------------

  Object terminal() const { return psh_.terminal(); }
  Arrow to_terminal(const Object& x) const { return psh_.to_terminal(x); }
  Cone<SheafCategory> pullback(const Arrow& f, const Arrow& g) const { return cast(psh_.pullback(f, g)); }
  Cone<SheafCategory> product(const Object& x, const Object& y) const { return cast(psh_.product(x, y)); }
  Arrow mediate(const Cone<SheafCategory>& k, const Arrow& f, const Arrow& g) const {
    return psh_.mediate(Cone<PresheafCategory>{k.apex, k.first, k.second}, f, g);
  }
  Arrow equalizer(const Arrow& f, const Arrow& g) const { return psh_.equalizer(f, g); }

  // -- regular structure ----------------------------------------------------

  bool is_mono(const Arrow& f) const { return psh_.is_mono(f); }

  /// Locally surjective: the image is dense.
  bool is_cover(const Arrow& f) const {
    return closure(f.cod, psh_.sub_exists(f, psh_.sub_top(f.dom))) == psh_.sub_top(f.cod);
  }

  Factorization<SheafCategory> image(const Arrow& f) const {
    Subset img = psh_.sub_exists(f, psh_.sub_top(f.dom));
    Arrow mono = psh_.sub_mono(f.cod, closure(f.cod, img));
    Arrow cover{f.dom, mono.dom, {}};
    for (std::size_t c = 0; c < f.components.size(); ++c) {
      std::vector<std::size_t> rank(f.cod.sizes[c], npos);
      for (std::size_t i = 0; i < mono.components[c].size(); ++i) rank[mono.components[c][i]] = i;
      std::vector<std::size_t> t;
      for (std::size_t v : f.components[c]) t.push_back(rank[v]);
      cover.components.push_back(std::move(t));
    }
    return {cover, mono};
  }

  // -- colimits, by sheafification ---------------------------------------------

  Object initial() const { return sheafify(site_, psh_.initial()).sheaf; }

  Arrow from_initial(const Object& x) const { return extend(psh_.from_initial(x)); }

  Cocone<SheafCategory> coproduct(const Object& x, const Object& y) const {
    auto k = psh_.coproduct(x, y);
    auto s = sheafify(site_, k.apex);
    return {s.sheaf, psh_.compose(s.unit, k.first), psh_.compose(s.unit, k.second)};
  }

  Arrow copair(const Cocone<SheafCategory>& k, const Arrow& f, const Arrow& g) const {
    auto raw = psh_.coproduct(f.dom, g.dom);
    Arrow h = psh_.copair(raw, f, g);
    Arrow out = extend(h);
    if (!(out.dom == k.apex)) throw PreconditionError("copair: cocone is not the canonical coproduct");
    return out;
  }

  /// Quotient of a sheaf by a (closed) equivalence relation: the presheaf
  /// quotient, sheafified.
  Arrow quotient(const Object& x, const Subset& r) const {
    Arrow q = psh_.quotient(x, r);
    auto s = sheafify(site_, q.cod);
    return psh_.compose(s.unit, q);
  }

  PiData<SheafCategory> pi_along(const Arrow& f, const Arrow& p) const {
    auto d = psh_.pi_along(f, p);
    return {d.pi, cast(d.along), d.counit};
  }

  // -- subobjects: closed subpresheaves --------------------------------------------

  std::vector<Subset> subobjects(const Object& x) const {
    std::vector<Subset> out;
    for (auto& s : psh_.subobjects(x))
      if (is_closed(x, s)) out.push_back(std::move(s));
    return out;
  }

  Arrow sub_mono(const Object& x, const Subset& s) const {
    if (!is_closed(x, s)) throw PreconditionError("subset is not a closed subpresheaf");
    return psh_.sub_mono(x, s);
  }
  Subset sub_key(const Arrow& mono) const { return psh_.sub_key(mono); }
  Subset sub_top(const Object& x) const { return psh_.sub_top(x); }
  Subset sub_bottom(const Object& x) const { return closure(x, psh_.sub_bottom(x)); }
  bool sub_leq(const Object& x, const Subset& a, const Subset& b) const { return psh_.sub_leq(x, a, b); }
  Subset sub_meet(const Object& x, const Subset& a, const Subset& b) const { return psh_.sub_meet(x, a, b); }
  Subset sub_join(const Object& x, const Subset& a, const Subset& b) const {
    return closure(x, psh_.sub_join(x, a, b));
  }
  Subset sub_implies(const Object& x, const Subset& a, const Subset& b) const { return psh_.sub_implies(x, a, b); }
  Subset sub_pullback(const Arrow& f, const Subset& s) const { return psh_.sub_pullback(f, s); }
  Subset sub_exists(const Arrow& f, const Subset& s) const { return closure(f.cod, psh_.sub_exists(f, s)); }
  Subset sub_forall(const Arrow& f, const Subset& s) const { return psh_.sub_forall(f, s); }

  // -- set-like ---------------------------------------------------------------

  std::size_t cardinality(const Object& x) const { return psh_.cardinality(x); }
  std::vector<std::size_t> fibre_sizes(const Arrow& f) const { return psh_.fibre_sizes(f); }
  std::string describe(const Arrow& f) const { return psh_.describe(f); }
  std::string describe_object(const Object& x) const { return psh_.describe_object(x); }

 private:
  static Cone<SheafCategory> cast(const Cone<PresheafCategory>& k) { return {k.apex, k.first, k.second}; }

  // The map aX -> Z induced by h: X -> Z for a sheaf Z.
  Arrow extend(const Arrow& h) const {
    auto sx = sheafify(site_, h.dom);
    auto sz = sheafify(site_, h.cod);
    return psh_.compose(invert(sz.unit), sheafify_map(site_, sx, sz, h));
  }

  Site site_;
  PresheafCategory psh_;
};

static_assert(Heyting<SheafCategory>);
static_assert(HasQuotients<SheafCategory>);
static_assert(HasPi<SheafCategory>);

/// A map of sheaves is pointwise small when each component is in the base
/// class of finite-set maps.
inline MapClass<SheafCategory> pointwise_small(const MapClass<FinSet>& base) {
  return {"pointwise " + base.label, [base](const SheafCategory&, const PshMap& f) {
            const FinSet sets;
            for (std::size_t c = 0; c < f.components.size(); ++c)
              if (!base.contains(sets, PresheafCategory::component(f, c))) return false;
            return true;
          }};
}

struct SheafModel {
  SheafCategory category;
  MapClass<SheafCategory> small;
  AxiomVerdict<FinSet> base_pi_small;  // the base class keeps small objects under Pi
};

/// Sheaves on the site with the pointwise-small class. The base class must
/// not refute (PiS).
inline SheafModel sheaf_category(const Site& site, const MapClass<FinSet>& base, Budget budget = {}) {
  auto v = check_axiom(FinSet(), base, AxiomId::kPiS, budget);
  if (v.outcome == Outcome::kRefuted)
    throw PreconditionError("base class " + base.label + " does not preserve small objects under Pi: " + v.summary);
  return {SheafCategory(site), pointwise_small(base), std::move(v)};
}

}  // namespace aset::sheaves

#endif  // ASET_SHEAVES_SHEAF_CATEGORY_HPP_
