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

#ifndef ASET_EXCOMP_COMPLETION_HPP_
#define ASET_EXCOMP_COMPLETION_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"
#include "aset/fincat/finset.hpp"
#include "aset/smallmaps/map_class.hpp"

// Exact completion of finite sets: objects are sets with an equivalence
// relation, morphisms are functional relations. Everything that is not
// about the presentation is computed on equivalence classes.

namespace aset::excomp {

/// A carrier {0..n-1} with an equivalence relation, numbered i * n + j.
struct ExObject {
  std::size_t n = 0;
  Subset rel;

  friend bool operator==(const ExObject&, const ExObject&) = default;
  friend auto operator<=>(const ExObject&, const ExObject&) = default;
};

/// A functional relation F on dom.n * cod.n, saturated on both sides:
/// related inputs have the same outputs and outputs are closed under the
/// codomain relation. Saturation makes equality of morphisms plain
/// equality of relations.
struct ExMorphism {
  ExObject dom;
  ExObject cod;
  Subset rel;

  friend bool operator==(const ExMorphism&, const ExMorphism&) = default;
  friend auto operator<=>(const ExMorphism&, const ExMorphism&) = default;
};

inline Subset diagonal_relation(std::size_t n) {
  Subset d(n * n, false);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = true;
  return d;
}

inline ExObject make_object(std::size_t n, Subset rel) {
  if (rel.size() != n * n) throw PreconditionError("relation has the wrong size");
  FinSet().quotient(n, rel);  // throws unless an equivalence relation
  return {n, std::move(rel)};
}

/// (X, =)
inline ExObject discrete_object(std::size_t n) { return {n, diagonal_relation(n)}; }

/// The relation on n whose classes are given by a labelling of 0..n-1.
inline ExObject object_from_labels(const std::vector<std::size_t>& label) {
  const std::size_t n = label.size();
  Subset r(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i * n + j] = label[i] == label[j];
  return {n, std::move(r)};
}

/// Every equivalence relation on n, via restricted growth strings.
inline std::vector<ExObject> all_objects(std::size_t n) {
  std::vector<ExObject> out;
  std::vector<std::size_t> label(n, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      out.push_back(object_from_labels(label));
      return;
    }
    for (std::size_t l = 0; l <= used && l < n; ++l) {
      label[i] = l;
      go(i + 1, std::max(used, l + 1));
    }
  };
  go(0, 0);
  return out;
}

class ExCompletion {
 public:
  using Object = ExObject;
  using Arrow = ExMorphism;
  static constexpr bool kWellPointed = true;

  /// `base` decides which relations count as bounded: R is bounded when
  /// its inclusion into X * X is in the class.
  explicit ExCompletion(MapClass<FinSet> base) : base_(std::move(base)) {}

  std::string name() const { return "Ex(SkeletalFinSet, " + base_.label + ")"; }
  const MapClass<FinSet>& base_class() const { return base_; }

  bool is_bounded(const Object& x) const { return base_.contains(sets_, sets_.sub_mono(x.n * x.n, x.rel)); }

  // -- classes ----------------------------------------------------------------

  /// x -> X/R, classes numbered by least element.
  FinMap classes(const Object& x) const { return sets_.quotient(x.n, x.rel); }

  /// The function on classes induced by a morphism.
  FinMap class_map(const Arrow& f) const {
    FinMap qd = classes(f.dom), qc = classes(f.cod);
    FinMap out{qd.cod, qc.cod, std::vector<std::size_t>(qd.cod, npos)};
    for (std::size_t x = 0; x < f.dom.n; ++x)
      for (std::size_t y = 0; y < f.cod.n; ++y)
        if (f.rel[x * f.cod.n + y]) out.table[qd.table[x]] = qc.table[y];
    return out;
  }

  /// The saturated functional relation inducing `phi` on classes.
  Arrow from_class_map(const Object& x, const Object& y, const FinMap& phi) const {
    FinMap qx = classes(x), qy = classes(y);
    if (phi.dom != qx.cod || phi.cod != qy.cod) throw CompositionError("class map has the wrong type");
    Arrow f{x, y, Subset(x.n * y.n, false)};
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t j = 0; j < y.n; ++j) f.rel[i * y.n + j] = phi.table[qx.table[i]] == qy.table[j];
    return f;
  }

  /// Total, single-valued up to the codomain relation, and saturated.
  bool is_functional(const Arrow& f) const {
    const std::size_t a = f.dom.n, b = f.cod.n;
    if (f.rel.size() != a * b) return false;
    for (std::size_t x = 0; x < a; ++x) {
      bool any = false;
      for (std::size_t y = 0; y < b; ++y) {
        if (!f.rel[x * b + y]) continue;
        any = true;
        for (std::size_t y2 = 0; y2 < b; ++y2)
          if (f.rel[x * b + y2] != f.cod.rel[y * b + y2]) return false;
        for (std::size_t x2 = 0; x2 < a; ++x2)
          if (f.dom.rel[x * a + x2] && !f.rel[x2 * b + y]) return false;
      }
      if (!any) return false;
    }
    return true;
  }

  // -- category -------------------------------------------------------------

  Object dom(const Arrow& f) const { return f.dom; }
  Object cod(const Arrow& f) const { return f.cod; }
  Arrow identity(const Object& x) const { return {x, x, x.rel}; }

  /// Relational composite G . F.
  Arrow compose(const Arrow& g, const Arrow& f) const {
    if (!(f.cod == g.dom)) throw CompositionError("ex-morphisms are not composable");
    const std::size_t a = f.dom.n, b = f.cod.n, c = g.cod.n;
    Arrow h{f.dom, g.cod, Subset(a * c, false)};
    for (std::size_t x = 0; x < a; ++x)
      for (std::size_t y = 0; y < b; ++y)
        if (f.rel[x * b + y])
          for (std::size_t z = 0; z < c; ++z)
            if (g.rel[y * c + z]) h.rel[x * c + z] = true;
    return h;
  }

  std::vector<Arrow> hom(const Object& x, const Object& y) const {
    std::vector<Arrow> out;
    for (const auto& phi : sets_.hom(classes(x).cod, classes(y).cod)) out.push_back(from_class_map(x, y, phi));
    return out;
  }

  /// Every bounded object on a carrier of at most `bound` elements.
  std::vector<Object> objects(std::size_t bound) const {
    std::vector<Object> out;
    for (std::size_t n = 0; n <= bound; ++n)
      for (auto& x : all_objects(n))
        if (is_bounded(x)) out.push_back(std::move(x));
    return out;
  }

  // -- limits ---------------------------------------------------------------

  Object terminal() const { return discrete_object(1); }
  Arrow to_terminal(const Object& x) const { return {x, terminal(), Subset(x.n, true)}; }

  /// Pairs (x, y) of related classes, relation inherited componentwise.
  Cone<ExCompletion> pullback(const Arrow& f, const Arrow& g) const {
    if (!(f.cod == g.cod)) throw CompositionError("pullback of arrows with different codomains");
    Cone<FinSet> raw = sets_.pullback(class_map(f), class_map(g));
    return restrict_pairs(raw, f.dom, g.dom);
  }

  Cone<ExCompletion> product(const Object& x, const Object& y) const {
    return pullback(to_terminal(x), to_terminal(y));
  }

  Arrow mediate(const Cone<ExCompletion>& k, const Arrow& f, const Arrow& g) const {
    FinMap a = class_map(k.first), b = class_map(k.second);
    FinMap cf = class_map(f), cg = class_map(g);
    FinMap h{cf.dom, a.dom, std::vector<std::size_t>(cf.dom, npos)};
    for (std::size_t z = 0; z < cf.dom; ++z)
      for (std::size_t e = 0; e < a.dom; ++e)
        if (a.table[e] == cf.table[z] && b.table[e] == cg.table[z]) {
          h.table[z] = e;
          break;
        }
    for (std::size_t v : h.table)
      if (v == npos) throw CompositionError("competing cone does not commute");
    return from_class_map(f.dom, k.apex, h);
  }

  Arrow equalizer(const Arrow& f, const Arrow& g) const {
    FinMap a = class_map(f), b = class_map(g);
    Subset s(a.dom);
    for (std::size_t i = 0; i < a.dom; ++i) s[i] = a.table[i] == b.table[i];
    return sub_mono(f.dom, s);
  }

  // -- regular structure ----------------------------------------------------

  bool is_mono(const Arrow& f) const { return sets_.is_mono(class_map(f)); }
  bool is_cover(const Arrow& f) const { return sets_.is_cover(class_map(f)); }

  Factorization<ExCompletion> image(const Arrow& f) const {
    Arrow m = sub_mono(f.cod, sub_exists(f, sub_top(f.dom)));
    FinMap cm = class_map(m), cf = class_map(f);
    FinMap e{cf.dom, cm.dom, std::vector<std::size_t>(cf.dom)};
    for (std::size_t i = 0; i < cf.dom; ++i)
      for (std::size_t j = 0; j < cm.dom; ++j)
        if (cm.table[j] == cf.table[i]) e.table[i] = j;
    return {from_class_map(f.dom, m.dom, e), m};
  }

  // -- coproducts -----------------------------------------------------------

  Object initial() const { return discrete_object(0); }
  Arrow from_initial(const Object& x) const { return {initial(), x, {}}; }

  Cocone<ExCompletion> coproduct(const Object& x, const Object& y) const {
    const std::size_t n = x.n + y.n;
    Object s{n, Subset(n * n, false)};
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t j = 0; j < x.n; ++j) s.rel[i * n + j] = x.rel[i * x.n + j];
    for (std::size_t i = 0; i < y.n; ++i)
      for (std::size_t j = 0; j < y.n; ++j) s.rel[(x.n + i) * n + x.n + j] = y.rel[i * y.n + j];
    Arrow in1{x, s, Subset(x.n * n, false)}, in2{y, s, Subset(y.n * n, false)};
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t j = 0; j < n; ++j) in1.rel[i * n + j] = s.rel[i * n + j];
    for (std::size_t i = 0; i < y.n; ++i)
      for (std::size_t j = 0; j < n; ++j) in2.rel[i * n + j] = s.rel[(x.n + i) * n + j];
    return {s, in1, in2};
  }

  Arrow copair(const Cocone<ExCompletion>& k, const Arrow& f, const Arrow& g) const {
    if (!(f.cod == g.cod)) throw CompositionError("copairing arrows with different codomains");
    Arrow h{k.apex, f.cod, Subset(k.apex.n * f.cod.n, false)};
    // F + G through the injections' converses
    auto add = [&](const Arrow& leg, const Arrow& m) {
      for (std::size_t s = 0; s < k.apex.n; ++s)
        for (std::size_t x = 0; x < leg.dom.n; ++x)
          if (leg.rel[x * k.apex.n + s])
            for (std::size_t z = 0; z < m.cod.n; ++z)
              if (m.rel[x * m.cod.n + z]) h.rel[s * m.cod.n + z] = true;
    };
    add(k.first, f);
    add(k.second, g);
    return h;
  }

  // -- quotients: the point of the construction --------------------------------

  /// The quotient of x by an equivalence relation r on its classes (a
  /// subobject of x * x): the same carrier with the coarser relation.
  Arrow quotient(const Object& x, const Subset& r) const {
    Cone<ExCompletion> xx = product(x, x);
    FinMap qx = classes(x);
    FinMap qp = classes(xx.apex);
    FinMap c1 = class_map(xx.first), c2 = class_map(xx.second);
    const std::size_t k = qx.cod;
    Subset on_classes(k * k, false);
    for (std::size_t p = 0; p < qp.cod; ++p)
      if (r.at(p)) on_classes[c1.table[p] * k + c2.table[p]] = true;
    Object q{x.n, Subset(x.n * x.n, false)};
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t j = 0; j < x.n; ++j) q.rel[i * x.n + j] = on_classes[qx.table[i] * k + qx.table[j]];
    make_object(q.n, q.rel);
    return {x, q, q.rel};
  }

  PiData<ExCompletion> pi_along(const Arrow& f, const Arrow& p) const {
    PiData<FinSet> d = sets_.pi_along(class_map(f), class_map(p));
    Object pi_obj = discrete_object(d.pi.dom);
    Arrow pi = from_class_map(pi_obj, f.cod, d.pi);
    Cone<ExCompletion> along = pullback(pi, f);
    // counit on classes of the pullback, matched to the finite-set one
    FinMap a1 = class_map(along.first), a2 = class_map(along.second);
    FinMap counit{a1.dom, d.counit.cod, std::vector<std::size_t>(a1.dom)};
    for (std::size_t e = 0; e < a1.dom; ++e)
      for (std::size_t t = 0; t < d.along.apex; ++t)
        if (d.along.first.table[t] == a1.table[e] && d.along.second.table[t] == a2.table[e])
          counit.table[e] = d.counit.table[t];
    return {pi, along, from_class_map(along.apex, p.dom, counit)};
  }

  // -- subobjects, as sets of classes -------------------------------------------

  std::vector<Subset> subobjects(const Object& x) const { return sets_.subobjects(classes(x).cod); }

  Arrow sub_mono(const Object& x, const Subset& s) const {
    FinMap q = classes(x);
    if (s.size() != q.cod) throw PreconditionError("subset size differs from the number of classes");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < x.n; ++i)
      if (s[q.table[i]]) keep.push_back(i);
    Object sub{keep.size(), Subset(keep.size() * keep.size())};
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) sub.rel[i * keep.size() + j] = x.rel[keep[i] * x.n + keep[j]];
    Arrow m{sub, x, Subset(sub.n * x.n, false)};
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < x.n; ++j) m.rel[i * x.n + j] = x.rel[keep[i] * x.n + j];
    return m;
  }

  Subset sub_key(const Arrow& mono) const { return sub_exists(mono, sub_top(mono.dom)); }
  Subset sub_top(const Object& x) const { return full_subset(cardinality(x)); }
  Subset sub_bottom(const Object& x) const { return empty_subset(cardinality(x)); }
  bool sub_leq(const Object&, const Subset& a, const Subset& b) const { return is_subset(a, b); }
  Subset sub_meet(const Object&, const Subset& a, const Subset& b) const { return intersect(a, b); }
  Subset sub_join(const Object&, const Subset& a, const Subset& b) const { return unite(a, b); }
  Subset sub_implies(const Object&, const Subset& a, const Subset& b) const { return unite(complement(a), b); }
  Subset sub_pullback(const Arrow& f, const Subset& s) const { return sets_.sub_pullback(class_map(f), s); }
  Subset sub_exists(const Arrow& f, const Subset& s) const { return sets_.sub_exists(class_map(f), s); }
  Subset sub_forall(const Arrow& f, const Subset& s) const { return sets_.sub_forall(class_map(f), s); }

  // -- set-like: elements are classes ---------------------------------------------

  std::size_t cardinality(const Object& x) const { return classes(x).cod; }
  std::vector<std::size_t> fibre_sizes(const Arrow& f) const { return sets_.fibre_sizes(class_map(f)); }

  std::string describe_object(const Object& x) const {
    FinMap q = classes(x);
    std::string s = std::to_string(x.n) + "/[";
    for (std::size_t i = 0; i < x.n; ++i) s += (i ? "," : "") + std::to_string(q.table[i]);
    return s + "]";
  }

  std::string describe(const Arrow& f) const {
    return describe_object(f.dom) + " -> " + describe_object(f.cod) + " " + describe_map(class_map(f));
  }

  // -- the embedding ------------------------------------------------------------

  Object embed(std::size_t n) const { return discrete_object(n); }

  Arrow embed(const FinMap& f) const {
    Arrow a{discrete_object(f.dom), discrete_object(f.cod), Subset(f.dom * f.cod, false)};
    for (std::size_t i = 0; i < f.dom; ++i) a.rel[i * f.cod + f.table[i]] = true;
    return a;
  }

 private:
  // Objects and legs for a set of pairs of elements of x and y, given as a
  // finite-set cone over the class maps.
  Cone<ExCompletion> restrict_pairs(const Cone<FinSet>& raw, const Object& x, const Object& y) const {
    FinMap qx = classes(x), qy = classes(y);
    // carrier: all (i, j) whose classes form a pair in raw
    std::vector<bool> ok(qx.cod * qy.cod, false);
    for (std::size_t e = 0; e < raw.apex; ++e) ok[raw.first.table[e] * qy.cod + raw.second.table[e]] = true;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t j = 0; j < y.n; ++j)
        if (ok[qx.table[i] * qy.cod + qy.table[j]]) pairs.emplace_back(i, j);
    const std::size_t n = pairs.size();
    Object apex{n, Subset(n * n, false)};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        apex.rel[a * n + b] =
            x.rel[pairs[a].first * x.n + pairs[b].first] && y.rel[pairs[a].second * y.n + pairs[b].second];
    Arrow p1{apex, x, Subset(n * x.n, false)}, p2{apex, y, Subset(n * y.n, false)};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t i = 0; i < x.n; ++i) p1.rel[a * x.n + i] = x.rel[pairs[a].first * x.n + i];
      for (std::size_t j = 0; j < y.n; ++j) p2.rel[a * y.n + j] = y.rel[pairs[a].second * y.n + j];
    }
    return {apex, p1, p2};
  }

  FinSet sets_;
  MapClass<FinSet> base_;
};

static_assert(Heyting<ExCompletion>);
static_assert(HasQuotients<ExCompletion>);
static_assert(HasPi<ExCompletion>);

}  // namespace aset::excomp

#endif  // ASET_EXCOMP_COMPLETION_HPP_
