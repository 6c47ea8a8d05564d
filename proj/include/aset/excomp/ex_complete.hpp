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

#ifndef ASET_EXCOMP_EX_COMPLETE_HPP_
#define ASET_EXCOMP_EX_COMPLETE_HPP_

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "aset/excomp/completion.hpp"
#include "aset/excomp/small_maps.hpp"
#include "aset/fincat/lattice.hpp"
#include "aset/fincat/universal.hpp"
#include "aset/logic/eval.hpp"
#include "aset/smallmaps/axioms.hpp"

namespace aset::excomp {

struct Completed {
  ExCompletion category;
  MapClass<ExCompletion> small;
};

/// Axioms the base class must pass before completing: everything the
/// completion is meant to preserve. (BE) is what gets added.
inline const std::vector<AxiomId>& base_axioms() {
  static const std::vector<AxiomId> ids{AxiomId::kA1, AxiomId::kA2, AxiomId::kA3, AxiomId::kA4,
                                        AxiomId::kA5, AxiomId::kA6, AxiomId::kC};
  return ids;
}

/// Builds the completion. With `precheck`, the base class is first run
/// through base_axioms() and any refutation is a precondition error.
inline Completed ex_complete(const MapClass<FinSet>& base, std::size_t slack = 1,
                             const Budget* precheck = nullptr) {
  if (precheck) {
    FinSet sets;
    for (AxiomId id : base_axioms()) {
      auto v = check_axiom(sets, base, id, *precheck);
      if (v.outcome == Outcome::kRefuted)
        throw PreconditionError("base class " + base.label + " refutes " + to_string(id) + ": " +
                                v.summary);
    }
  }
  return {ExCompletion(base), completed_class(base, slack)};
}

/// x ->> y(card x), the class projection; an iso because FinSet is already
/// exact.
inline ExMorphism iso_to_image(const ExCompletion& e, const ExObject& x) {
  return e.from_class_map(x, e.embed(e.cardinality(x)), FinSet().identity(e.cardinality(x)));
}

struct EmbeddingCheck {
  std::string property;
  bool holds = true;
  std::string detail;  // first failure, if any
  std::size_t instances = 0;
};

struct EmbeddingReport {
  std::vector<EmbeddingCheck> checks;

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
  }
  const EmbeddingCheck& get(const std::string& p) const {
    for (const auto& c : checks)
      if (c.property == p) return c;
    throw PreconditionError("no embedding check named " + p);
  }
};

namespace detail {

inline void fail(EmbeddingCheck& c, const std::string& why) {
  if (c.holds) c.detail = why;
  c.holds = false;
}

}  // namespace detail

/// Checks y on every object of size <= `bound` and, for smallness, on
/// every arrow between objects of size <= `arrow_bound`.
inline EmbeddingReport verify_embedding(const Completed& ex, std::size_t bound = 4, std::size_t arrow_bound = 3,
                                        std::size_t slack = 1) {
  const ExCompletion& e = ex.category;
  FinSet sets;
  EmbeddingReport rep;
  EmbeddingCheck faithful{"fully-faithful"}, subs{"subobject-bijective"}, heyting{"heyting-preserved"},
      sums{"sums-preserved"}, small{"smallness-preserved-reflected"};

  for (std::size_t n = 0; n <= bound; ++n)
    for (std::size_t m = 0; m <= bound; ++m) {
      auto base_hom = sets.hom(n, m);
      auto ex_hom = e.hom(e.embed(n), e.embed(m));
      std::set<ExMorphism> image;
      for (const auto& f : base_hom) image.insert(e.embed(f));
      std::set<ExMorphism> target(ex_hom.begin(), ex_hom.end());
      ++faithful.instances;
      if (image.size() != base_hom.size()) detail::fail(faithful, "y not injective on hom(" + std::to_string(n) + "," + std::to_string(m) + ")");
      if (image != target) detail::fail(faithful, "y not surjective on hom(" + std::to_string(n) + "," + std::to_string(m) + ")");
    }

  for (std::size_t n = 0; n <= bound; ++n) {
    const ExObject yn = e.embed(n);
    auto base_subs = sets.subobjects(n);
    std::set<Subset> seen;
    for (const auto& s : base_subs) {
      ++subs.instances;
      Subset key = e.sub_key(e.embed(sets.sub_mono(n, s)));
      if (key != s) detail::fail(subs, "y sends " + to_string(s) + " to " + to_string(key));
      seen.insert(key);
    }
    // every subobject of yn, including ones presented by arbitrary monos
    for (const auto& x : all_objects(std::min<std::size_t>(n, 3)))
      for (const auto& m : e.hom(x, yn))
        if (e.is_mono(m)) seen.insert(e.sub_key(m));
    if (seen.size() != base_subs.size()) detail::fail(subs, "Sub(y" + std::to_string(n) + ") has extra elements");

    // lattice operations recomputed from the order on both sides
    SubobjectLattice<FinSet> lb(sets, n);
    SubobjectLattice<ExCompletion> le(e, yn);
    for (std::size_t i = 0; i < lb.size(); ++i)
      for (std::size_t j = 0; j < lb.size(); ++j) {
        ++heyting.instances;
        const Subset& a = lb.element(i);
        const Subset& b = lb.element(j);
        std::size_t ei = le.index_of(a), ej = le.index_of(b);
        if (le.element(le.meet(ei, ej)) != lb.element(lb.meet(i, j)) ||
            le.element(le.join(ei, ej)) != lb.element(lb.join(i, j)) ||
            le.element(le.implies(ei, ej)) != lb.element(lb.implies(i, j)))
          detail::fail(heyting, "lattice operation differs on Sub(" + std::to_string(n) + ")");
      }
  }
  // images and universal images along arrows
  for (std::size_t n = 0; n <= std::min<std::size_t>(bound, 3); ++n)
    for (std::size_t m = 0; m <= std::min<std::size_t>(bound, 3); ++m)
      for (const auto& f : sets.hom(n, m))
        for (const auto& s : sets.subobjects(n)) {
          ++heyting.instances;
          ExMorphism yf = e.embed(f);
          if (e.sub_exists(yf, s) != sets.sub_exists(f, s) || e.sub_forall(yf, s) != sets.sub_forall(f, s))
            detail::fail(heyting, "quantifier along " + describe_map(f) + " differs");
        }

  for (std::size_t n = 0; n <= bound; ++n)
    for (std::size_t m = 0; n + m <= bound; ++m) {
      ++sums.instances;
      Cocone<ExCompletion> k = e.coproduct(e.embed(n), e.embed(m));
      Cocone<FinSet> kb = sets.coproduct(n, m);
      ExMorphism cmp = e.copair(k, e.embed(kb.first), e.embed(kb.second));
      if (!is_iso(e, cmp)) detail::fail(sums, "y" + std::to_string(n) + " + y" + std::to_string(m) + " is not y(n+m)");
      // disjoint and stable: the injections have an empty pullback
      if (e.cardinality(e.pullback(k.first, k.second).apex) != 0) detail::fail(sums, "injections overlap");
    }

  for (std::size_t n = 0; n <= arrow_bound; ++n)
    for (std::size_t m = 0; m <= arrow_bound; ++m)
      for (const auto& f : sets.hom(n, m)) {
        ++small.instances;
        bool in_base = e.base_class().contains(sets, f);
        auto found = find_witness(e, e.base_class(), e.embed(f), slack);
        if (!found.witness && !found.exhausted) {
          detail::fail(small, "witness search for " + describe_map(f) + " hit its cap");
          continue;
        }
        if (in_base != found.witness.has_value())
          detail::fail(small, describe_map(f) + (in_base ? " is small but y of it is not" : " is not small but y of it is"));
      }

  rep.checks = {faithful, subs, heyting, sums, small};
  return rep;
}

/// The coequalizer of a bounded equivalence relation together with the
/// exactness and stability checks.
struct QuotientReport {
  ExMorphism quotient;
  bool exact = false;  // q is a cover, its kernel pair is the relation, and it coequalizes
  std::size_t pullbacks_checked = 0;
  bool stable = true;  // the same after every sampled pullback
  std::string detail;
};

namespace detail {

/// q: X ->> Q coequalizes r (a subobject of X * X): every h out of X that
/// is constant on r factors uniquely through q. Tested against maps into
/// y(test).
inline bool is_coequalizer(const ExCompletion& e, const ExMorphism& q, const Subset& r, std::size_t test = 2) {
  const ExObject t = e.embed(test);
  const ExObject x = e.dom(q);
  for (const auto& h : e.hom(x, t)) {
    if (!e.sub_leq(e.product(x, x).apex, r, kernel_pair(e, h))) continue;
    std::size_t through = 0;
    for (const auto& k : e.hom(e.cod(q), t))
      if (e.compose(k, q) == h) ++through;
    if (through != 1) return false;
  }
  return true;
}

}  // namespace detail

/// `s` is a subobject of x * x given on classes. `samples` are arrows into
/// the quotient object along which stability is checked; when empty, every
/// arrow y(k) -> Q with k <= 2 is used.
inline QuotientReport quotient_in_completion(const Completed& ex, const ExObject& x, const Subset& s,
                                             std::vector<ExMorphism> samples = {}) {
  const ExCompletion& e = ex.category;
  Cone<ExCompletion> xx = e.product(x, x);
  if (!is_equivalence_relation(e, x, s)) throw PreconditionError("not an equivalence relation");
  if (!ex.small.contains(e, e.sub_mono(xx.apex, s))) throw PreconditionError("equivalence relation is not bounded");
  QuotientReport rep;
  rep.quotient = e.quotient(x, s);
  rep.exact = e.is_cover(rep.quotient) && kernel_pair(e, rep.quotient) == s &&
              detail::is_coequalizer(e, rep.quotient, s);
  if (samples.empty())
    for (std::size_t k = 0; k <= 2; ++k)
      for (auto& p : e.hom(e.embed(k), e.cod(rep.quotient))) samples.push_back(std::move(p));
  for (const auto& p : samples) {
    ++rep.pullbacks_checked;
    // X' = P *_Q X with q': X' -> P; the relation pulled back is
    // S *_Q P: pairs over the same point of P whose images in X are related
    Cone<ExCompletion> pb = e.pullback(p, rep.quotient);
    const ExMorphism& q2 = pb.first;
    const ExMorphism& to_x = pb.second;
    Cone<ExCompletion> pp = e.product(pb.apex, pb.apex);
    ExMorphism both = e.mediate(xx, e.compose(to_x, pp.first), e.compose(to_x, pp.second));
    Cone<ExCompletion> over = e.product(e.dom(p), e.dom(p));
    ExMorphism q2q2 = e.mediate(over, e.compose(q2, pp.first), e.compose(q2, pp.second));
    Subset same_point = e.sub_pullback(q2q2, e.sub_key(diagonal(e, e.dom(p))));
    Subset pulled = e.sub_meet(pp.apex, e.sub_pullback(both, s), same_point);
    bool ok = e.is_cover(q2) && kernel_pair(e, q2) == pulled && detail::is_coequalizer(e, q2, pulled);
    if (!ok && rep.stable) {
      rep.stable = false;
      rep.detail = "exactness fails after pulling back along " + e.describe(p);
    }
  }
  return rep;
}

/// The same structure seen through y. Tuple objects of discrete objects are
/// discrete with classes in the same order, so relations carry over as
/// they are.
inline logic::Structure<ExCompletion> embed_structure(const ExCompletion& e, const logic::Structure<FinSet>& s) {
  logic::Structure<ExCompletion> out(e);
  const logic::Signature& sig = s.signature();
  for (const auto& name : sig.sorts) out.add_sort(name, e.embed(s.sort_object(name)));
  for (const auto& [from, to] : sig.coercions) out.add_coercion(from, to, e.embed(s.coercion(from, to)));
  for (std::size_t i = 0; i < sig.relations.size(); ++i)
    out.add_relation(sig.relations[i].name, sig.relations[i].sorts, s.relation(i));
  out.set_membership(sig.membership);
  if (!sig.default_sort.empty()) out.set_default_sort(sig.default_sort);
  return out;
}

}  // namespace aset::excomp

#endif  // ASET_EXCOMP_EX_COMPLETE_HPP_
