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

#ifndef ASET_SMALLMAPS_AXIOMS_HPP_
#define ASET_SMALLMAPS_AXIOMS_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"
#include "aset/core/subset.hpp"
#include "aset/fincat/finset.hpp"
#include "aset/fincat/universal.hpp"
#include "aset/smallmaps/catalog.hpp"
#include "aset/smallmaps/map_class.hpp"
#include "aset/smallmaps/power.hpp"
#include "aset/smallmaps/verdict.hpp"

namespace aset {

namespace detail {
struct BudgetExhausted {};
}  // namespace detail

/// Checks that `pd` is Pi_f(p) against every map into it from a test
/// object: for each t: T -> Y, arrows k: T -> Pi over t must correspond
/// bijectively (through the counit) to arrows f*T -> P over X.
template <Heyting C>
  requires HasPi<C>
bool verify_pi(const C& c, const typename C::Arrow& f, const typename C::Arrow& p, const PiData<C>& pd,
               const std::vector<typename C::Object>& tests) {
  if (!(c.cod(pd.pi) == c.cod(f)) || !(c.compose(p, pd.counit) == pd.along.second)) return false;
  for (const auto& t_obj : tests)
    for (const auto& t : c.hom(t_obj, c.cod(f))) {
      Cone<C> k = c.pullback(t, f);
      std::vector<typename C::Arrow> over;
      for (const auto& h : c.hom(k.apex, c.dom(p)))
        if (c.compose(p, h) == k.second) over.push_back(h);
      std::vector<typename C::Arrow> induced;
      for (const auto& kappa : c.hom(t_obj, c.dom(pd.pi))) {
        if (!(c.compose(pd.pi, kappa) == t)) continue;
        auto into = c.mediate(pd.along, c.compose(kappa, k.first), k.second);
        auto h = c.compose(pd.counit, into);
        if (std::find(induced.begin(), induced.end(), h) != induced.end()) return false;
        if (std::find(over.begin(), over.end(), h) == over.end()) return false;
        induced.push_back(h);
      }
      if (induced.size() != over.size()) return false;
    }
  return true;
}

/// Result of searching the catalog for a natural numbers object.
template <class C>
struct NnoSearch {
  bool found = false;
  typename C::Object carrier{};
  typename C::Arrow zero{};
  typename C::Arrow succ{};
  std::size_t candidates = 0;
  // for the last candidate rejected: the test algebra and the number of
  // algebra maps found (0 or more than 1)
  typename C::Arrow killer_point{};
  typename C::Arrow killer_step{};
  std::size_t killer_count = 0;
};

/// Counts arrows h: N -> A with h.z = a and h.s = g.h.
template <Cartesian C>
std::size_t count_algebra_maps(const C& c, const typename C::Arrow& z, const typename C::Arrow& s,
                               const typename C::Arrow& a, const typename C::Arrow& g) {
  std::size_t n = 0;
  for (const auto& h : c.hom(c.cod(z), c.cod(a)))
    if (c.compose(h, z) == a && c.compose(h, s) == c.compose(g, h)) ++n;
  return n;
}

/// Looks for a natural numbers object among catalogued objects, testing
/// each candidate (N, z, s) against every catalogued algebra (A, a, g).
template <Cartesian C>
NnoSearch<C> nno_detect(const C& c, std::size_t bound, std::size_t ceiling = std::size_t{1} << 24) {
  NnoSearch<C> r;
  auto objs = c.objects(bound);
  const auto one = c.terminal();
  std::vector<std::pair<typename C::Arrow, typename C::Arrow>> algebras;
  for (const auto& a_obj : objs)
    for (const auto& a : c.hom(one, a_obj))
      for (const auto& g : c.hom(a_obj, a_obj)) algebras.push_back({a, g});
  std::size_t work = 0;
  for (const auto& n : objs)
    for (const auto& z : c.hom(one, n))
      for (const auto& s : c.hom(n, n)) {
        ++r.candidates;
        bool ok = true;
        for (const auto& [a, g] : algebras) {
          if (++work > ceiling) throw detail::BudgetExhausted{};
          std::size_t k = count_algebra_maps(c, z, s, a, g);
          if (k != 1) {
            ok = false;
            r.killer_point = a;
            r.killer_step = g;
            r.killer_count = k;
            break;
          }
        }
        if (ok) {
          r.found = true;
          r.carrier = n;
          r.zero = z;
          r.succ = s;
          return r;
        }
      }
  return r;
}

/// Runs the axiom checks for one class over the catalog fixed by a budget.
template <Heyting C>
class AxiomChecker {
 public:
  using Object = typename C::Object;
  using Arrow = typename C::Arrow;
  using Verdict = AxiomVerdict<C>;
  using Diagram = std::vector<std::pair<std::string, Arrow>>;

  AxiomChecker(const C& c, MapClass<C> cls, Budget budget)
      : c_(c), cls_(std::move(cls)), budget_(budget), catalog_((budget.validate(), c), budget.size_bound) {}

  const Catalog<C>& catalog() const { return catalog_; }

  Verdict check(AxiomId id) {
    Verdict v;
    v.axiom = id;
    v.class_label = cls_.label;
    v.budget = budget_;
    instances_ = 0;
    try {
      switch (id) {
        case AxiomId::kA1: a1(v); break;
        case AxiomId::kA2: a2(v); break;
        case AxiomId::kA3: a3(v); break;
        case AxiomId::kA4: a4(v); break;
        case AxiomId::kA5: a5(v); break;
        case AxiomId::kA6: a6(v); break;
        case AxiomId::kC: collection(v); break;
        case AxiomId::kR: representability(v, budget_.strong); break;
        case AxiomId::kRStrong: representability(v, true); break;
        case AxiomId::kPiE: pi_exists(v); break;
        case AxiomId::kWE: w_exists(v); break;
        case AxiomId::kHB: heyting_bounded(v); break;
        case AxiomId::kUS: separated(v); break;
        case AxiomId::kBE: bounded_exact(v); break;
        case AxiomId::kNE: nno(v, false); break;
        case AxiomId::kNS: nno(v, true); break;
        case AxiomId::kPE: power_exists(v); break;
        case AxiomId::kPS: power_small(v); break;
        case AxiomId::kM: all_monos(v); break;
        case AxiomId::kF: fullness(v); break;
        case AxiomId::kPiS: pi_small(v); break;
      }
    } catch (const detail::BudgetExhausted&) {
      v.outcome = Outcome::kInconclusive;
      v.diagram.clear();
      v.summary = "search ceiling reached after " + std::to_string(instances_) + " instances";
    } catch (const ResourceBound& e) {
      v.outcome = Outcome::kInconclusive;
      v.diagram.clear();
      v.summary = std::string("resource bound: ") + e.what();
    }
    v.instances = instances_;
    return v;
  }

  /// Re-checks the evidence of a verdict against the kernel. True when a
  /// REFUTED counterexample still violates the axiom, or when the killer
  /// map recorded by an unsuccessful (R) search still defeats every
  /// candidate.
  bool replay(const Verdict& v) const {
    if (v.outcome == Outcome::kRefuted) return replay_refutation(v);
    if ((v.axiom == AxiomId::kR || v.axiom == AxiomId::kRStrong) && v.outcome == Outcome::kInconclusive &&
        v.fact("killer"))
      return replay_r_killer(v);
    throw PreconditionError(to_string(v.axiom) + " " + to_string(v.outcome) + " carries nothing to replay");
  }

 private:
  bool small(const Arrow& f) const { return cls_.contains(c_, f); }

  void step() {
    if (++instances_ > budget_.ceiling) throw detail::BudgetExhausted{};
  }

  static void refute(Verdict& v, std::string summary, Diagram d) {
    v.outcome = Outcome::kRefuted;
    v.summary = std::move(summary);
    v.diagram = std::move(d);
  }

  static void pass(Verdict& v, std::string summary) {
    v.outcome = Outcome::kPassedSampled;
    v.summary = std::move(summary);
  }

  const std::vector<Arrow>& arrows() const { return catalog_.arrows(); }

  // -- (A1)-(A6) --------------------------------------------------------------

  void a1(Verdict& v) {
    for (const auto& f : arrows()) {
      if (!small(f)) continue;
      for (const auto& p : catalog_.arrows_into(c_, c_.cod(f))) {
        step();
        Cone<C> k = c_.pullback(f, p);
        if (!small(k.second))
          return refute(v, "pullback of a small map is not small",
                        {{"f", f}, {"p", p}, {"top", k.first}, {"g", k.second}});
      }
    }
    pass(v, "every pullback of a small map is small");
  }

  void a2(Verdict& v) {
    for (const auto& f : arrows())
      for (const auto& p : catalog_.arrows_into(c_, c_.cod(f))) {
        if (!c_.is_cover(p)) continue;
        step();
        Cone<C> k = c_.pullback(f, p);
        if (small(k.second) && !small(f))
          return refute(v, "small pullback along a cover of a map that is not small",
                        {{"f", f}, {"p", p}, {"top", k.first}, {"g", k.second}});
      }
    pass(v, "smallness descends along every catalogued cover");
  }

  void a3(Verdict& v) {
    std::vector<Arrow> smalls;
    for (const auto& f : arrows())
      if (small(f)) smalls.push_back(f);
    for (const auto& f : smalls)
      for (const auto& g : smalls) {
        step();
        auto s = sum_arrow(c_, f, g);
        if (!small(s)) return refute(v, "sum of small maps is not small", {{"f", f}, {"g", g}, {"sum", s}});
      }
    pass(v, "sums of small maps are small");
  }

  std::vector<std::pair<std::string, Arrow>> finiteness_maps() const {
    const auto one = c_.terminal();
    Cocone<C> two = c_.coproduct(one, one);
    return {{"zero", c_.from_initial(one)},
            {"one", c_.identity(one)},
            {"fold", c_.copair(two, c_.identity(one), c_.identity(one))}};
  }

  void a4(Verdict& v) {
    for (const auto& [role, f] : finiteness_maps()) {
      step();
      if (!small(f)) return refute(v, "the map " + c_.describe(f) + " is not small", {{role, f}});
    }
    pass(v, "0 -> 1, 1 -> 1 and 2 -> 1 are small");
  }

  // Largest domains first, so the reported composite is the most extreme.
  void a5(Verdict& v) {
    const auto& objs = catalog_.objects();
    for (std::size_t i = objs.size(); i-- > 0;)
      for (const auto& f : catalog_.arrows_out_of(c_, objs[i])) {
        if (!small(f)) continue;
        for (const auto& g : catalog_.arrows_out_of(c_, c_.cod(f))) {
          if (!small(g)) continue;
          step();
          auto gf = c_.compose(g, f);
          if (!small(gf))
            return refute(v, "composite of small maps is not small", {{"f", f}, {"g", g}, {"composite", gf}});
        }
      }
    pass(v, "small maps compose");
  }

  void a6(Verdict& v) {
    for (const auto& p : arrows()) {
      if (!c_.is_cover(p)) continue;
      for (const auto& f : catalog_.arrows_out_of(c_, c_.cod(p))) {
        step();
        auto g = c_.compose(f, p);
        if (small(g) && !small(f))
          return refute(v, "image of a small map along a cover is not small", {{"p", p}, {"g", g}, {"f", f}});
      }
    }
    pass(v, "smallness passes to quotients along covers");
  }

  // -- (C) ------------------------------------------------------------------

  void collection(Verdict& v) {
    std::size_t witnessed = 0;
    for (const auto& f : arrows()) {
      if (!small(f)) continue;
      for (const auto& p : catalog_.arrows_into(c_, c_.dom(f))) {
        if (!c_.is_cover(p)) continue;
        step();
        if (!collection_witness(f, p, nullptr)) {
          v.outcome = Outcome::kInconclusive;
          v.summary = "no collection square found within the witness bound";
          v.diagram = {{"f", f}, {"p", p}};
          return;
        }
        ++witnessed;
      }
    }
    pass(v, "collection square found for all " + std::to_string(witnessed) + " instances");
  }

  /// Searches Z <= Y (largest first) with p.m a cover, then (B, h) = (A, id)
  /// and catalogued covers h: B -> A, for a small g: Z -> B completing a
  /// quasi-pullback.
  bool collection_witness(const Arrow& f, const Arrow& p, Diagram* out) {
    const auto y = c_.dom(p);
    const auto a = c_.cod(f);
    std::vector<Arrow> covers{c_.identity(a)};
    for (const auto& h : catalog_.arrows_into(c_, a))
      if (c_.is_cover(h) && !(h == covers.front())) covers.push_back(h);
    auto subs = c_.subobjects(y);
    for (std::size_t i = subs.size(); i-- > 0;) {
      auto m = c_.sub_mono(y, subs[i]);
      auto top = c_.compose(p, m);
      if (!c_.is_cover(top)) continue;
      auto target = c_.compose(f, top);
      for (const auto& h : covers) {
        std::vector<Arrow> gs;
        if (h == covers.front()) {
          gs.push_back(target);
        } else {
          for (const auto& g : c_.hom(c_.dom(m), c_.dom(h)))
            if (c_.compose(h, g) == target) gs.push_back(g);
        }
        for (const auto& g : gs) {
          step();
          if (small(g) && is_quasi_pullback(c_, top, f, g, h)) {
            if (out) *out = {{"f", f}, {"p", p}, {"m", m}, {"g", g}, {"h", h}};
            return true;
          }
        }
      }
    }
    return false;
  }

  // -- (R) ------------------------------------------------------------------

  static bool covers_fibre(std::size_t e, std::size_t x, bool strong) {
    if (strong) return e == x;
    return x == 0 ? e == 0 : e >= x;
  }

  /// Fibrewise test of a candidate universal map against one small map:
  /// every fibre of f must be covered by (or, strongly, isomorphic to) some
  /// fibre of pi. Exact in a well-pointed category.
  static bool candidate_handles(const std::vector<std::size_t>& pi_fibres,
                                const std::vector<std::size_t>& f_fibres, bool strong) {
    for (std::size_t x : f_fibres) {
      bool ok = false;
      for (std::size_t e : pi_fibres) ok = ok || covers_fibre(e, x, strong);
      if (!ok) return false;
    }
    return true;
  }

  std::vector<Arrow> r_tests() const {
    std::vector<Arrow> tests;
    for (const auto& x : c_.objects(budget_.witness_bound + 1)) {
      auto t = c_.to_terminal(x);
      if (small(t)) tests.push_back(t);
    }
    for (const auto& f : arrows())
      if (small(f)) tests.push_back(f);
    return tests;
  }

  void representability(Verdict& v, bool strong) {
    if constexpr (!WellPointed<C>) {
      v.outcome = Outcome::kInconclusive;
      v.summary = "representability is only decided fibrewise in well-pointed categories";
      return;
    } else {
      auto tests = r_tests();
      std::vector<std::vector<std::size_t>> test_fibres;
      for (const auto& t : tests) test_fibres.push_back(c_.fibre_sizes(t));
      // a candidate's verdict only depends on its multiset of fibre sizes
      std::map<std::vector<std::size_t>, std::size_t> memo;  // -> killer index or npos
      std::size_t candidates = 0;
      std::size_t killer = npos;
      Arrow largest{};
      for (const auto& e : c_.objects(budget_.witness_bound))
        for (const auto& u : c_.objects(budget_.witness_bound))
          for (const auto& pi : c_.hom(e, u)) {
            if (!small(pi)) continue;
            step();
            ++candidates;
            auto key = c_.fibre_sizes(pi);
            std::sort(key.begin(), key.end());
            auto it = memo.find(key);
            if (it == memo.end()) {
              std::size_t k = npos;
              for (std::size_t i = 0; i < tests.size() && k == npos; ++i)
                if (!candidate_handles(key, test_fibres[i], strong)) k = i;
              it = memo.emplace(key, k).first;
            }
            if (it->second == npos) {
              v.outcome = Outcome::kPassedSampled;
              v.summary = "universal map found; it handles all " + std::to_string(tests.size()) + " test maps";
              v.diagram = {{"pi", pi}};
              v.facts = {{"candidates", std::to_string(candidates)}, {"mode", strong ? "strong" : "weak"}};
              return;
            }
            largest = pi;
          }
      // one test map that defeats every candidate, if there is one
      for (std::size_t i = 0; i < tests.size() && killer == npos; ++i) {
        bool all = true;
        for (const auto& [key, k] : memo) all = all && !candidate_handles(key, test_fibres[i], strong);
        if (all) killer = i;
      }
      v.outcome = Outcome::kInconclusive;
      v.summary = "no universal small map among " + std::to_string(candidates) + " candidates up to size " +
                  std::to_string(budget_.witness_bound);
      if (killer != npos) {
        v.diagram = {{"killer", tests[killer]}, {"last_candidate", largest}};
        v.facts = {{"candidates", std::to_string(candidates)},
                   {"killer", c_.describe(tests[killer])},
                   {"mode", strong ? "strong" : "weak"}};
      }
    }
  }

  bool replay_r_killer(const Verdict& v) const {
    if constexpr (!WellPointed<C>) {
      return false;
    } else {
      const Arrow& killer = v.arrow("killer");
      if (!small(killer)) return false;
      bool strong = v.axiom == AxiomId::kRStrong || v.fact("mode") == std::optional<std::string>("strong");
      auto kf = c_.fibre_sizes(killer);
      std::set<std::vector<std::size_t>> seen;
      for (const auto& e : c_.objects(v.budget.witness_bound))
        for (const auto& u : c_.objects(v.budget.witness_bound))
          for (const auto& pi : c_.hom(e, u)) {
            if (!small(pi)) continue;
            auto key = c_.fibre_sizes(pi);
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
            if (candidate_handles(key, kf, strong)) return false;
          }
      return true;
    }
  }

  // -- (PiE), (PiS) ---------------------------------------------------------

  std::vector<Object> test_objects() const { return c_.objects(budget_.test_bound); }

  void pi_exists(Verdict& v) {
    if constexpr (!HasPi<C>) {
      v.outcome = Outcome::kInconclusive;
      v.summary = "no dependent product constructor for " + c_.name();
    } else {
      auto tests = test_objects();
      for (const auto& f : arrows()) {
        if (!small(f)) continue;
        for (const auto& p : catalog_.arrows_into(c_, c_.dom(f))) {
          step();
          auto pd = c_.pi_along(f, p);
          if (!verify_pi(c_, f, p, pd, tests))
            return refute(v, "dependent product fails its universal property",
                          {{"f", f}, {"p", p}, {"pi", pd.pi}, {"counit", pd.counit}});
        }
      }
      pass(v, "Pi along every small map verified against test objects up to size " +
                  std::to_string(budget_.test_bound));
    }
  }

  void pi_small(Verdict& v) {
    if constexpr (!HasPi<C>) {
      v.outcome = Outcome::kInconclusive;
      v.summary = "no dependent product constructor for " + c_.name();
    } else {
      for (const auto& f : arrows()) {
        if (!small(f)) continue;
        for (const auto& p : catalog_.arrows_into(c_, c_.dom(f))) {
          if (!small(p)) continue;
          step();
          auto pd = c_.pi_along(f, p);
          if (!small(pd.pi))
            return refute(v, "Pi along a small map does not preserve small objects",
                          {{"f", f}, {"p", p}, {"pi", pd.pi}});
        }
      }
      pass(v, "Pi along small maps preserves small objects");
    }
  }

  // -- (WE) -----------------------------------------------------------------

  // A finite initial algebra W satisfies |P_f W| = |W|. With a nullary and a
  // non-nullary constructor, |P_f n| >= n + 1 for every n, so none exists.
  static bool has_unbounded_signature(const std::vector<std::size_t>& arities) {
    bool nullary = false, positive = false;
    for (std::size_t a : arities) (a == 0 ? nullary : positive) = true;
    return nullary && positive;
  }

  void w_exists(Verdict& v) {
    if constexpr (!WellPointed<C>) {
      v.outcome = Outcome::kInconclusive;
      v.summary = "W-type existence is only decided for well-pointed categories";
    } else {
      for (const auto& f : arrows()) {
        if (!small(f)) continue;
        step();
        if (has_unbounded_signature(c_.fibre_sizes(f)))
          return refute(v, "signature with a nullary and a non-nullary constructor has no finite W-type",
                        {{"f", f}});
      }
      pass(v, "every small signature has a finite W-type");
    }
  }

  // -- (HB), (US), (M) ------------------------------------------------------

  void heyting_bounded(Verdict& v) {
    for (const auto& f : arrows()) {
      if (!small(f)) continue;
      const auto y = c_.dom(f);
      for (const auto& s : c_.subobjects(y)) {
        auto m = c_.sub_mono(y, s);
        if (!small(m)) continue;
        step();
        auto n = c_.sub_mono(c_.cod(f), c_.sub_forall(f, s));
        if (!small(n))
          return refute(v, "forall along a small map of a bounded subobject is not bounded",
                        {{"f", f}, {"m", m}, {"forall", n}});
      }
    }
    pass(v, "forall along small maps preserves bounded subobjects");
  }

  void separated(Verdict& v) {
    for (const auto& x : catalog_.objects()) {
      step();
      auto d = diagonal(c_, x);
      if (!small(d)) return refute(v, "diagonal is not small", {{"diagonal", d}});
    }
    pass(v, "every catalogued object is separated");
  }

  void all_monos(Verdict& v) {
    for (const auto& f : arrows()) {
      step();
      if (c_.is_mono(f) && !small(f)) return refute(v, "mono that is not small", {{"mono", f}});
    }
    pass(v, "all catalogued monos are small");
  }

  // -- (BE) -----------------------------------------------------------------

  void bounded_exact(Verdict& v) {
    if constexpr (!HasQuotients<C>) {
      v.outcome = Outcome::kInconclusive;
      v.summary = "no quotient constructor for " + c_.name();
    } else {
      std::size_t relations = 0;
      for (const auto& x : catalog_.objects()) {
        Cone<C> xx = c_.product(x, x);
        const Subset diag = c_.sub_key(diagonal(c_, x));
        const auto swap = pair(c_, xx.second, xx.first);
        for (const auto& r : c_.subobjects(xx.apex)) {
          if (!c_.sub_leq(xx.apex, diag, r)) continue;
          if (!(c_.sub_exists(swap, r) == r)) continue;
          if (!is_equivalence_relation(c_, x, r)) continue;
          auto m = c_.sub_mono(xx.apex, r);
          if (!small(m)) continue;
          ++relations;
          step();
          auto q = c_.quotient(x, r);
          if (!c_.is_cover(q) || !(kernel_pair(c_, q) == r))
            return refute(v, "quotient diagram is not exact", {{"relation", m}, {"quotient", q}});
          for (const auto& p : catalog_.arrows_into(c_, c_.cod(q))) {
            step();
            if (!stable_along(x, r, q, p))
              return refute(v, "quotient is not stable", {{"relation", m}, {"quotient", q}, {"p", p}});
          }
        }
      }
      pass(v, std::to_string(relations) + " bounded equivalence relations have stable quotients");
    }
  }

  // The pulled-back diagram p*R => p*X -> P is exact. p*R is built as
  // R *_Q P with its two legs into p*X, independently of p*q; it must be a
  // relation on p*X equal to the kernel pair of the cover p*q.
  bool stable_along(const Object& x, const Subset& r, const Arrow& q, const Arrow& p) const {
    Cone<C> xx = c_.product(x, x);
    auto m = c_.sub_mono(xx.apex, r);
    auto r0 = c_.compose(xx.first, m);
    auto r1 = c_.compose(xx.second, m);
    Cone<C> kr = c_.pullback(c_.compose(q, r0), p);
    Cone<C> k = c_.pullback(q, p);
    auto pr0 = c_.mediate(k, c_.compose(r0, kr.first), kr.second);
    auto pr1 = c_.mediate(k, c_.compose(r1, kr.first), kr.second);
    auto legs = pair(c_, pr0, pr1);
    return c_.is_cover(k.second) && c_.is_mono(legs) && c_.sub_key(legs) == kernel_pair(c_, k.second);
  }

  // -- (NE), (NS) -----------------------------------------------------------

  void nno(Verdict& v, bool need_small) {
    auto r = nno_detect(c_, budget_.size_bound, budget_.ceiling);
    instances_ += r.candidates;
    if (!r.found) {
      v.outcome = Outcome::kInconclusive;
      v.summary = "no natural numbers object among " + std::to_string(r.candidates) + " catalogued candidates";
      if (r.candidates > 0) {
        v.diagram = {{"test_point", r.killer_point}, {"test_step", r.killer_step}};
        v.facts = {{"last_candidate_maps", std::to_string(r.killer_count)}};
      }
      return;
    }
    v.diagram = {{"zero", r.zero}, {"succ", r.succ}};
    if (need_small && !small(c_.to_terminal(r.carrier)))
      return refute(v, "natural numbers object is not small",
                    {{"zero", r.zero}, {"succ", r.succ}, {"bang", c_.to_terminal(r.carrier)}});
    v.outcome = Outcome::kPassedSampled;
    v.summary = "natural numbers object found among catalogued objects";
  }

  // -- (PE), (PS): small power classes in finite sets ------------------------

  void power_exists(Verdict& v) {
    if constexpr (!std::same_as<C, FinSet>) {
      v.outcome = Outcome::kInconclusive;
      v.summary = "power classes are only constructed in finite sets";
    } else {
      std::size_t relations = 0;
      for (const auto& cobj : catalog_.objects()) {
        const PowerClassData pc = power_class(c_, cls_, cobj);
        const std::size_t ps = pc.power;
        const Subset& mem = pc.membership;
        Cone<C> cp = c_.product(cobj, ps);
        auto mem_to_p = c_.compose(cp.second, c_.sub_mono(cp.apex, mem));
        if (!small(mem_to_p))
          return refute(v, "membership relation is not small",
                        {{"carrier", c_.identity(cobj)}, {"membership", mem_to_p}});
        // for all maps this must be the analytic power object
        if (cls_.label == "all" && !(c_.power_class(cobj).membership == mem))
          return refute(v, "small power class differs from the power set",
                        {{"carrier", c_.identity(cobj)}, {"membership", mem_to_p}});
        for (const auto& d : catalog_.objects()) {
          Cone<C> cd = c_.product(cobj, d);
          std::set<Subset> classified;
          for (const auto& rho : c_.hom(d, ps)) {
            step();
            auto r = c_.sub_pullback(arrow_product(c_, c_.identity(cobj), rho), mem);
            if (!classified.insert(r).second)
              return refute(v, "two maps classify the same relation", {{"carrier", c_.identity(cobj)}, {"rho", rho}});
          }
          // every small relation on c * d is classified
          for (const auto& r : c_.subobjects(cd.apex)) {
            auto to_d = c_.compose(cd.second, c_.sub_mono(cd.apex, r));
            if (!small(to_d)) continue;
            ++relations;
            step();
            if (!classified.count(r))
              return refute(v, "small relation without a classifying map",
                            {{"carrier", c_.identity(cobj)}, {"relation", to_d}, {"inclusion", c_.sub_mono(cd.apex, r)}});
            auto rho = classify(c_, cls_, pc, d, r);
            if (!(c_.sub_pullback(arrow_product(c_, c_.identity(cobj), rho), mem) == r))
              return refute(v, "classifying map does not pull membership back to the relation",
                            {{"carrier", c_.identity(cobj)}, {"relation", to_d},
                             {"inclusion", c_.sub_mono(cd.apex, r)}, {"rho", rho}});
          }
        }
      }
      // functoriality of direct image on catalogued arrows
      for (const auto& f : arrows()) {
        for (const auto& g : catalog_.arrows_out_of(c_, c_.cod(f))) {
          step();
          if (!(direct_image(c_.compose(g, f)) == c_.compose(direct_image(g), direct_image(f))))
            return refute(v, "power class is not functorial", {{"f", f}, {"g", g}});
        }
      }
      v.outcome = Outcome::kWitnessed;
      v.summary = "small power classes classify all " + std::to_string(relations) +
                  " small relations uniquely and are functorial";
    }
  }

  // P_s(f) on all subsets: s -> f[s]. Only used for the full powerset.
  FinMap direct_image(const FinMap& f) const {
    FinMap out{std::size_t{1} << f.dom, std::size_t{1} << f.cod, {}};
    for (std::size_t s = 0; s < out.dom; ++s) {
      std::size_t img = 0;
      for (std::size_t i = 0; i < f.dom; ++i)
        if ((s >> i) & 1U) img |= std::size_t{1} << f.table[i];
      out.table.push_back(img);
    }
    return out;
  }

  FinMap small_fibred_power(const FinMap& p) const { return fibred_power(c_, cls_, p); }

  void power_small(Verdict& v) {
    if constexpr (!std::same_as<C, FinSet>) {
      v.outcome = Outcome::kInconclusive;
      v.summary = "power classes are only constructed in finite sets";
    } else {
      for (const auto& p : arrows()) {
        if (!small(p)) continue;
        step();
        auto fp = small_fibred_power(p);
        if (cls_.label == "all" && !(fp == c_.fibred_power(p)))
          return refute(v, "fibred power disagrees with the analytic construction", {{"p", p}, {"power", fp}});
        if (!small(fp)) return refute(v, "power class of a small object is not small", {{"p", p}, {"power", fp}});
      }
      pass(v, "fibred power classes of small maps are small");
    }
  }

  // -- (F) --------------------------------------------------------------------

  void fullness(Verdict& v);

  // -- replay -----------------------------------------------------------------

  bool replay_refutation(const Verdict& v) const {
    const auto& d = v;
    switch (v.axiom) {
      case AxiomId::kA1:
        return small(d.arrow("f")) && !small(d.arrow("g")) &&
               is_pullback_square(c_, d.arrow("top"), d.arrow("f"), d.arrow("g"), d.arrow("p"));
      case AxiomId::kA2:
        return c_.is_cover(d.arrow("p")) && small(d.arrow("g")) && !small(d.arrow("f")) &&
               is_pullback_square(c_, d.arrow("top"), d.arrow("f"), d.arrow("g"), d.arrow("p"));
      case AxiomId::kA3:
        return small(d.arrow("f")) && small(d.arrow("g")) && !small(d.arrow("sum")) &&
               sum_arrow(c_, d.arrow("f"), d.arrow("g")) == d.arrow("sum");
      case AxiomId::kA4:
        for (const auto& [role, f] : finiteness_maps())
          for (const auto& [r, a] : d.diagram)
            if (r == role && a == f && !small(f)) return true;
        return false;
      case AxiomId::kA5:
        return small(d.arrow("f")) && small(d.arrow("g")) && !small(d.arrow("composite")) &&
               c_.compose(d.arrow("g"), d.arrow("f")) == d.arrow("composite");
      case AxiomId::kA6:
        return c_.is_cover(d.arrow("p")) && small(d.arrow("g")) && !small(d.arrow("f")) &&
               c_.compose(d.arrow("f"), d.arrow("p")) == d.arrow("g");
      case AxiomId::kHB: {
        const auto& f = d.arrow("f");
        const auto& m = d.arrow("m");
        if (!small(f) || !c_.is_mono(m) || !small(m) || !(c_.cod(m) == c_.dom(f))) return false;
        auto n = c_.sub_mono(c_.cod(f), c_.sub_forall(f, c_.sub_key(m)));
        return n == d.arrow("forall") && !small(n);
      }
      case AxiomId::kUS: {
        const auto& dg = d.arrow("diagonal");
        return diagonal(c_, c_.dom(dg)) == dg && !small(dg);
      }
      case AxiomId::kM:
        return c_.is_mono(d.arrow("mono")) && !small(d.arrow("mono"));
      case AxiomId::kWE:
        if constexpr (WellPointed<C>) {
          return small(d.arrow("f")) && has_unbounded_signature(c_.fibre_sizes(d.arrow("f")));
        }
        return false;
      case AxiomId::kPiS:
        if constexpr (HasPi<C>) {
          auto pd = c_.pi_along(d.arrow("f"), d.arrow("p"));
          return small(d.arrow("f")) && small(d.arrow("p")) && pd.pi == d.arrow("pi") && !small(pd.pi);
        }
        return false;
      case AxiomId::kPiE:
        if constexpr (HasPi<C>) {
          auto pd = c_.pi_along(d.arrow("f"), d.arrow("p"));
          return small(d.arrow("f")) && !verify_pi(c_, d.arrow("f"), d.arrow("p"), pd, test_objects());
        }
        return false;
      case AxiomId::kBE:
        if constexpr (HasQuotients<C>) {
          const auto& m = d.arrow("relation");
          const auto x = c_.dom(d.arrow("quotient"));
          Subset r = c_.sub_key(m);
          if (!small(m) || !is_equivalence_relation(c_, x, r)) return false;
          auto q = c_.quotient(x, r);
          if (!(q == d.arrow("quotient"))) return false;
          bool exact = c_.is_cover(q) && kernel_pair(c_, q) == r;
          for (const auto& [role, p] : d.diagram)
            if (role == "p") return !stable_along(x, r, q, p);
          return !exact;
        }
        return false;
      case AxiomId::kPE:
        if constexpr (std::same_as<C, FinSet>) return replay_power(v);
        return false;
      case AxiomId::kPS:
        if constexpr (std::same_as<C, FinSet>) {
          return small(d.arrow("p")) && !small(small_fibred_power(d.arrow("p")));
        }
        return false;
      case AxiomId::kNS:
        return !small(d.arrow("bang")) &&
               count_algebra_maps(c_, d.arrow("zero"), d.arrow("succ"), d.arrow("zero"), d.arrow("succ")) == 1;
      default:
        return false;
    }
  }

  // (PE) evidence in finite sets: recompute the small power class of the
  // recorded carrier and confirm the defect.
  bool replay_power(const Verdict& v) const {
    if constexpr (std::same_as<C, FinSet>) {
      auto has = [&](const char* role) {
        for (const auto& [r, a] : v.diagram)
          if (r == role) return true;
        return false;
      };
      if (has("f")) {
        const auto& f = v.arrow("f");
        const auto& g = v.arrow("g");
        return !(direct_image(c_.compose(g, f)) == c_.compose(direct_image(g), direct_image(f)));
      }
      const std::size_t cobj = c_.dom(v.arrow("carrier"));
      const PowerClassData pc = power_class(c_, cls_, cobj);
      Cone<C> cp = c_.product(cobj, pc.power);
      if (has("membership") && !has("relation")) {
        auto mem_to_p = c_.compose(cp.second, c_.sub_mono(cp.apex, pc.membership));
        return !small(mem_to_p) || (cls_.label == "all" && !(c_.power_class(cobj).membership == pc.membership));
      }
      auto pulled = [&](const Arrow& rho) {
        return c_.sub_pullback(arrow_product(c_, c_.identity(cobj), rho), pc.membership);
      };
      if (has("relation")) {
        const auto& to_d = v.arrow("relation");
        const std::size_t d = c_.cod(to_d);
        Subset r = c_.sub_key(v.arrow("inclusion"));
        if (!small(to_d) || r.size() != cobj * d) return false;
        for (const auto& rho : c_.hom(d, pc.power))
          if (pulled(rho) == r) return has("rho") && !(pulled(v.arrow("rho")) == r);
        return true;
      }
      if (has("rho")) {
        const auto& rho = v.arrow("rho");
        for (const auto& other : c_.hom(c_.dom(rho), pc.power))
          if (!(other == rho) && pulled(other) == pulled(rho)) return true;
      }
      return false;
    } else {
      (void)v;
      return false;
    }
  }

  const C& c_;
  MapClass<C> cls_;
  Budget budget_;
  Catalog<C> catalog_;
  std::size_t instances_ = 0;
};

// (F) in finite sets. The cover p is the identity, C collects every pair
// (x, R) with R a multi-valued relation from A_x to B_x, and P is the
// generic family over C. Against each g: D -> X' and each Q the witness is
// E = D, x = id, y(d) = (g d, Q_d). g ranges over all maps into X'.
template <Heyting C>
void AxiomChecker<C>::fullness(Verdict& v) {
  if constexpr (!std::same_as<C, FinSet>) {
    v.outcome = Outcome::kInconclusive;
    v.summary = "fullness is only checked in finite sets";
  } else {
    const std::size_t obj_bound = std::min<std::size_t>(budget_.size_bound, 3);
    const std::size_t base_bound = std::min<std::size_t>(budget_.size_bound, 2);
    constexpr std::size_t kMaxPairs = 12;
    std::size_t families = 0, skipped = 0;
    auto fibres_of = [](const FinMap& m, std::size_t x) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < m.dom; ++i)
        if (m.table[i] == x) out.push_back(i);
      return out;
    };
    auto total = [](std::size_t rel, std::size_t na, std::size_t nb) {
      for (std::size_t i = 0; i < na; ++i)
        if (((rel >> (i * nb)) & ((std::size_t{1} << nb) - 1)) == 0) return false;
      return true;
    };
    for (std::size_t xs = 0; xs <= base_bound; ++xs)
      for (std::size_t an = 0; an <= obj_bound; ++an)
        for (const auto& a : c_.hom(an, xs)) {
          if (!small(a)) continue;
          for (std::size_t bn = 0; bn <= obj_bound; ++bn)
            for (const auto& b : c_.hom(bn, xs)) {
              if (!small(b)) continue;
              // C and the generic family P -> C
              std::vector<std::pair<std::size_t, std::size_t>> cells;  // (x, relation bits)
              std::map<std::pair<std::size_t, std::size_t>, std::size_t> cell_index;
              FinMap f{0, xs, {}};
              for (std::size_t x = 0; x < xs; ++x) {
                std::size_t na = fibres_of(a, x).size(), nb = fibres_of(b, x).size();
                if (na * nb > kMaxPairs) throw ResourceBound("fullness: fibre product too large");
                for (std::size_t rel = 0; rel < (std::size_t{1} << (na * nb)); ++rel) {
                  if (!total(rel, na, nb)) continue;
                  cell_index[{x, rel}] = cells.size();
                  cells.push_back({x, rel});
                  f.table.push_back(x);
                }
              }
              f.dom = f.table.size();
              FinMap to_c{0, f.dom, {}};
              std::vector<std::pair<std::size_t, std::size_t>> p_pairs;  // (i, j) for each element of P
              for (std::size_t k = 0; k < cells.size(); ++k) {
                std::size_t nb = fibres_of(b, cells[k].first).size();
                std::size_t na = fibres_of(a, cells[k].first).size();
                for (std::size_t i = 0; i < na; ++i)
                  for (std::size_t j = 0; j < nb; ++j)
                    if ((cells[k].second >> (i * nb + j)) & 1U) {
                      to_c.table.push_back(k);
                      p_pairs.push_back({i, j});
                    }
              }
              to_c.dom = to_c.table.size();
              if (!small(f) || !small(to_c)) {
                v.outcome = Outcome::kInconclusive;
                v.summary = "the generic family of multi-valued relations is not small";
                v.diagram = {{"a", a}, {"b", b}, {"f", f}, {"family", to_c}};
                return;
              }
              for (std::size_t dn = 0; dn <= base_bound; ++dn)
                for (const auto& g : c_.hom(dn, xs)) {
                  std::size_t width = 0;
                  for (std::size_t d = 0; d < dn; ++d)
                    width += fibres_of(a, g.table[d]).size() * fibres_of(b, g.table[d]).size();
                  if (width > kMaxPairs) {
                    ++skipped;
                    continue;
                  }
                  for (std::size_t q = 0; q < (std::size_t{1} << width); ++q) {
                    // split q into the relations Q_d and check it is a multi-valued span
                    std::vector<std::size_t> qd(dn);
                    std::size_t off = 0;
                    bool ok = true;
                    FinMap q_to_d{0, dn, {}};
                    for (std::size_t d = 0; d < dn && ok; ++d) {
                      std::size_t na = fibres_of(a, g.table[d]).size(), nb = fibres_of(b, g.table[d]).size();
                      qd[d] = (q >> off) & ((std::size_t{1} << (na * nb)) - 1);
                      off += na * nb;
                      ok = total(qd[d], na, nb);
                      for (std::size_t t = 0; t < static_cast<std::size_t>(__builtin_popcountll(qd[d])); ++t)
                        q_to_d.table.push_back(d);
                    }
                    q_to_d.dom = q_to_d.table.size();
                    if (!ok || !small(q_to_d)) continue;
                    step();
                    ++families;
                    FinMap y{dn, f.dom, {}};
                    for (std::size_t d = 0; d < dn; ++d) y.table.push_back(cell_index.at({g.table[d], qd[d]}));
                    FinMap x = c_.identity(dn);
                    // y*P from the elements of P, compared with x*Q
                    bool contained = c_.compose(f, y) == c_.compose(g, x) && c_.is_cover(x);
                    for (std::size_t e = 0; e < to_c.dom && contained; ++e)
                      for (std::size_t d = 0; d < dn; ++d) {
                        if (y.table[d] != to_c.table[e]) continue;
                        std::size_t nb = fibres_of(b, g.table[x.table[d]]).size();
                        auto [i, j] = p_pairs[e];
                        if (!((qd[x.table[d]] >> (i * nb + j)) & 1U)) contained = false;
                      }
                    if (!contained)
                      return refute(v, "generic family does not refine a multi-valued relation",
                                    {{"a", a}, {"b", b}, {"g", g}, {"y", y}});
                  }
                }
            }
        }
    v.outcome = Outcome::kWitnessed;
    v.summary = "generic family of multi-valued relations refines all " + std::to_string(families) +
                " sampled relations";
    v.facts = {{"reading", "g ranges over every D -> X' (the domain of the cover p)"},
               {"skipped_wide_instances", std::to_string(skipped)}};
  }
}

template <Heyting C>
AxiomVerdict<C> check_axiom(const C& c, const MapClass<C>& cls, AxiomId axiom, Budget budget = {}) {
  return AxiomChecker<C>(c, cls, budget).check(axiom);
}

template <Heyting C>
bool replay(const C& c, const MapClass<C>& cls, const AxiomVerdict<C>& v) {
  Budget b = v.budget;
  b.size_bound = 1;  // the catalog is not needed to replay evidence
  return AxiomChecker<C>(c, cls, b).replay(v);
}

/// The descent regression suite: (A2) over all maps between sets of size
/// at most 3.
template <Heyting C>
AxiomVerdict<C> check_descent_counterexample_suite(const C& c, const MapClass<C>& cls) {
  Budget b;
  b.size_bound = 3;
  return check_axiom(c, cls, AxiomId::kA2, b);
}

}  // namespace aset

#endif  // ASET_SMALLMAPS_AXIOMS_HPP_
