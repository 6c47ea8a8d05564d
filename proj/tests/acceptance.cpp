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

// Acceptance run: one line per criterion, nonzero exit if any is red.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "aset/cli/formats.hpp"
#include "aset/excomp/ex_complete.hpp"
#include "aset/fincat/finset.hpp"
#include "aset/fincat/lattice.hpp"
#include "aset/fincat/presheaf.hpp"
#include "aset/logic/eval.hpp"
#include "aset/sheaves/sheaf_category.hpp"
#include "aset/sheaves/sheafify.hpp"
#include "aset/sheaves/site.hpp"
#include "aset/smallmaps/axioms.hpp"
#include "aset/wzf/set_axioms.hpp"
#include "aset/wzf/wtype.hpp"
#include "aset/wzf/zf_algebra.hpp"
#include "support/oracles.hpp"

#ifndef ASET_FIXTURE_DIR
#define ASET_FIXTURE_DIR "fixtures"
#endif

using namespace aset;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
  double seconds_limit = 0;  // 0: no limit
};

// Collects failures; the first few reasons end up in the detail.
struct Tally {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& why) {
    if (cond) return;
    ok = false;
    if (notes.size() < 3) notes.push_back(why);
  }
  Result done(std::string summary, double limit = 0) const {
    std::string d = std::move(summary);
    for (const auto& n : notes) d += "; " + n;
    return {ok, d, limit};
  }
};

std::string fixture(const std::string& rel) { return std::string(ASET_FIXTURE_DIR) + "/" + rel; }

// 1 -----------------------------------------------------------------------------------

Result positive_suite() {
  FinSet c;
  Budget b;
  b.size_bound = 4;
  Tally t;
  std::size_t instances = 0;
  for (AxiomId id : {AxiomId::kA1, AxiomId::kA2, AxiomId::kA3, AxiomId::kA4, AxiomId::kA5, AxiomId::kA6, AxiomId::kC,
                     AxiomId::kPiE, AxiomId::kHB, AxiomId::kUS, AxiomId::kBE, AxiomId::kM, AxiomId::kPE}) {
    auto v = check_axiom(c, all_maps<FinSet>(), id, b);
    instances += v.instances;
    t.expect(is_pass(v.outcome), to_string(id) + " " + to_string(v.outcome) + ": " + v.summary);
  }
  return t.done("13 axioms on all maps, sizes <= 4, " + std::to_string(instances) + " instances", 60);
}

// 2 -----------------------------------------------------------------------------------

Result negative_suite() {
  FinSet c;
  Tally t;
  Budget b;
  b.size_bound = 4;

  auto a5 = check_axiom(c, fibre_bound<FinSet>(3), AxiomId::kA5, b);
  t.expect(a5.outcome == Outcome::kRefuted, "A5 on fibre<3 not refuted");
  if (a5.outcome == Outcome::kRefuted) {
    const auto& f = a5.arrow("f");
    const auto& g = a5.arrow("g");
    t.expect(f.dom == 4 && f.cod == 2 && g.cod == 1, "A5 composite is not 4->2->1");
    t.expect(replay(c, fibre_bound<FinSet>(3), a5), "A5 evidence does not replay");
  }

  auto a4 = check_axiom(c, monos<FinSet>(), AxiomId::kA4, b);
  t.expect(a4.outcome == Outcome::kRefuted && replay(c, monos<FinSet>(), a4), "A4 on monos not refuted/replayed");

  auto a2 = check_axiom(c, even_domain<FinSet>(), AxiomId::kA2, b);
  t.expect(a2.outcome == Outcome::kRefuted && replay(c, even_domain<FinSet>(), a2),
           "A2 on even-domain not refuted/replayed");

  Budget rb = b;
  rb.witness_bound = 6;
  auto r = check_axiom(c, all_maps<FinSet>(), AxiomId::kR, rb);
  t.expect(r.outcome == Outcome::kInconclusive, "R found a witness: " + r.summary);
  t.expect(r.fact("killer").has_value() && replay(c, all_maps<FinSet>(), r), "R has no replayable killer");

  return t.done("A5 fibre<3 via " + (a5.outcome == Outcome::kRefuted ? describe_map(a5.arrow("f")) + " then " +
                                                                          describe_map(a5.arrow("g"))
                                                                    : std::string("?")) +
                    ", A4 mono, A2 even-domain, R none up to 6 (killer " + r.fact("killer").value_or("-") + ")",
                60);
}

// 3 -----------------------------------------------------------------------------------

template <class C>
std::size_t adjunction_triples(const C& c, const typename C::Object& x, std::size_t& bad) {
  auto subs = c.subobjects(x);
  std::size_t n = 0;
  for (const auto& s : subs)
    for (const auto& tt : subs)
      for (const auto& u : subs) {
        ++n;
        bool lhs = c.sub_leq(x, c.sub_meet(x, s, tt), u);
        bool rhs = c.sub_leq(x, s, c.sub_implies(x, tt, u));
        if (lhs != rhs) ++bad;
      }
  return n;
}

Result heyting_kernel() {
  Tally t;
  std::size_t triples = 0, bad = 0;
  FinSet sets;
  for (std::size_t n = 0; n <= 3; ++n) triples += adjunction_triples(sets, n, bad);
  PresheafCategory psh(FiniteCategory::arrow_category());
  std::size_t psh_triples = 0;
  for (const auto& x : psh.objects(2))
    if (psh.cardinality(x) <= 3) psh_triples += adjunction_triples(psh, x, bad);
  triples += psh_triples;
  t.expect(triples >= 200, "only " + std::to_string(triples) + " triples");
  t.expect(psh_triples >= 100, "only " + std::to_string(psh_triples) + " presheaf triples");
  t.expect(bad == 0, std::to_string(bad) + " triples violate the adjunction");

  // the three subobjects of 1 form a chain; the middle one is not regular
  auto one = psh.terminal();
  SubobjectLattice<PresheafCategory> lat(psh, one);
  t.expect(lat.size() == 3, "Sub(1) has " + std::to_string(lat.size()) + " elements");
  std::string middle = "-";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (i == lat.top() || i == lat.bottom()) continue;
    const Subset& s = lat.element(i);
    Subset nn = psh.sub_implies(one, psh.sub_implies(one, s, psh.sub_bottom(one)), psh.sub_bottom(one));
    middle = to_string(s) + " vs " + to_string(nn);
    t.expect(nn != s, "not-not S == S for the middle subobject");
    t.expect(nn == psh.sub_top(one), "not-not S is not the top");
  }
  return t.done(std::to_string(triples) + " triples (" + std::to_string(psh_triples) + " presheaf), 0 failures; S, ~~S = " +
                middle);
}

// 4 -----------------------------------------------------------------------------------

Result kripke_joyal_vs_classical() {
  Tally t;
  FinSet c;
  std::size_t agree = 0, total = 0, informative = 0;
  const std::vector<logic::SortedVar> ctx = {{"x", "A"}, {"y", "B"}};
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    auto model = oracle::random_model(1000 + seed);
    auto env = oracle::to_structure(c, model);
    oracle::FormulaGen gen(seed);
    auto phi = gen.make(ctx, 4);
    Subset kj = logic::kripke_joyal_eval(phi, env, ctx);
    Subset cl = oracle::Classical(model).truth(*phi, ctx);
    ++total;
    if (kj == cl) ++agree;
    else t.expect(false, "disagree on " + logic::to_string(phi));
    if (!is_full(cl) && !is_empty(cl)) ++informative;
  }
  return t.done(std::to_string(agree) + "/" + std::to_string(total) + " formulas agree exactly (" +
                std::to_string(informative) + " with non-constant truth)");
}

// 5 -----------------------------------------------------------------------------------

Result w_types() {
  Tally t;
  auto nullary = wzf::wtype(make_map(0, 1, {}), 8);
  t.expect(nullary.converged && nullary.size() == 1, "f:0->1 census " + std::to_string(nullary.size()));
  auto unary = wzf::wtype(make_map(1, 1, {0}), 8);
  t.expect(unary.converged && unary.size() == 0, "f:1->1 census " + std::to_string(unary.size()));

  // constructor 0 nullary, constructor 1 unary: the naturals
  auto nat = wzf::wtype(make_map(1, 2, {1}), 4);
  t.expect(nat.census == std::vector<std::size_t>{1, 2, 3, 4}, "nat census differs");

  // algebras for the same signature on small carriers
  std::vector<wzf::PolyAlgebra> algebras = {
      {1, {{0}, {0}}},
      {2, {{0}, {1, 0}}},
      {3, {{2}, {1, 2, 0}}},
      {3, {{0}, {0, 0, 1}}},
      {2, {{1}, {1, 1}}},
  };
  std::size_t unique = 0;
  for (const auto& a : algebras) {
    std::size_t m = wzf::count_algebra_morphisms(nat, a);
    auto h = wzf::fold(nat, a);
    bool fold_ok = true;
    for (std::size_t tr = 0; tr < nat.size(); ++tr) {
      std::vector<std::size_t> args;
      for (auto k : nat.children[tr]) args.push_back(h[k]);
      fold_ok = fold_ok && h[tr] == a.apply(nat.trees[tr]->root, args);
    }
    if (m == 1 && fold_ok) ++unique;
  }
  t.expect(unique == algebras.size(), std::to_string(unique) + "/5 algebras have a unique mediating map");
  std::string cs;
  for (auto n : nat.census) cs += (cs.empty() ? "" : ",") + std::to_string(n);
  return t.done("census 1 and 0 (converged); nat " + cs + "; unique mediating map into " + std::to_string(unique) +
                "/5 algebras");
}

// 6 -----------------------------------------------------------------------------------

Result cumulative_hierarchy() {
  Tally t;
  auto v = wzf::build_V(4);
  auto oracle = oracle::powerset_stages(4);
  std::vector<std::size_t> want = {0, 1, 2, 4, 16};
  for (std::size_t k = 0; k <= 4; ++k) {
    t.expect(v.stage_size(k) == want[k], "V_" + std::to_string(k) + " has " + std::to_string(v.stage_size(k)));
    t.expect(oracle[k].size() == want[k], "oracle V_" + std::to_string(k) + " has " + std::to_string(oracle[k].size()));
  }
  // canonical names of the built elements must be exactly the oracle's
  std::vector<oracle::HF> name(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) {
    std::set<oracle::HF> m;
    for (auto y : v.members(x)) m.insert(name[y]);
    name[x] = oracle::hf_of(m);
  }
  t.expect(std::set<oracle::HF>(name.begin(), name.end()) == oracle[4], "V_4 differs from the oracle");
  std::size_t pairs = 0, agree = 0;
  for (std::size_t x = 0; x < v.size(); ++x)
    for (std::size_t y = 0; y < v.size(); ++y) {
      ++pairs;
      bool ext = oracle::hf_members(name[y]).count(name[x]) != 0;
      // {x} only exists below the top rank; above it x cannot be a member
      bool eps = v.epsilon(x, y);
      if (eps == ext && v.contains(y, x) == ext) ++agree;
    }
  t.expect(agree == pairs, std::to_string(pairs - agree) + " pairs disagree");
  return t.done("counts 0,1,2,4,16; eps agrees with membership on " + std::to_string(agree) + "/" +
                std::to_string(pairs) + " pairs");
}

// 7 -----------------------------------------------------------------------------------

Result set_axiom_census() {
  using logic::SchemaId;
  Tally t;
  auto v = wzf::build_V(4);
  std::size_t checked = 0;
  auto run = [&](SchemaId id, bool expect_hold, std::size_t samples) {
    auto params = wzf::sample_parameters(id);
    t.expect(params.size() >= samples, to_string(id) + " has too few parameters");
    for (const auto& phi : params) {
      auto r = wzf::check_set_axiom(id, v, 1, phi);
      ++checked;
      auto want = expect_hold ? wzf::SetAxiomOutcome::kHolds : wzf::SetAxiomOutcome::kFails;
      t.expect(r.outcome == want, to_string(id) + (phi ? "[" + logic::to_string(phi) + "]" : "") + " " +
                                      wzf::to_string(r.outcome));
    }
  };
  run(SchemaId::kExtensionality, true, 1);
  run(SchemaId::kEmptySet, true, 1);
  run(SchemaId::kPairing, true, 1);
  run(SchemaId::kUnion, true, 1);
  run(SchemaId::kEpsilonInduction, true, 1);
  run(SchemaId::kBoundedSeparation, true, 5);
  run(SchemaId::kStrongCollection, true, 3);
  run(SchemaId::kFullSeparation, true, 1);
  run(SchemaId::kPowerSet, true, 1);
  run(SchemaId::kInfinity, false, 1);
  return t.done(std::to_string(checked) + " instances with exact outcomes; infinity fails", 120);
}

// 8 -----------------------------------------------------------------------------------

Result sheaves_criterion() {
  Tally t;
  auto all_hold = [](const sheaves::Site& s) { return sheaves::site_is_valid(s); };
  t.expect(all_hold(sheaves::trivial_site(FiniteCategory::chain(3))), "trivial topology on the chain fails");
  t.expect(all_hold(sheaves::dense_vee_site()), "dense topology on the vee fails");
  for (const char* f : {"sites/trivial-chain3.site", "sites/dense-vee.site"}) {
    auto doc = cli::load_document(fixture(f));
    t.expect(doc.site && all_hold(*doc.site), std::string(f) + " fails");
  }
  auto bad = cli::load_document(fixture("sites/bad-local.site"));
  bool l_refuted = false;
  for (const auto& k : sheaves::validate_site(*bad.site))
    if (k.axiom == "L") l_refuted = !k.holds;
  t.expect(l_refuted, "the seeded L violation is not refuted");

  std::size_t presheaves = 0, sheafs = 0;
  for (const char* f : {"presheaves/arrow.psh", "presheaves/vee.psh"}) {
    auto doc = cli::load_document(fixture(f));
    for (const auto& p : doc.presheaves) {
      ++presheaves;
      auto a = sheaves::sheafify(*doc.site, p.value);
      auto amalg = sheaves::sheaf_condition(*doc.site, a.sheaf);
      t.expect(amalg.holds, p.name + ": " + amalg.witness);
      auto aa = sheaves::sheafify(*doc.site, a.sheaf);
      t.expect(sheaves::is_componentwise_bijective(aa.unit), p.name + ": sheafification not idempotent");
      t.expect(sheaves::is_componentwise_bijective(a.unit) == sheaves::is_sheaf(*doc.site, p.value),
               p.name + ": unit iso does not match the sheaf condition");
      if (sheaves::is_sheaf(*doc.site, p.value)) ++sheafs;
    }
  }
  t.expect(presheaves == 10, std::to_string(presheaves) + " fixture presheaves");
  return t.done("M, L, T on trivial and dense sites, L refuted on the seeded site; " + std::to_string(presheaves) +
                " presheaves (" + std::to_string(sheafs) + " already sheaves) sheafify idempotently");
}

// 9 -----------------------------------------------------------------------------------

Result sheaf_model() {
  Tally t;
  Budget b;
  b.size_bound = 2;
  auto model = sheaves::sheaf_category(sheaves::arrow_site(), all_maps<FinSet>(), b);
  t.expect(model.base_pi_small.outcome != Outcome::kRefuted, "base class is not closed under Pi");
  std::size_t instances = 0;
  for (AxiomId id : {AxiomId::kA1, AxiomId::kA2, AxiomId::kA3, AxiomId::kA4, AxiomId::kA5, AxiomId::kA6, AxiomId::kC,
                     AxiomId::kHB, AxiomId::kUS, AxiomId::kBE}) {
    auto v = check_axiom(model.category, model.small, id, b);
    instances += v.instances;
    t.expect(is_pass(v.outcome), to_string(id) + " " + to_string(v.outcome) + ": " + v.summary);
  }
  return t.done("10 axioms for pointwise-small maps of sheaves on the arrow site, " + std::to_string(instances) +
                " instances at budget 2");
}

// 10 ----------------------------------------------------------------------------------

Result exact_completion() {
  Tally t;
  std::size_t checks = 0, relations = 0;
  for (const auto& base : {all_maps<FinSet>(), fibre_bound<FinSet>(2), fibre_bound<FinSet>(3)}) {
    auto ex = excomp::ex_complete(base);
    auto report = excomp::verify_embedding(ex, 4);
    for (const auto& c : report.checks) {
      ++checks;
      t.expect(c.holds, base.label + " " + c.property + ": " + c.detail);
    }
    const auto& e = ex.category;
    for (std::size_t k = 0; k <= 4; ++k) {
      auto yk = e.embed(k);
      auto kk = e.product(yk, yk);
      FinMap c1 = e.class_map(kk.first), c2 = e.class_map(kk.second);
      for (const auto& rel : excomp::all_objects(k)) {
        Subset s(e.cardinality(kk.apex));
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = rel.rel[c1.table[i] * k + c2.table[i]];
        // the bounded ones are exactly those the base class admits
        if (!base.contains(FinSet(), FinSet().sub_mono(k * k, rel.rel))) continue;
        auto q = excomp::quotient_in_completion(ex, yk, s);
        ++relations;
        t.expect(q.exact && q.stable, base.label + " " + e.describe_object(rel) + ": " + q.detail);
      }
    }
  }
  return t.done(std::to_string(checks) + " embedding checks over all, fibre<2, fibre<3; " + std::to_string(relations) +
                    " bounded equivalence relations have stable quotients",
                120);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"axiom suite, positive", positive_suite},
      {"axiom suite, negative", negative_suite},
      {"Heyting kernel", heyting_kernel},
      {"Kripke-Joyal vs classical oracle", kripke_joyal_vs_classical},
      {"W-types", w_types},
      {"cumulative hierarchy", cumulative_hierarchy},
      {"set-axiom census on V_4", set_axiom_census},
      {"sites and sheafification", sheaves_criterion},
      {"small maps in sheaves", sheaf_model},
      {"exact completion", exact_completion},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds_limit > 0 && secs >= r.seconds_limit) {
      r.pass = false;
      r.detail += "; over the " + std::to_string(static_cast<int>(r.seconds_limit)) + " s limit";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << (i + 1) << (i + 1 < 10 ? "  " : " ") << (r.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " (" << timing << "): " << r.detail << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all 10 criteria pass" : std::to_string(failed) + " of 10 criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
