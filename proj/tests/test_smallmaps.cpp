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

#include <gtest/gtest.h>

#include <map>
#include <string>

#include "aset/fincat/presheaf.hpp"
#include "aset/fincat/slice.hpp"
#include "aset/logic/parser.hpp"
#include "aset/smallmaps/axioms.hpp"
#include "aset/smallmaps/catalog.hpp"
#include "aset/smallmaps/constructions.hpp"
#include "aset/smallmaps/power.hpp"
#include "aset/smallmaps/separation.hpp"
#include "support/oracles.hpp"

using namespace aset;

namespace {

Budget budget(std::size_t size) {
  Budget b;
  b.size_bound = size;
  return b;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Verdict, NamesRoundTrip) {
  for (const auto& [id, name] : kAxiomNames) {
    EXPECT_EQ(to_string(id), name);
    EXPECT_EQ(parse_axiom(std::string(name)), id);
  }
  EXPECT_EQ(parse_axiom("ΠE"), AxiomId::kPiE);
  EXPECT_EQ(parse_axiom("ΠS"), AxiomId::kPiS);
  EXPECT_THROW(parse_axiom("A7"), PreconditionError);
  for (auto o : {Outcome::kWitnessed, Outcome::kPassedSampled, Outcome::kRefuted, Outcome::kInconclusive})
    EXPECT_EQ(parse_outcome(to_string(o)), o);
}

TEST(MapClass, ByName) {
  FinSet c;
  EXPECT_TRUE(class_by_name<FinSet>("all").contains(c, make_map(3, 1, {0, 0, 0})));
  EXPECT_FALSE(class_by_name<FinSet>("mono").contains(c, make_map(2, 1, {0, 0})));
  EXPECT_TRUE(class_by_name<FinSet>("fibre<3").contains(c, make_map(2, 1, {0, 0})));
  EXPECT_FALSE(class_by_name<FinSet>("fibre<3").contains(c, make_map(3, 1, {0, 0, 0})));
  EXPECT_TRUE(class_by_name<FinSet>("even-domain").contains(c, make_map(0, 1, {})));
  for (const char* bad : {"fibre<", "fibre<x", "fibre<3x", "monos", ""})
    EXPECT_THROW(class_by_name<FinSet>(bad), PreconditionError) << bad;
}

TEST(MapClass, TableFallsBack) {
  FinSet c;
  auto cls = table_class<FinSet>("t", {{"2->1 [0,0]", false}}, true);
  EXPECT_FALSE(cls.contains(c, make_map(2, 1, {0, 0})));
  EXPECT_TRUE(cls.contains(c, make_map(1, 1, {0})));
}

TEST(Catalog, ListsEveryArrow) {
  FinSet c;
  Catalog<FinSet> cat(c, 2);
  std::size_t want = 0;
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) want += oracle::power(b, a);
  EXPECT_EQ(cat.arrows().size(), want);
  EXPECT_EQ(cat.arrows_into(c, 1).size(), 3u);
}

TEST(Budget, Validation) {
  FinSet c;
  Budget b;
  b.size_bound = 0;
  EXPECT_THROW(check_axiom(c, all_maps<FinSet>(), AxiomId::kA1, b), PreconditionError);
  Budget tiny = budget(3);
  tiny.ceiling = 5;
  auto v = check_axiom(c, all_maps<FinSet>(), AxiomId::kA2, tiny);
  EXPECT_EQ(v.outcome, Outcome::kInconclusive);
  EXPECT_NE(v.summary.find("ceiling"), std::string::npos);
}

TEST(Axioms, AllMapsPassTheCore) {
  FinSet c;
  for (AxiomId id : {AxiomId::kA1, AxiomId::kA2, AxiomId::kA3, AxiomId::kA4, AxiomId::kA5, AxiomId::kA6, AxiomId::kC,
                     AxiomId::kPiE, AxiomId::kHB, AxiomId::kUS, AxiomId::kBE, AxiomId::kM, AxiomId::kPiS}) {
    auto v = check_axiom(c, all_maps<FinSet>(), id, budget(3));
    EXPECT_TRUE(is_pass(v.outcome)) << to_string(id) << ": " << v.summary;
    EXPECT_GT(v.instances, 0u) << to_string(id);
  }
}

// Composites of fibre<k maps have fibres up to (k-1)^2; the smallest
// offender has a domain of k elements, possible once (k-1) * (k-1) >= k.
TEST(Axioms, CompositionAgainstFibreArithmetic) {
  FinSet c;
  for (std::size_t k = 2; k <= 4; ++k) {
    const bool should_fail = (k - 1) * (k - 1) >= k && k <= 4;
    auto cls = fibre_bound<FinSet>(k);
    auto v = check_axiom(c, cls, AxiomId::kA5, budget(4));
    EXPECT_EQ(v.outcome == Outcome::kRefuted, should_fail) << "k=" << k;
    if (v.outcome == Outcome::kRefuted) {
      EXPECT_TRUE(replay(c, cls, v));
      auto gf = v.arrow("composite");
      EXPECT_FALSE(cls.contains(c, gf));
      EXPECT_TRUE(cls.contains(c, v.arrow("f")));
      EXPECT_TRUE(cls.contains(c, v.arrow("g")));
    }
  }
}

TEST(Axioms, FibreThreeCompositeIsFourToTwoToOne) {
  FinSet c;
  auto v = check_axiom(c, fibre_bound<FinSet>(3), AxiomId::kA5, budget(4));
  ASSERT_EQ(v.outcome, Outcome::kRefuted);
  EXPECT_EQ(describe_map(v.arrow("f")), "4->2 [1,1,0,0]");
  EXPECT_EQ(describe_map(v.arrow("g")), "2->1 [0,0]");
}

TEST(Axioms, RegressionClassesAreRefuted) {
  FinSet c;
  struct Case {
    MapClass<FinSet> cls;
    AxiomId id;
  };
  for (const auto& k : {Case{monos<FinSet>(), AxiomId::kA4}, Case{even_domain<FinSet>(), AxiomId::kA2},
                        Case{even_domain<FinSet>(), AxiomId::kA1}}) {
    auto v = check_axiom(c, k.cls, k.id, budget(3));
    ASSERT_EQ(v.outcome, Outcome::kRefuted) << k.cls.label << " " << to_string(k.id);
    EXPECT_FALSE(v.diagram.empty());
    EXPECT_TRUE(replay(c, k.cls, v));
    // the same evidence says nothing against all maps
    auto honest = v;
    EXPECT_FALSE(replay(c, all_maps<FinSet>(), honest));
  }
}

TEST(Axioms, DescentSuite) {
  FinSet c;
  EXPECT_EQ(check_descent_counterexample_suite(c, even_domain<FinSet>()).outcome, Outcome::kRefuted);
  EXPECT_TRUE(is_pass(check_descent_counterexample_suite(c, all_maps<FinSet>()).outcome));
}

// Every refutation any class produces must survive a replay.
TEST(Axioms, EveryRefutationReplays) {
  FinSet c;
  std::size_t refuted = 0;
  for (const char* name : {"all", "fibre<2", "fibre<3", "mono", "even-domain"}) {
    auto cls = class_by_name<FinSet>(name);
    for (const auto& [id, label] : kAxiomNames) {
      auto v = check_axiom(c, cls, id, budget(3));
      if (v.outcome != Outcome::kRefuted) continue;
      ++refuted;
      EXPECT_TRUE(replay(c, cls, v)) << name << " " << label << ": " << v.summary;
    }
  }
  EXPECT_GE(refuted, 10u);
}

TEST(Axioms, RepresentabilityHasNoWitnessForAllMaps) {
  FinSet c;
  Budget b = budget(3);
  b.witness_bound = 6;
  auto v = check_axiom(c, all_maps<FinSet>(), AxiomId::kR, b);
  ASSERT_EQ(v.outcome, Outcome::kInconclusive);
  ASSERT_TRUE(v.fact("killer").has_value());
  EXPECT_TRUE(replay(c, all_maps<FinSet>(), v));
  // bounded fibres do have a universal map
  auto w = check_axiom(c, fibre_bound<FinSet>(3), AxiomId::kR, b);
  EXPECT_EQ(w.outcome, Outcome::kPassedSampled);
}

TEST(Axioms, WTypesDoNotExistInFiniteSets) {
  FinSet c;
  auto v = check_axiom(c, all_maps<FinSet>(), AxiomId::kWE, budget(3));
  EXPECT_EQ(v.outcome, Outcome::kRefuted);
  EXPECT_TRUE(replay(c, all_maps<FinSet>(), v));
}

TEST(Axioms, NaturalNumbersAreNeverFound) {
  FinSet c;
  EXPECT_EQ(check_axiom(c, all_maps<FinSet>(), AxiomId::kNE, budget(3)).outcome, Outcome::kInconclusive);
}

TEST(Axioms, PowerClassesDependOnTheClass) {
  FinSet c;
  EXPECT_EQ(check_axiom(c, all_maps<FinSet>(), AxiomId::kPE, budget(3)).outcome, Outcome::kWitnessed);
  EXPECT_TRUE(is_pass(check_axiom(c, all_maps<FinSet>(), AxiomId::kPS, budget(3)).outcome));
  auto ps = check_axiom(c, monos<FinSet>(), AxiomId::kPS, budget(3));
  EXPECT_EQ(ps.outcome, Outcome::kRefuted);
}

TEST(Axioms, WorksInPresheavesAndSlices) {
  PresheafCategory p(FiniteCategory::arrow_category());
  auto cls = MapClass<PresheafCategory>{"all", [](const PresheafCategory&, const PshMap&) { return true; }};
  for (AxiomId id : {AxiomId::kA1, AxiomId::kA3, AxiomId::kHB})
    EXPECT_TRUE(is_pass(check_axiom(p, cls, id, budget(1)).outcome)) << to_string(id);

  FinSet c;
  Slice<FinSet> s(c, 2);
  auto sc = slice_class(fibre_bound<FinSet>(3), s);
  for (AxiomId id : {AxiomId::kA1, AxiomId::kA3})
    EXPECT_TRUE(is_pass(check_axiom(s, sc, id, budget(2)).outcome)) << to_string(id);
}

TEST(PowerClass, SizesAreBinomialSums) {
  FinSet c;
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 0; n <= 5; ++n) {
      auto pc = power_class(c, fibre_bound<FinSet>(k), n);
      std::size_t want = 0;
      for (std::size_t j = 0; j < k; ++j) want += binomial(n, j);
      EXPECT_EQ(pc.power, want) << "k=" << k << " n=" << n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t e = 0; e < pc.power; ++e)
          EXPECT_EQ(pc.membership[i * pc.power + e], ((pc.subsets[e] >> i) & 1U) != 0);
    }
}

TEST(PowerClass, TruthValues) {
  FinSet c;
  EXPECT_EQ(bounded_truth_values(c, all_maps<FinSet>()).power, 2u);
  EXPECT_EQ(bounded_truth_values(c, fibre_bound<FinSet>(1)).power, 1u);
}

TEST(SmallObjects, PretoposClosureForAllMaps) {
  FinSet c;
  for (const auto& r : pretopos_report(c, all_maps<FinSet>(), 3)) EXPECT_TRUE(r.holds) << r.name << ": " << r.witness;
  SmallObjects<FinSet> s(c, fibre_bound<FinSet>(3));
  EXPECT_EQ(s.objects(5).size(), 3u);
}

TEST(SmallObjects, PiChecksItsAdjunction) {
  FinSet c;
  auto f = make_map(2, 1, {0, 0});
  auto p = make_map(3, 2, {0, 1, 1});
  auto pd = pi_along(c, all_maps<FinSet>(), f, p, c.objects(2));
  EXPECT_EQ(pd.pi.dom, 2u);
  EXPECT_THROW(pi_along(c, fibre_bound<FinSet>(2), f, p, c.objects(2)), PreconditionError);
}

TEST(Separation, InclusionSmallnessMatchesCounting) {
  FinSet c;
  // sort A with 4 elements, P picks the first `k` of them
  for (std::size_t k = 0; k <= 4; ++k) {
    logic::Structure<FinSet> env(c);
    env.add_sort("A", 4);
    Subset p(4, false);
    for (std::size_t i = 0; i < k; ++i) p[i] = true;
    env.add_relation("P", {"A"}, p);
    auto phi = logic::parse("P(x)");
    EXPECT_EQ(bounded_separation_check(even_domain<FinSet>(), env, phi, {"x", "A"}), k % 2 == 0) << k;
    EXPECT_TRUE(bounded_separation_check(monos<FinSet>(), env, phi, {"x", "A"}));
  }
}

TEST(Separation, UnboundedQuantifierOverALargeSortIsRejected) {
  FinSet c;
  logic::Structure<FinSet> env(c);
  env.add_sort("A", 3);
  env.add_relation("P", {"A"}, Subset(3, true));
  auto phi = logic::parse("exists y:A. P(y)");
  EXPECT_THROW(bounded_separation_check(fibre_bound<FinSet>(3), env, phi, {"x", "A"}), PreconditionError);
  EXPECT_TRUE(bounded_separation_check(all_maps<FinSet>(), env, phi, {"x", "A"}));
}
