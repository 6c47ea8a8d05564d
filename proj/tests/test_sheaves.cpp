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

#include <set>

#include "aset/fincat/lattice.hpp"
#include "aset/sheaves/sheaf_category.hpp"
#include "aset/sheaves/sheafify.hpp"
#include "aset/sheaves/site.hpp"
#include "aset/smallmaps/axioms.hpp"

using namespace aset;
using namespace aset::sheaves;

namespace {

FiniteCategory vee() {
  std::vector<std::vector<bool>> leq = {{true, false, true}, {false, true, true}, {false, false, true}};
  return FiniteCategory::poset(3, leq, "vee");
}

// Sieves on a by brute force: subsets of arrows into a closed under
// precomposition.
std::size_t count_sieves(const FiniteCategory& c, std::size_t a) {
  auto into = c.arrows_into(a);
  std::size_t n = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << into.size()); ++mask) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < into.size(); ++i)
      if ((mask >> i) & 1U) s.insert(into[i]);
    bool closed = true;
    for (auto f : s)
      for (auto g : c.arrows_into(c.dom(f))) closed = closed && s.count(c.compose(f, g));
    n += closed;
  }
  return n;
}

// X(a) for a map X(1) -> X(0) that is a bijection
bool bijective(const std::vector<std::size_t>& table, std::size_t cod) {
  std::set<std::size_t> seen(table.begin(), table.end());
  return table.size() == cod && seen.size() == cod;
}

}  // namespace

TEST(Site, SieveCountsMatchBruteForce) {
  for (const auto& c : {FiniteCategory::chain(3), FiniteCategory::chain(4), vee(), FiniteCategory::arrow_category(),
                        FiniteCategory::discrete(2)})
    for (std::size_t a = 0; a < c.object_count(); ++a) {
      auto all = all_sieves(c, a);
      EXPECT_EQ(all.size(), count_sieves(c, a)) << c.name() << " " << a;
      for (auto s : all) EXPECT_TRUE(is_sieve(c, a, s));
    }
}

TEST(Site, PullbackAndGeneratedSieves) {
  auto c = FiniteCategory::chain(3);
  const auto f02 = *c.find_arrow("0<2");
  const auto f12 = *c.find_arrow("1<2");
  const auto f01 = *c.find_arrow("0<1");
  Sieve s = generated_sieve(c, 2, {f02});
  EXPECT_EQ(s, Sieve{1} << f02);
  EXPECT_EQ(pullback_sieve(c, f12, s), Sieve{1} << f01);
  EXPECT_EQ(pullback_sieve(c, f02, s), maximal_sieve(c, 0));
  EXPECT_EQ(generated_sieve(c, 2, {f12}), (Sieve{1} << f12) | (Sieve{1} << f02));
  EXPECT_THROW(generated_sieve(c, 1, {f02}), PreconditionError);
  EXPECT_FALSE(is_sieve(c, 2, Sieve{1} << f12));
}

TEST(Site, BuiltinTopologiesAreValid) {
  for (const auto& s : {trivial_site(FiniteCategory::chain(3)), trivial_site(vee()), dense_site(FiniteCategory::chain(3)),
                        dense_vee_site(), arrow_site(), dense_site(FiniteCategory::arrow_category())}) {
    for (const auto& k : validate_site(s)) EXPECT_TRUE(k.holds) << s.name << " " << k.axiom << ": " << k.witness;
  }
}

TEST(Site, DenseVeeCoversTheTopByItsLegs) {
  auto s = dense_vee_site();
  EXPECT_EQ(s.cov[0].size(), 1u);
  EXPECT_EQ(s.cov[1].size(), 1u);
  EXPECT_EQ(s.cov[2].size(), 2u);
}

TEST(Site, ViolationsAreReported) {
  auto c = FiniteCategory::chain(3);
  // no maximal sieve on 1
  Site no_max = trivial_site(c);
  no_max.cov[1].clear();
  auto m = validate_site(no_max);
  EXPECT_FALSE(m[1].holds);
  // {0<2} covers 2, but its pullback to 1 does not cover 1
  Site bad = trivial_site(c);
  bad.cov[2].push_back(Sieve{1} << *c.find_arrow("0<2"));
  auto l = validate_site(bad);
  EXPECT_TRUE(l[1].holds);
  EXPECT_FALSE(l[2].holds);
  EXPECT_FALSE(site_is_valid(bad));
  // a set of arrows that is not a sieve
  Site junk = trivial_site(c);
  junk.cov[2].push_back(Sieve{1} << *c.find_arrow("1<2"));
  EXPECT_FALSE(validate_site(junk)[0].holds);
}

TEST(Site, BasisGeneratesCoverage) {
  EXPECT_TRUE(bounded_cov_check(arrow_site()).holds);
  auto s = arrow_site();
  s.basis = std::vector<std::vector<Sieve>>{{maximal_sieve(s.category, 0)}, {maximal_sieve(s.category, 1)}};
  EXPECT_FALSE(bounded_cov_check(s).holds);
  Site nobasis = trivial_site(FiniteCategory::chain(2));
  nobasis.basis.reset();
  EXPECT_THROW(bounded_cov_check(nobasis), PreconditionError);
}

// On the arrow site a presheaf is a sheaf iff restriction along u is a
// bijection, and sheafification replaces X(1) by X(0).
TEST(Sheafify, ArrowSiteAgainstClosedForm) {
  auto site = arrow_site();
  PresheafCategory p(site.category);
  const auto u = *site.category.find_arrow("u");
  for (const auto& x : p.objects(3)) {
    EXPECT_EQ(is_sheaf(site, x), bijective(x.restriction[u], x.sizes[0]));
    auto a = sheafify(site, x);
    EXPECT_EQ(a.sheaf.sizes[0], x.sizes[0]);
    EXPECT_EQ(a.sheaf.sizes[1], x.sizes[0]);
    EXPECT_TRUE(is_sheaf(site, a.sheaf));
    EXPECT_TRUE(p.is_natural(a.unit));
  }
}

// Dense topology on the vee: sheaves have X(2) = X(0) * X(1).
TEST(Sheafify, DenseVeeAgainstClosedForm) {
  auto site = dense_vee_site();
  PresheafCategory p(site.category);
  const auto a02 = *site.category.find_arrow("0<2");
  const auto a12 = *site.category.find_arrow("1<2");
  std::size_t seen = 0;
  for (const auto& x : p.objects(2)) {
    ++seen;
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t e = 0; e < x.sizes[2]; ++e) pairs.insert({x.restriction[a02][e], x.restriction[a12][e]});
    const bool product = pairs.size() == x.sizes[2] && x.sizes[2] == x.sizes[0] * x.sizes[1];
    EXPECT_EQ(is_sheaf(site, x), product);
    auto a = sheafify(site, x);
    EXPECT_EQ(a.sheaf.sizes[2], x.sizes[0] * x.sizes[1]);
    EXPECT_TRUE(is_sheaf(site, a.sheaf));
  }
  EXPECT_GT(seen, 20u);
}

TEST(Sheafify, IdempotentAndUnitIsoOnSheaves) {
  for (const auto& site : {arrow_site(), dense_vee_site(), trivial_site(FiniteCategory::chain(3))}) {
    PresheafCategory p(site.category);
    for (const auto& x : p.objects(2)) {
      auto a = sheafify(site, x);
      auto aa = sheafify(site, a.sheaf);
      EXPECT_TRUE(is_componentwise_bijective(aa.unit));
      EXPECT_EQ(is_componentwise_bijective(a.unit), is_sheaf(site, x));
    }
  }
}

// Maps X -> F into a sheaf correspond to maps aX -> F.
TEST(Sheafify, UniversalProperty) {
  for (const auto& site : {arrow_site(), dense_vee_site()}) {
    PresheafCategory p(site.category);
    auto objs = p.objects(2);
    std::size_t checked = 0;
    for (const auto& x : objs) {
      if (p.cardinality(x) > 4) continue;
      auto a = sheafify(site, x);
      for (const auto& f : objs) {
        if (!is_sheaf(site, f) || p.cardinality(f) > 4) continue;
        ++checked;
        std::set<PshMap> restricted;
        for (const auto& h : p.hom(a.sheaf, f)) restricted.insert(p.compose(h, a.unit));
        EXPECT_EQ(restricted.size(), p.hom(a.sheaf, f).size());  // injective
        EXPECT_EQ(restricted.size(), p.hom(x, f).size());        // and onto
      }
    }
    EXPECT_GT(checked, 10u);
  }
}

TEST(Sheafify, MapsAreFunctorial) {
  auto site = arrow_site();
  PresheafCategory p(site.category);
  auto objs = p.objects(2);
  for (const auto& x : objs)
    for (const auto& y : objs) {
      if (p.cardinality(x) > 3 || p.cardinality(y) > 3) continue;
      auto sx = sheafify(site, x);
      auto sy = sheafify(site, y);
      for (const auto& g : p.hom(x, y)) {
        auto ag = sheafify_map(site, sx, sy, g);
        EXPECT_TRUE(p.is_natural(ag));
        EXPECT_EQ(p.compose(ag, sx.unit), p.compose(sy.unit, g));
      }
    }
}

TEST(SheafCategory, ObjectsAreSheavesAndClosureIsIdempotent) {
  SheafCategory sh(arrow_site());
  for (const auto& x : sh.objects(2)) {
    EXPECT_TRUE(sh.contains(x));
    for (const auto& s : sh.presheaves().subobjects(x)) {
      auto cl = sh.closure(x, s);
      EXPECT_TRUE(is_subset(s, cl));
      EXPECT_EQ(sh.closure(x, cl), cl);
    }
  }
  Site bad = trivial_site(FiniteCategory::chain(3));
  bad.cov[2].push_back(Sieve{1} << *bad.category.find_arrow("0<2"));
  EXPECT_THROW(SheafCategory{bad}, PreconditionError);
}

TEST(SheafCategory, SubobjectsFormHeytingAlgebras) {
  SheafCategory sh(dense_vee_site());
  std::size_t n = 0;
  for (const auto& x : sh.objects(2)) {
    if (sh.cardinality(x) > 6) continue;
    SubobjectLattice<SheafCategory> lat(sh, x);
    EXPECT_TRUE(lat.satisfies_heyting_adjunction());
    for (const auto& s : lat.elements()) EXPECT_TRUE(sh.is_closed(x, s));
    ++n;
  }
  EXPECT_GT(n, 3u);
}

TEST(SheafCategory, PointwiseSmallModel) {
  Budget b;
  b.size_bound = 2;
  auto model = sheaf_category(arrow_site(), all_maps<FinSet>(), b);
  for (AxiomId id : {AxiomId::kA1, AxiomId::kA4, AxiomId::kA5, AxiomId::kHB})
    EXPECT_TRUE(is_pass(check_axiom(model.category, model.small, id, b).outcome)) << to_string(id);
  // a base class that loses small objects under Pi is rejected up front
  EXPECT_THROW(sheaf_category(arrow_site(), even_domain<FinSet>(), b), PreconditionError);
  auto mono = sheaf_category(arrow_site(), monos<FinSet>(), b);
  auto a4 = check_axiom(mono.category, mono.small, AxiomId::kA4, b);
  EXPECT_EQ(a4.outcome, Outcome::kRefuted);
  EXPECT_TRUE(replay(mono.category, mono.small, a4));
}
