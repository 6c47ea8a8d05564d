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

#include "aset/fincat/finite_category.hpp"
#include "aset/fincat/finset.hpp"
#include "aset/fincat/lattice.hpp"
#include "aset/fincat/presheaf.hpp"
#include "aset/fincat/slice.hpp"
#include "aset/fincat/universal.hpp"
#include "support/oracles.hpp"

using namespace aset;
using aset::oracle::power;

namespace {

std::vector<FinMap> maps_up_to(std::size_t bound) {
  FinSet c;
  std::vector<FinMap> out;
  for (std::size_t a = 0; a <= bound; ++a)
    for (std::size_t b = 0; b <= bound; ++b)
      for (auto& f : c.hom(a, b)) out.push_back(f);
  return out;
}

}  // namespace

TEST(FinSet, HomSizesArePowers) {
  FinSet c;
  for (std::size_t a = 0; a <= 4; ++a)
    for (std::size_t b = 0; b <= 4; ++b) EXPECT_EQ(c.hom(a, b).size(), power(b, a)) << a << "->" << b;
}

TEST(FinSet, HomRefusesHugeSets) {
  FinSet c(FinSet::Limits{1000, 22});
  EXPECT_THROW(c.hom(10, 10), ResourceBound);
}

TEST(FinSet, CategoryLaws) {
  FinSet c;
  auto ms = maps_up_to(2);
  for (const auto& f : ms) {
    EXPECT_EQ(c.compose(c.identity(f.cod), f), f);
    EXPECT_EQ(c.compose(f, c.identity(f.dom)), f);
    for (const auto& g : c.hom(f.cod, 2))
      for (const auto& h : c.hom(2, 2)) EXPECT_EQ(c.compose(h, c.compose(g, f)), c.compose(c.compose(h, g), f));
  }
  EXPECT_THROW(c.compose(make_map(2, 1, {0, 0}), make_map(1, 1, {0})), CompositionError);
}

TEST(FinSet, MonosAndCoversAreInjectionsAndSurjections) {
  FinSet c;
  for (const auto& f : maps_up_to(3)) {
    EXPECT_EQ(c.is_mono(f), oracle::injective(f)) << describe_map(f);
    EXPECT_EQ(c.is_cover(f), oracle::surjective(f)) << describe_map(f);
  }
}

TEST(FinSet, PullbackCountsMatchingPairs) {
  FinSet c;
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (std::size_t d = 0; d <= 2; ++d)
        for (const auto& f : c.hom(b, a))
          for (const auto& g : c.hom(d, a)) {
            std::size_t pairs = 0;
            for (std::size_t x = 0; x < b; ++x)
              for (std::size_t y = 0; y < d; ++y) pairs += f.table[x] == g.table[y];
            auto cone = c.pullback(f, g);
            EXPECT_EQ(cone.apex, pairs);
            EXPECT_EQ(verify_pullback(c, f, g, cone, c.objects(2), 1u << 20), SearchResult::kHolds);
          }
}

TEST(FinSet, WrongConeIsNotAPullback) {
  FinSet c;
  auto f = c.to_terminal(2);
  auto g = c.to_terminal(2);
  // the diagonal commutes but misses pairs
  Cone<FinSet> diag{2, c.identity(2), c.identity(2)};
  EXPECT_EQ(verify_pullback(c, f, g, diag, c.objects(2), 1u << 20), SearchResult::kFails);
  EXPECT_EQ(verify_pullback(c, f, g, c.pullback(f, g), c.objects(3), 3), SearchResult::kInconclusive);
}

TEST(FinSet, ProductNumbering) {
  FinSet c;
  auto p = c.product(2, 3);
  ASSERT_EQ(p.apex, 6u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(p.first.table[i * 3 + j], i);
      EXPECT_EQ(p.second.table[i * 3 + j], j);
    }
}

TEST(FinSet, ImageFactorization) {
  FinSet c;
  for (const auto& f : maps_up_to(3)) {
    auto im = c.image(f);
    EXPECT_TRUE(c.is_cover(im.cover));
    EXPECT_TRUE(c.is_mono(im.mono));
    EXPECT_EQ(c.compose(im.mono, im.cover), f);
  }
}

TEST(FinSet, CoproductCopair) {
  FinSet c;
  auto k = c.coproduct(2, 3);
  EXPECT_EQ(k.apex, 5u);
  for (const auto& f : c.hom(2, 2))
    for (const auto& g : c.hom(3, 2)) {
      auto h = c.copair(k, f, g);
      EXPECT_EQ(c.compose(h, k.first), f);
      EXPECT_EQ(c.compose(h, k.second), g);
    }
}

TEST(FinSet, SumArrowIsFunctorial) {
  FinSet c;
  auto f = make_map(2, 1, {0, 0});
  auto g = make_map(1, 3, {2});
  auto s = sum_arrow(c, f, g);
  EXPECT_EQ(s.dom, 3u);
  EXPECT_EQ(s.cod, 4u);
  EXPECT_EQ(sum_arrow(c, c.identity(2), c.identity(3)), c.identity(5));
}

TEST(FinSet, QuotientHasTheRelationAsKernel) {
  FinSet c;
  for (std::size_t n = 0; n <= 4; ++n) {
    auto xx = c.product(n, n).apex;
    for (const auto& s : c.subobjects(xx)) {
      if (!is_equivalence_relation(c, n, s)) continue;
      auto q = c.quotient(n, s);
      EXPECT_TRUE(c.is_cover(q));
      EXPECT_EQ(kernel_pair(c, q), s);
    }
  }
}

TEST(FinSet, EquivalenceRelationsAreCountedByBellNumbers) {
  FinSet c;
  const std::size_t bell[] = {1, 1, 2, 5, 15};
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t count = 0;
    for (const auto& s : c.subobjects(n * n)) count += is_equivalence_relation(c, n, s);
    EXPECT_EQ(count, bell[n]);
  }
}

TEST(FinSet, QuantifiersAreAdjoints) {
  FinSet c;
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& f : c.hom(a, b))
        for (const auto& s : c.subobjects(a)) {
          auto ex = c.sub_exists(f, s);
          auto all = c.sub_forall(f, s);
          EXPECT_EQ(all, forall_along(c, f, s));
          for (const auto& t : c.subobjects(b)) {
            EXPECT_EQ(c.sub_leq(b, ex, t), c.sub_leq(a, s, c.sub_pullback(f, t)));
            EXPECT_EQ(c.sub_leq(b, t, all), c.sub_leq(a, c.sub_pullback(f, t), s));
          }
        }
}

TEST(FinSet, PiCountsSections) {
  FinSet c;
  // f: 2 -> 1 and p with fibres 2 and 3: 6 sections
  auto f = make_map(2, 1, {0, 0});
  auto p = make_map(5, 2, {0, 0, 1, 1, 1});
  EXPECT_EQ(c.pi_along(f, p).pi.dom, 6u);
}

TEST(FinSet, PiIsRightAdjointToPullback) {
  FinSet c;
  std::size_t bad = 0, total = 0;
  for (std::size_t x = 0; x <= 2; ++x)
    for (std::size_t y = 0; y <= 2; ++y)
      for (const auto& f : c.hom(x, y))
        for (std::size_t pp = 0; pp <= 3; ++pp)
          for (const auto& p : c.hom(pp, x)) {
            auto pd = c.pi_along(f, p);
            for (std::size_t tt = 0; tt <= 2; ++tt)
              for (const auto& t : c.hom(tt, y)) {
                ++total;
                std::size_t lhs = 0, rhs = 0;
                for (const auto& h : c.hom(tt, pd.pi.dom)) lhs += c.compose(pd.pi, h) == t;
                auto pb = c.pullback(t, f);
                for (const auto& h : c.hom(pb.apex, pp)) rhs += c.compose(p, h) == pb.second;
                bad += lhs != rhs;
              }
          }
  EXPECT_GT(total, 100u);
  EXPECT_EQ(bad, 0u);
}

TEST(FinSet, ParseAndDescribeRoundTrip) {
  for (const auto& f : maps_up_to(3)) EXPECT_EQ(parse_map(describe_map(f)), f);
  EXPECT_THROW(parse_map("2->1 [0,3]"), Error);
  EXPECT_THROW(parse_map("nonsense"), Error);
}

TEST(SubobjectLattice, FinSetLatticesAreBoolean) {
  FinSet c;
  for (std::size_t n = 0; n <= 4; ++n) {
    SubobjectLattice<FinSet> l(c, n);
    EXPECT_EQ(l.size(), power(2, n));
    EXPECT_TRUE(l.is_boolean());
    EXPECT_TRUE(l.satisfies_heyting_adjunction());
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j) {
        EXPECT_EQ(l.element(l.meet(i, j)), intersect(l.element(i), l.element(j)));
        EXPECT_EQ(l.element(l.join(i, j)), unite(l.element(i), l.element(j)));
        EXPECT_EQ(l.element(l.implies(i, j)), c.sub_implies(n, l.element(i), l.element(j)));
      }
  }
}

TEST(SubobjectLattice, RefusesLargeBases) {
  FinSet c;
  EXPECT_THROW(SubobjectLattice<FinSet>(c, 9, 256), ResourceBound);
}

TEST(FiniteCategory, BuiltinsHaveExpectedShape) {
  auto a = FiniteCategory::arrow_category();
  EXPECT_EQ(a.object_count(), 2u);
  EXPECT_EQ(a.arrow_count(), 3u);
  auto ch = FiniteCategory::chain(3);
  EXPECT_EQ(ch.arrow_count(), 6u);
  EXPECT_EQ(FiniteCategory::discrete(4).arrow_count(), 4u);
  EXPECT_EQ(FiniteCategory::terminal_category().arrow_count(), 1u);
}

TEST(FiniteCategory, RejectsBadTables) {
  // f: a -> b, g: b -> a with no composite given
  std::vector<ArrowInfo> arrows = {{"f", 0, 1}, {"g", 1, 0}};
  EXPECT_THROW(FiniteCategory({"a", "b"}, arrows, {}), PreconditionError);
  EXPECT_THROW(FiniteCategory({"a"}, {{"f", 0, 3}}, {}), PreconditionError);
  EXPECT_THROW(FiniteCategory({"a"}, {{"id_a", 0, 0}}, {}), PreconditionError);
  // e . e = e on one object is fine; e . e = id is fine too; e . e conflicting is not
  EXPECT_NO_THROW(FiniteCategory({"a"}, {{"e", 0, 0}}, {{"e", "e", "e"}}));
  EXPECT_THROW(FiniteCategory({"a"}, {{"e", 0, 0}}, {{"e", "e", "e"}, {"e", "e", "id_a"}}), PreconditionError);
}

TEST(FiniteCategory, RejectsNonAssociativeTables) {
  // two idempotents on one object whose products disagree by bracketing
  std::vector<ArrowInfo> arrows = {{"e", 0, 0}, {"f", 0, 0}};
  std::vector<Composite> comp = {{"e", "e", "e"}, {"f", "f", "f"}, {"e", "f", "e"}, {"f", "e", "e"}};
  EXPECT_NO_THROW(FiniteCategory({"a"}, arrows, comp));
  // (e e) e = f e = e but e (e e) = e f = f
  std::vector<Composite> bad = {{"e", "e", "f"}, {"f", "f", "f"}, {"e", "f", "f"}, {"f", "e", "e"}};
  EXPECT_THROW(FiniteCategory({"a"}, arrows, bad), PreconditionError);
}

TEST(FiniteCategory, CapabilitiesOfChainsAndDiscrete) {
  auto caps = FiniteCategory::chain(3).verify_capabilities();
  ASSERT_EQ(caps.size(), 4u);
  for (const auto& r : caps) EXPECT_TRUE(r.holds) << r.capability << ": " << r.witness;
  auto d = FiniteCategory::discrete(2).verify_capabilities();
  EXPECT_FALSE(d[0].holds);
  EXPECT_EQ(d[0].witness, "no terminal object");
}

TEST(Presheaf, CatalogMatchesCount) {
  PresheafCategory p(FiniteCategory::arrow_category());
  // X(1) -> X(0) with both sizes at most 2: sum of a^b
  std::size_t want = 0;
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) want += power(a, b);
  EXPECT_EQ(p.objects(2).size(), want);
}

TEST(Presheaf, HeytingOperationsMatchTheLattice) {
  PresheafCategory p(FiniteCategory::arrow_category());
  std::size_t checked = 0;
  for (const auto& x : p.objects(2)) {
    if (p.cardinality(x) > 4) continue;
    SubobjectLattice<PresheafCategory> l(p, x);
    EXPECT_TRUE(l.satisfies_heyting_adjunction());
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j) {
        ++checked;
        EXPECT_EQ(p.sub_implies(x, l.element(i), l.element(j)), l.element(l.implies(i, j)));
        EXPECT_EQ(p.sub_meet(x, l.element(i), l.element(j)), l.element(l.meet(i, j)));
        EXPECT_EQ(p.sub_join(x, l.element(i), l.element(j)), l.element(l.join(i, j)));
      }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Presheaf, TerminalIsNotBoolean) {
  PresheafCategory p(FiniteCategory::arrow_category());
  SubobjectLattice<PresheafCategory> l(p, p.terminal());
  EXPECT_EQ(l.size(), 3u);
  EXPECT_FALSE(l.is_boolean());
}

TEST(Presheaf, UniversalQuantifierMatchesGaloisSearch) {
  PresheafCategory p(FiniteCategory::arrow_category());
  auto objs = p.objects(2);
  std::size_t checked = 0;
  for (const auto& x : objs)
    for (const auto& y : objs) {
      if (p.cardinality(x) > 3 || p.cardinality(y) > 3) continue;
      for (const auto& f : p.hom(x, y))
        for (const auto& s : p.subobjects(x)) {
          ++checked;
          EXPECT_EQ(p.sub_forall(f, s), forall_along(p, f, s));
        }
    }
  EXPECT_GT(checked, 50u);
}

TEST(Presheaf, PiIsRightAdjointToPullback) {
  PresheafCategory p(FiniteCategory::arrow_category());
  auto objs = p.objects(1);
  std::size_t bad = 0, total = 0;
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& f : p.hom(x, y))
        for (const auto& pp : p.objects(2)) {
          if (p.cardinality(pp) > 3) continue;
          for (const auto& q : p.hom(pp, x)) {
            auto pd = p.pi_along(f, q);
            for (const auto& tt : objs)
              for (const auto& t : p.hom(tt, y)) {
                ++total;
                std::size_t lhs = 0, rhs = 0;
                for (const auto& h : p.hom(tt, pd.pi.dom)) lhs += p.compose(pd.pi, h) == t;
                auto pb = p.pullback(t, f);
                for (const auto& h : p.hom(pb.apex, pp)) rhs += p.compose(q, h) == pb.second;
                bad += lhs != rhs;
              }
          }
        }
  EXPECT_GT(total, 30u);
  EXPECT_EQ(bad, 0u);
}

TEST(Presheaf, NaturalityIsChecked) {
  PresheafCategory p(FiniteCategory::arrow_category());
  Presheaf two{{2, 2}, {{0, 1}, {0, 1}, {1, 0}}};  // restriction along u swaps
  EXPECT_TRUE(p.is_presheaf(two));
  Presheaf bad{{1, 2}, {{0}, {0, 1}, {0, 3}}};
  EXPECT_FALSE(p.is_presheaf(bad));
}

TEST(Slice, SubobjectsFormHeytingAlgebras) {
  FinSet c;
  Slice<FinSet> s(c, 2);
  std::size_t objects = 0;
  for (const auto& x : s.objects(3)) {
    ++objects;
    SubobjectLattice<Slice<FinSet>> l(s, x);
    EXPECT_TRUE(l.satisfies_heyting_adjunction());
  }
  EXPECT_EQ(objects, 1u + 2 + 4 + 8);
}

TEST(Slice, PullbacksLiveOverTheBase) {
  FinSet c;
  Slice<FinSet> s(c, 2);
  auto p = make_map(3, 2, {0, 1, 1});
  auto q = make_map(2, 2, {1, 1});
  auto k = s.product(p, q);
  EXPECT_EQ(c.dom(k.apex), 2u * 2);  // fibre over 1 is 2 * 2, over 0 is 1 * 0
  for (const auto& h : s.hom(p, s.terminal())) EXPECT_EQ(h.map, p);
}
