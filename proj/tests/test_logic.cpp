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

#include <string>
#include <vector>

#include "aset/fincat/lattice.hpp"
#include "aset/fincat/presheaf.hpp"
#include "aset/logic/eval.hpp"
#include "aset/logic/parser.hpp"
#include "aset/logic/schemas.hpp"
#include "support/oracles.hpp"

using namespace aset;
using namespace aset::logic;

namespace {

const std::vector<std::string> kCorpus = {
    "true",
    "false",
    "p",
    "x = y",
    "x in a",
    "R(x, y)",
    "R()",
    "~p",
    "~~p",
    "p /\\ q",
    "p \\/ q",
    "p -> q",
    "p <-> q",
    "p /\\ q /\\ r",
    "p \\/ q \\/ r",
    "p -> q -> r",
    "(p -> q) -> r",
    "p <-> q <-> r",
    "(p <-> q) <-> r",
    "p /\\ (q \\/ r)",
    "(p \\/ q) /\\ r",
    "~(p /\\ q)",
    "~p \\/ q",
    "forall x. P(x)",
    "exists x. P(x)",
    "forall x : A. P(x)",
    "exists y : B. R(x, y)",
    "forall x in a. x in b",
    "exists x in a. x = y",
    "B(x in a, y in b) R(x, y)",
    "B(x in a, y in b). R(x, y) /\\ p",
    "forall x. forall y. x = y -> y = x",
    "(forall x. P(x)) /\\ q",
    "(exists x. P(x)) -> q",
    "q -> exists x. P(x)",
    "~forall x. P(x)",
    "forall x ~P(x)",
    "forall x P(x) /\\ q",
    "exists x in a. forall y in x. y in a",
    "forall a. forall b. (forall x. x in a <-> x in b) -> a = b",
    "exists e. forall x. ~x in e",
    "forall x. forall y. exists z. x in z /\\ y in z",
    "forall a. exists u. forall x. x in u <-> (exists y in a. x in y)",
    "p /\\ ~q -> r \\/ s",
    "(p -> q) /\\ (q -> p)",
    "x' = x_1",
    "P(x) <-> ~~P(x)",
    "(forall x : A. P(x)) \\/ (exists x : A. ~P(x))",
    "forall x in a. (exists y in b. R(x, y)) /\\ p",
    "~(forall x in a. false)",
};

FormulaPtr rt(const FormulaPtr& f) { return parse(to_string(f)); }

}  // namespace

TEST(Parser, CorpusRoundTrips) {
  std::size_t checked = 0;
  for (const auto& s : kCorpus) {
    auto f = parse(s);
    EXPECT_TRUE(same(f, rt(f))) << s << " printed as " << to_string(f);
    EXPECT_EQ(to_string(rt(f)), to_string(f));
    ++checked;
  }
  // pairwise combinations through every connective
  for (std::size_t i = 0; i < kCorpus.size(); i += 3)
    for (std::size_t j = 1; j < kCorpus.size(); j += 4) {
      auto a = parse(kCorpus[i]);
      auto b = parse(kCorpus[j]);
      for (auto k : {Kind::kAnd, Kind::kOr, Kind::kImplies, Kind::kIff}) {
        auto f = binary(k, a, b);
        EXPECT_TRUE(same(f, rt(f))) << to_string(f);
        ++checked;
      }
      auto g = neg(forall("z", binary(Kind::kAnd, a, b)));
      EXPECT_TRUE(same(g, rt(g))) << to_string(g);
      ++checked;
    }
  EXPECT_GE(checked, 100u);
}

TEST(Parser, GeneratedFormulasRoundTrip) {
  for (std::uint32_t seed = 0; seed < 200; ++seed) {
    oracle::FormulaGen gen(seed);
    auto f = gen.make({{"x", "A"}, {"y", "B"}}, 5);
    EXPECT_TRUE(same(f, rt(f))) << to_string(f);
  }
}

TEST(Parser, Precedence) {
  EXPECT_TRUE(same(parse("p /\\ q \\/ r"), disj(conj(rel("p", {}), rel("q", {})), rel("r", {}))));
  EXPECT_TRUE(same(parse("p -> q -> r"), implies(rel("p", {}), implies(rel("q", {}), rel("r", {})))));
  EXPECT_TRUE(same(parse("~p /\\ q"), conj(neg(rel("p", {})), rel("q", {}))));
  // a dot runs to the end, no dot binds like negation
  EXPECT_TRUE(same(parse("forall x. P(x) /\\ q"), forall("x", conj(rel("P", {"x"}), rel("q", {})))));
  EXPECT_TRUE(same(parse("forall x P(x) /\\ q"), conj(forall("x", rel("P", {"x"})), rel("q", {}))));
  EXPECT_TRUE(same(parse("p <-> q -> r"), iff(rel("p", {}), implies(rel("q", {}), rel("r", {})))));
}

TEST(Parser, CommentsAndWhitespace) {
  EXPECT_TRUE(same(parse("  p   /\\\n q  # trailing"), conj(rel("p", {}), rel("q", {}))));
}

TEST(Parser, ErrorsCarryPositions) {
  struct Case {
    const char* text;
    std::size_t line, column;
  };
  for (const auto& c : {Case{"P(x", 1, 4}, Case{"p /\\", 1, 5}, Case{"p $ q", 1, 3}, Case{"forall . p", 1, 8},
                        Case{"p\n  /\\ )", 2, 6}, Case{"p q", 1, 3}, Case{"x =", 1, 4}}) {
    try {
      parse(c.text);
      ADD_FAILURE() << "no error for " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text << ": " << e.what();
      EXPECT_EQ(e.column(), c.column) << c.text << ": " << e.what();
    }
  }
}

TEST(Parser, OffsetsShiftPositions) {
  try {
    parse("p /\\", 7, 10);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 14u);
  }
}

TEST(Formula, FreeVariables) {
  EXPECT_EQ(free_vars(*parse("forall x. R(x, y) /\\ x in a")), (std::vector<std::string>{"y", "a"}));
  EXPECT_EQ(free_vars(*parse("exists x in a. x = b")), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(free_vars(*parse("forall a. exists x in a. true")).empty());
  EXPECT_EQ(free_vars(*parse("B(x in a, y in b) R(x, y, z)")), (std::vector<std::string>{"a", "b", "z"}));
}

TEST(Formula, SubstitutionAvoidsCapture) {
  auto f = parse("forall y. R(x, y)");
  auto g = substitute(f, "x", "y");
  auto fv = free_vars(*g);
  EXPECT_EQ(fv, std::vector<std::string>{"y"});
  EXPECT_NE(g->var, "y");
  // bound occurrences are left alone
  EXPECT_TRUE(same(substitute(parse("forall x. P(x)"), "x", "z"), parse("forall x. P(x)")));
  EXPECT_TRUE(same(substitute(parse("P(x) /\\ x in a"), "x", "z"), parse("P(z) /\\ z in a")));
}

TEST(Formula, BoundedAndDepth) {
  EXPECT_TRUE(is_bounded(*parse("forall x in a. exists y in x. y = a")));
  EXPECT_FALSE(is_bounded(*parse("forall x in a. exists y. y = a")));
  EXPECT_EQ(depth(*parse("p")), 1u);
  EXPECT_EQ(depth(*parse("~(p /\\ q)")), 3u);
}

TEST(Formula, BiquantExpansion) {
  auto b = parse("B(x in a, y in b) R(x, y)");
  auto e = expand_biquant(*b);
  EXPECT_TRUE(same(e, parse("(forall x in a. exists y in b. R(x, y)) /\\ (forall y in b. exists x in a. R(x, y))")));
}

// -- evaluation ---------------------------------------------------------------------

TEST(KripkeJoyal, AgreesWithClassicalEvaluation) {
  FinSet c;
  const std::vector<SortedVar> ctx = {{"x", "A"}, {"y", "B"}};
  std::size_t informative = 0;
  for (std::uint32_t seed = 0; seed < 300; ++seed) {
    auto model = oracle::random_model(seed * 7 + 3);
    auto env = oracle::to_structure(c, model);
    oracle::FormulaGen gen(seed + 5000);
    auto phi = gen.make(ctx, 5);
    auto cl = oracle::Classical(model).truth(*phi, ctx);
    EXPECT_EQ(kripke_joyal_eval(phi, env, ctx), cl) << to_string(phi);
    informative += !is_full(cl) && !is_empty(cl);
  }
  EXPECT_GT(informative, 60u);
}

TEST(KripkeJoyal, ClosedFormulas) {
  FinSet c;
  auto model = oracle::random_model(11);
  auto env = oracle::to_structure(c, model);
  oracle::Classical cl(model);
  for (const char* s : {"forall x : A. x = x", "exists x : A. exists y : B. R(x, y) \\/ ~R(x, y)",
                        "forall y : B. forall y' : B. E(y, y') -> E(y, y')", "forall x : A. P(x)",
                        "exists y : B. forall x in y. P(x)"}) {
    auto f = parse(s);
    EXPECT_EQ(valid(f, env), cl.holds(*f, {})) << s;
  }
  EXPECT_TRUE(valid(parse("forall x. x = x"), env));  // default sort A
}

TEST(KripkeJoyal, SortErrorsAreReported) {
  FinSet c;
  auto env = oracle::to_structure(c, oracle::random_model(1));
  EXPECT_THROW(kripke_joyal_eval(parse("Q(x)"), env, {{"x", "A"}}), ParseError);
  EXPECT_THROW(kripke_joyal_eval(parse("R(y, x)"), env, {{"x", "A"}, {"y", "B"}}), ParseError);
  EXPECT_THROW(kripke_joyal_eval(parse("x = y"), env, {{"x", "A"}, {"y", "B"}}), ParseError);
  EXPECT_THROW(kripke_joyal_eval(parse("P(z)"), env, {{"x", "A"}}), ParseError);
  EXPECT_THROW(kripke_joyal_eval(parse("forall z : C. true"), env), ParseError);
}

TEST(KripkeJoyal, ContextCap) {
  FinSet c;
  auto env = oracle::to_structure(c, oracle::random_model(1));
  EXPECT_THROW(kripke_joyal_eval(parse("forall u : B. forall v : B. E(u, v)"), env, {}, 4), ResourceBound);
}

// In presheaves on the arrow the middle truth value refutes excluded
// middle while its double negation holds.
TEST(KripkeJoyal, PresheavesAreIntuitionistic) {
  PresheafCategory p(FiniteCategory::arrow_category());
  auto one = p.terminal();
  SubobjectLattice<PresheafCategory> lat(p, one);
  Subset middle;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (i != lat.top() && i != lat.bottom()) middle = lat.element(i);
  Structure<PresheafCategory> env(p);
  env.add_sort("X", one);
  env.add_relation("P", {"X"}, middle);
  EXPECT_FALSE(valid(parse("forall x. P(x) \\/ ~P(x)"), env));
  EXPECT_TRUE(valid(parse("forall x. ~~(P(x) \\/ ~P(x))"), env));
  EXPECT_FALSE(valid(parse("forall x. ~~P(x) -> P(x)"), env));
  EXPECT_TRUE(valid(parse("forall x. P(x) -> ~~P(x)"), env));
}

TEST(Structure, RejectsMisshapedData) {
  FinSet c;
  Structure<FinSet> s(c);
  s.add_sort("A", 2);
  EXPECT_THROW(s.add_sort("A", 3), PreconditionError);
  EXPECT_THROW(s.add_relation("R", {"A", "A"}, Subset(3, false)), PreconditionError);
  EXPECT_THROW(s.set_default_sort("Z"), Error);
  s.add_sort("B", 3);
  EXPECT_THROW(s.add_coercion("A", "B", make_map(3, 2, {0, 0, 1})), PreconditionError);
  EXPECT_NO_THROW(s.add_coercion("A", "B", make_map(2, 3, {0, 2})));
}

TEST(Structure, CoercionsLetSortsMix) {
  FinSet c;
  Structure<FinSet> s(c);
  s.add_sort("A", 2).add_sort("B", 3).add_coercion("A", "B", make_map(2, 3, {0, 2}));
  Subset r(3, false);
  r[2] = true;
  s.add_relation("Q", {"B"}, r);
  // Q holds of the image of the second element of A only
  EXPECT_EQ(kripke_joyal_eval(parse("Q(x)"), s, {{"x", "A"}}), (Subset{false, true}));
  EXPECT_EQ(kripke_joyal_eval(parse("x = y"), s, {{"x", "A"}, {"y", "B"}}),
            (Subset{true, false, false, false, false, true}));
}

// -- schemas ------------------------------------------------------------------------

TEST(Schemas, NamesAndParameters) {
  for (std::size_t i = 0; i < kSchemaNames.size(); ++i) {
    auto id = static_cast<SchemaId>(i);
    EXPECT_EQ(parse_schema(to_string(id)), id);
  }
  EXPECT_THROW(parse_schema("choice"), Error);
  EXPECT_THROW(instantiate_schema(SchemaId::kBoundedSeparation), PreconditionError);
  auto ext = instantiate_schema(SchemaId::kExtensionality);
  EXPECT_TRUE(free_vars(*ext).empty());
  EXPECT_TRUE(same(ext, rt(ext)));
}

TEST(Schemas, InstancesAreClosedAndReparse) {
  for (std::size_t i = 0; i < kSchemaNames.size(); ++i) {
    auto id = static_cast<SchemaId>(i);
    auto vars = schema_parameter_vars(id);
    FormulaPtr phi = nullptr;
    if (!vars.empty()) {
      FormulaPtr body = top();
      for (std::size_t k = 0; k + 1 < vars.size(); k += 2) body = conj(body, mem(vars[k], vars[k + 1]));
      phi = body;
    }
    auto f = instantiate_schema(id, phi);
    EXPECT_TRUE(free_vars(*f).empty()) << to_string(id) << ": " << to_string(f);
    EXPECT_TRUE(same(f, rt(f))) << to_string(id);
  }
}
