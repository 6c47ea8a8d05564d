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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "aset/cli/commands.hpp"
#include "aset/cli/formats.hpp"
#include "aset/cli/report.hpp"

using namespace aset;
using namespace aset::cli;

namespace {

const std::string kFixtures = ASET_FIXTURE_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  std::string cmd = std::string(ASET_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Where did parsing fail? -1 if it did not.
std::pair<long, long> error_position(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return {static_cast<long>(e.line()), static_cast<long>(e.column())};
  }
  return {-1, -1};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("aset-test-" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST(Formats, Tokenizer) {
  auto t = tokenize("cover 2 : {0<2, 1<2}  # comment", 7);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[3].text, "{0<2, 1<2}");
  EXPECT_EQ(t[3].column, 11u);
  EXPECT_TRUE(tokenize("   # only a comment", 1).empty());
  EXPECT_THROW(tokenize("restrict u [0,1", 1), ParseError);
  EXPECT_THROW(tokenize("size 0 1)", 1), ParseError);
}

TEST(Formats, ParsesSitesAndPresheaves) {
  auto doc = load_document(kFixtures + "/presheaves/arrow.psh");
  ASSERT_TRUE(doc.site);
  EXPECT_EQ(doc.presheaves.size(), 8u);
  EXPECT_TRUE(doc.site->basis.has_value());
  EXPECT_EQ(doc.presheaves[1].name, "swap");
  EXPECT_EQ(doc.presheaves[1].value.sizes, (std::vector<std::size_t>{2, 2}));

  auto vee = load_document(kFixtures + "/sites/explicit-vee.site");
  ASSERT_TRUE(vee.category);
  EXPECT_EQ(vee.category->object_count(), 3u);
  // same coverage as the builtin dense topology, up to object names
  auto builtin = sheaves::dense_vee_site();
  for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(vee.site->cov[a].size(), builtin.cov[a == 2 ? 2 : a].size());
}

TEST(Formats, ErrorPositions) {
  struct Case {
    std::string text;
    long line, column;
  };
  const std::vector<Case> cases = {
      {"builtin chain 3\nsite s\ncover 7 : maximal\n", 3, 7},
      {"builtin arrow\nsite s\ncover 1 : {v}\n", 3, 11},
      {"builtin arrow\npresheaf p\nsize 0 1\nsize 1 1\nrestrict u [4]\n", 5, 12},
      {"builtin nonsense\n", 1, 9},
      {"class fibre<x\n", 1, 7},
      {"budget -1\n", 1, 8},
      {"# comment\n\nfrobnicate\n", 3, 1},
  };
  for (const auto& c : cases) {
    auto [line, col] = error_position(c.text);
    EXPECT_EQ(line, c.line) << c.text;
    EXPECT_EQ(col, c.column) << c.text;
  }
}

TEST(Formats, LoadPrefixesPath) {
  auto path = temp_file("bad.site", "builtin chain 2\nsite s\ncover 0 : {nope}\n");
  try {
    load_document(path);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).rfind(path + ":3:", 0), 0u) << e.what();
  }
  EXPECT_THROW(load_document("/nonexistent/file.site"), Error);
}

TEST(Formats, Expectations) {
  auto m = parse_expectations("# c\nA1 PASSED\nWE REFUTED  # trailing\n");
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(m.at("WE"), "REFUTED");
  EXPECT_THROW(parse_expectations("A1 PASSED\nA1 REFUTED\n"), ParseError);
  EXPECT_THROW(parse_expectations("A1\n"), ParseError);
}

TEST(Formats, FormulaFiles) {
  auto ff = load_formula_file(kFixtures + "/formulas/order.fml");
  EXPECT_EQ(ff.sorts.size(), 1u);
  EXPECT_EQ(ff.formulas.size(), 6u);
  EXPECT_EQ(ff.formulas[0].second, 8u);
  try {
    parse_formula_file("sort X 2\n---\nforall x. (x = x\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_formula_file("sort X 2\nsort X 3\n---\n"), ParseError);
  EXPECT_THROW(parse_formula_file("sort X 2\nrelation r X : 5\n---\n"), ParseError);
}

TEST(Report, ExpectationSemantics) {
  Report rep;
  rep.records = {{"a", "PASSED", Status::kPass}, {"b", "REFUTED", Status::kRefuted},
                 {"c", "INCONCLUSIVE", Status::kInconclusive}, {"d", "REFUTED", Status::kRefuted}};
  rep.apply_expectations({{"b", "REFUTED"}, {"c", "PASSED"}, {"a", "REFUTED"}, {"z", "REFUTED"}, {"y", "PASSED"}});
  EXPECT_TRUE(rep.records[0].violation);   // expected refutation, got a pass
  EXPECT_FALSE(rep.records[1].violation);  // expected and got
  EXPECT_FALSE(rep.records[2].violation);  // inconclusive is not a refutation
  EXPECT_TRUE(rep.records[3].violation);   // refuted with no expectation
  ASSERT_EQ(rep.records.size(), 5u);
  EXPECT_EQ(rep.records[4].id, "z");
  EXPECT_EQ(rep.records[4].outcome, "MISSING");
  EXPECT_EQ(rep.violations(), 3u);
  EXPECT_EQ(rep.exit_code(), 1);
  EXPECT_EQ(rep.notes.size(), 2u);  // c differed, y never ran
}

TEST(Report, JsonRoundTrip) {
  Options opt;
  opt.budget = 2;
  Report rep = check_axioms(load_document(kFixtures + "/suites/finset-fibre3.suite"), opt);
  rep.apply_expectations(parse_expectations(read_file(kFixtures + "/suites/finset-fibre3.expected")));
  for (bool timing : {true, false}) {
    rep.timing = timing;
    Json j = to_json(rep);
    Report back = report_from_json(j);
    EXPECT_EQ(to_json(back), j);
    EXPECT_EQ(j.at("exit_code"), rep.exit_code());
  }
  EXPECT_THROW(parse_status("maybe"), PreconditionError);
}

TEST(Commands, DeterministicWithoutTiming) {
  auto doc = load_document(kFixtures + "/suites/finset-mono.suite");
  Options opt;
  Report a = check_axioms(doc, opt), b = check_axioms(doc, opt);
  a.timing = b.timing = false;
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(render_text(a), render_text(b));
}

TEST(Commands, FixturesMeetExpectations) {
  for (const char* name : {"arrow", "bad-local", "dense-vee", "explicit-vee", "not-a-sieve", "trivial-chain3"}) {
    const std::string base = kFixtures + "/sites/" + name;
    Report rep = cli::validate_site(load_document(base + ".site"));
    auto want = parse_expectations(read_file(base + ".expected"));
    rep.apply_expectations(want);
    EXPECT_EQ(rep.violations(), 0u) << name;
    for (const auto& r : rep.records)
      if (want.count(r.id)) {
        EXPECT_EQ(r.outcome, want.at(r.id)) << name << " " << r.id;
      }
  }
}

TEST(Commands, EvalAgreesWithHandCount) {
  auto rep = cli::eval(load_formula_file(kFixtures + "/formulas/order.fml"), Options{});
  ASSERT_EQ(rep.records.size(), 6u);
  EXPECT_EQ(rep.records[0].outcome, "VALID");
  EXPECT_EQ(rep.records[1].outcome, "VALID");
  EXPECT_EQ(rep.records[2].outcome, "VALID");
  EXPECT_EQ(rep.records[3].outcome, "VALID");
  // x with a strict successor: 0 and 1
  EXPECT_EQ(rep.records[4].outcome, "SATISFIED-BY-2/3");
  // lt(x,y) or x = y: 6 of 9 pairs
  EXPECT_EQ(rep.records[5].outcome, "SATISFIED-BY-6/9");
}

TEST(Binary, ExitCodes) {
  auto ok = run_cli("validate-site " + kFixtures + "/sites/bad-local.site --no-timing");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("L"), std::string::npos);

  // the same refutations without an expectation file are violations
  auto no_expect = temp_file("empty.expected", "");
  auto bad = run_cli("validate-site " + kFixtures + "/sites/bad-local.site --expect " + no_expect);
  EXPECT_EQ(bad.code, 1) << bad.out;
  EXPECT_NE(bad.out.find("violation"), std::string::npos);

  EXPECT_EQ(run_cli("validate-site /nonexistent.site").code, 2);
  EXPECT_EQ(run_cli("no-such-command").code, 2);
  EXPECT_EQ(run_cli("check-axioms --budget 0 " + kFixtures + "/suites/finset-all.suite").code, 2);
  auto broken = temp_file("broken.suite", "class fibre<\n");
  auto r = run_cli("check-axioms " + broken);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find(broken + ":1:"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli("--version").code, 0);
}

TEST(Binary, JsonOutputParses) {
  auto r = run_cli("build-v --rank 3 --json --no-timing");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("command"), "build-v");
  EXPECT_EQ(j.at("exit_code"), 0);
  EXPECT_FALSE(j.at("records").empty());
  EXPECT_FALSE(j.at("records")[0].contains("wall_ms"));
}
