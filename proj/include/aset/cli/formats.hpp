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

#ifndef ASET_CLI_FORMATS_HPP_
#define ASET_CLI_FORMATS_HPP_

#include <cctype>
#include <cstddef>
#include <fstream>
#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "aset/core/errors.hpp"
#include "aset/fincat/finite_category.hpp"
#include "aset/fincat/finset.hpp"
#include "aset/fincat/presheaf.hpp"
#include "aset/logic/eval.hpp"
#include "aset/logic/parser.hpp"
#include "aset/sheaves/site.hpp"
#include "aset/smallmaps/map_class.hpp"
#include "aset/smallmaps/verdict.hpp"

// Line-oriented input files. One directive per line, `#` to end of line is
// a comment, tokens are separated by blanks except inside [...], {...} and
// (...) groups. docs/formats.md has the grammar.

namespace aset::cli {

struct Token {
  std::string text;
  std::size_t column = 1;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;

  const std::string& word(std::size_t i) const {
    if (i >= tokens.size()) throw ParseError("line ends too early", number, column_after());
    return tokens[i].text;
  }
  std::size_t column(std::size_t i) const { return i < tokens.size() ? tokens[i].column : column_after(); }
  std::size_t column_after() const { return tokens.empty() ? 1 : tokens.back().column + tokens.back().text.size(); }
  [[noreturn]] void fail(std::size_t i, const std::string& what) const { throw ParseError(what, number, column(i)); }
  void expect_size(std::size_t lo, std::size_t hi, const std::string& usage) const {
    if (tokens.size() < lo || tokens.size() > hi) fail(std::min(tokens.size(), hi), "expected: " + usage);
  }
};

inline std::vector<Token> tokenize(const std::string& raw, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    char ch = raw[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    Token t{"", i + 1};
    int depth = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == '#' && depth == 0) break;
      if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) break;
      if (c == '[' || c == '{' || c == '(') ++depth;
      if (c == ']' || c == '}' || c == ')') {
        if (depth == 0) throw ParseError(std::string("unbalanced '") + c + "'", line_no, i + 1);
        --depth;
      }
      t.text += c;
      ++i;
    }
    if (depth != 0) throw ParseError("unclosed bracket", line_no, t.column);
    out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<Line> split_lines(const std::string& text, std::size_t first_line = 1) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = first_line;
  while (std::getline(in, raw)) {
    Line l{n++, tokenize(raw, n - 1)};
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::size_t parse_count(const Line& l, std::size_t i) {
  const std::string& w = l.word(i);
  if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos) l.fail(i, "expected a number, got '" + w + "'");
  try {
    return std::stoul(w);
  } catch (const std::exception&) {
    l.fail(i, "number out of range: " + w);
  }
}

/// "[0,1,1]" -> {0,1,1}
inline std::vector<std::size_t> parse_table(const Line& l, std::size_t i) {
  const std::string& w = l.word(i);
  if (w.size() < 2 || w.front() != '[' || w.back() != ']') l.fail(i, "expected a table like [0,1]");
  std::vector<std::size_t> out;
  std::string body = w.substr(1, w.size() - 2), item;
  std::istringstream in(body);
  while (std::getline(in, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
    if (a == std::string::npos) {
      if (body.find_first_not_of(" \t") == std::string::npos) break;
      l.fail(i, "empty table entry");
    }
    item = item.substr(a, b - a + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos) l.fail(i, "bad table entry '" + item + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

/// "{a, b}" -> {"a","b"}
inline std::vector<std::string> parse_name_set(const Line& l, std::size_t i) {
  const std::string& w = l.word(i);
  if (w.size() < 2 || w.front() != '{' || w.back() != '}') l.fail(i, "expected a set like {f, g}");
  std::vector<std::string> out;
  std::string body = w.substr(1, w.size() - 2), item;
  std::istringstream in(body);
  while (std::getline(in, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

// -- categories -------------------------------------------------------------

inline FiniteCategory builtin_category(const Line& l, std::size_t i) {
  const std::string& w = l.word(i);
  if (w == "terminal") return FiniteCategory::terminal_category();
  if (w == "arrow") return FiniteCategory::arrow_category();
  if (w == "vee") {
    std::vector<std::vector<bool>> leq{{true, false, true}, {false, true, true}, {false, false, true}};
    return FiniteCategory::poset(3, leq, "vee");
  }
  if (w == "chain") return FiniteCategory::chain(parse_count(l, i + 1));
  if (w == "discrete") return FiniteCategory::discrete(parse_count(l, i + 1));
  l.fail(i, "unknown built-in category '" + w + "'");
}

/// Collects category directives; everything else is left for the caller.
class CategoryBuilder {
 public:
  bool accept(const Line& l) {
    const std::string& k = l.word(0);
    if (k == "category") {
      l.expect_size(2, 2, "category NAME");
      name_ = l.word(1);
    } else if (k == "builtin") {
      l.expect_size(2, 3, "builtin terminal|arrow|vee|chain N|discrete N");
      builtin_ = builtin_category(l, 1);
      builtin_line_ = l.number;
    } else if (k == "objects" || k == "object") {
      l.expect_size(2, 64, "objects A B ...");
      for (std::size_t i = 1; i < l.tokens.size(); ++i) objects_.push_back(l.word(i));
    } else if (k == "arrow") {
      // arrow NAME : A -> B
      l.expect_size(6, 6, "arrow NAME : DOM -> COD");
      if (l.word(2) != ":" || l.word(4) != "->") l.fail(2, "expected: arrow NAME : DOM -> COD");
      arrows_.push_back({l.word(1), object(l, 3), object(l, 5)});
    } else if (k == "compose") {
      // compose G F = H   meaning G . F = H
      l.expect_size(5, 5, "compose G F = H");
      if (l.word(3) != "=") l.fail(3, "expected '='");
      composites_.push_back({l.word(1), l.word(2), l.word(4)});
    } else if (k == "declare") {
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        const std::string& c = l.word(i);
        if (c == "finite-limits") caps_.finite_limits = true;
        else if (c == "regular") caps_.regular = true;
        else if (c == "sums") caps_.sums = true;
        else if (c == "heyting") caps_.heyting = true;
        else l.fail(i, "unknown capability '" + c + "'");
      }
    } else {
      return false;
    }
    seen_ = true;
    return true;
  }

  bool seen() const { return seen_; }

  FiniteCategory build() const {
    if (builtin_) {
      if (!objects_.empty() || !arrows_.empty()) throw ParseError("builtin category cannot be extended", builtin_line_, 1);
      return *builtin_;
    }
    if (objects_.empty()) throw Error("no category given");
    return FiniteCategory(objects_, arrows_, composites_, caps_, name_.empty() ? "category" : name_);
  }

 private:
  std::size_t object(const Line& l, std::size_t i) const {
    for (std::size_t o = 0; o < objects_.size(); ++o)
      if (objects_[o] == l.word(i)) return o;
    l.fail(i, "unknown object '" + l.word(i) + "'");
  }

  bool seen_ = false;
  std::string name_;
  std::optional<FiniteCategory> builtin_;
  std::size_t builtin_line_ = 0;
  std::vector<std::string> objects_;
  std::vector<ArrowInfo> arrows_;
  std::vector<Composite> composites_;
  Capabilities caps_;
};

inline std::size_t find_object(const FiniteCategory& c, const Line& l, std::size_t i) {
  auto o = c.find_object(l.word(i));
  if (!o) l.fail(i, "unknown object '" + l.word(i) + "'");
  return *o;
}

inline std::size_t find_arrow(const FiniteCategory& c, const Line& l, std::size_t i, const std::string& name) {
  if (auto a = c.find_arrow(name)) return *a;
  if (!name.empty() && name.find_first_not_of("0123456789") == std::string::npos) {
    std::size_t id = std::stoul(name);
    if (id < c.arrow_count()) return id;
  }
  l.fail(i, "unknown arrow '" + name + "'");
}

/// "{f, g}" as a set of arrows into `a`, or "maximal". The set is taken
/// as given, not closed up, so malformed coverages can be written down.
inline sheaves::Sieve parse_sieve(const FiniteCategory& c, std::size_t a, const Line& l, std::size_t i) {
  if (l.word(i) == "maximal") return sheaves::maximal_sieve(c, a);
  sheaves::Sieve s = 0;
  for (const auto& name : parse_name_set(l, i)) {
    std::size_t f = find_arrow(c, l, i, name);
    if (c.cod(f) != a) l.fail(i, "arrow " + name + " does not end at " + c.object_name(a));
    s |= sheaves::Sieve{1} << f;
  }
  return s;
}

// -- documents ------------------------------------------------------------------

struct NamedPresheaf {
  std::string name;
  Presheaf value;
  std::size_t line = 0;
};

struct SuiteSpec {
  std::string ambient = "finset";  // finset | presheaves | sheaves | ex
  std::vector<AxiomId> axioms;     // empty: the default list
  std::optional<Budget> budget;
  std::size_t slack = 1;
};

/// Everything that can appear in an input file. Which parts are required
/// depends on the command reading it.
struct Document {
  std::string path;
  std::optional<FiniteCategory> category;
  std::optional<sheaves::Site> site;
  std::vector<NamedPresheaf> presheaves;
  std::optional<MapClass<FinSet>> cls;
  SuiteSpec suite;
  std::string base = "finset";
  std::size_t base_bound = 3;
};

namespace detail {

inline MapClass<FinSet> table_class_from(const std::string& label, bool fallback,
                                         const std::map<std::string, bool>& rows) {
  return table_class<FinSet>(label, rows, fallback);
}

}  // namespace detail

/// Parses categories, sites, presheaves, classes and suite settings.
inline Document parse_document(const std::string& text, const std::string& path = "<input>") {
  Document doc;
  doc.path = path;
  auto lines = split_lines(text);
  CategoryBuilder cb;
  std::vector<const Line*> rest;
  for (const auto& l : lines)
    if (!cb.accept(l)) rest.push_back(&l);
  if (cb.seen()) doc.category = cb.build();

  auto need_category = [&](const Line& l) -> const FiniteCategory& {
    if (!doc.category) l.fail(0, "'" + l.word(0) + "' needs a category block first");
    return *doc.category;
  };

  // site state
  std::optional<std::string> topology;
  std::string site_name;
  std::map<std::size_t, std::vector<sheaves::Sieve>> cov, basis;
  bool any_cover = false, any_basis = false;
  std::size_t site_line = 0;
  // presheaf state
  struct Pending {
    std::string name;
    std::size_t line;
    std::map<std::size_t, std::size_t> sizes;
    std::map<std::string, std::vector<std::size_t>> tables;
    std::map<std::string, std::pair<std::size_t, std::size_t>> where;  // table token position
  };
  std::vector<Pending> pending;
  // class state
  std::optional<std::string> table_label;
  bool table_fallback = false;
  std::map<std::string, bool> rows;

  for (const Line* lp : rest) {
    const Line& l = *lp;
    const std::string& k = l.word(0);
    if (k == "site") {
      l.expect_size(2, 2, "site NAME");
      site_name = l.word(1);
      site_line = l.number;
    } else if (k == "topology") {
      l.expect_size(2, 2, "topology trivial|dense");
      if (l.word(1) != "trivial" && l.word(1) != "dense") l.fail(1, "unknown topology '" + l.word(1) + "'");
      topology = l.word(1);
      site_line = site_line ? site_line : l.number;
    } else if (k == "cover" || k == "basis") {
      // cover OBJ : SIEVE
      l.expect_size(4, 4, k + " OBJECT : {ARROWS}");
      if (l.word(2) != ":") l.fail(2, "expected ':'");
      const auto& c = need_category(l);
      std::size_t a = find_object(c, l, 1);
      (k == "cover" ? cov : basis)[a].push_back(parse_sieve(c, a, l, 3));
      (k == "cover" ? any_cover : any_basis) = true;
      site_line = site_line ? site_line : l.number;
    } else if (k == "presheaf") {
      l.expect_size(2, 2, "presheaf NAME");
      need_category(l);
      pending.push_back({l.word(1), l.number, {}, {}});
    } else if (k == "size") {
      l.expect_size(3, 3, "size OBJECT N");
      if (pending.empty()) l.fail(0, "'size' outside a presheaf block");
      pending.back().sizes[find_object(need_category(l), l, 1)] = parse_count(l, 2);
    } else if (k == "restrict") {
      l.expect_size(3, 3, "restrict ARROW [TABLE]");
      if (pending.empty()) l.fail(0, "'restrict' outside a presheaf block");
      const auto& c = need_category(l);
      std::size_t u = find_arrow(c, l, 1, l.word(1));
      pending.back().tables[c.arrow(u).name] = parse_table(l, 2);
      pending.back().where[c.arrow(u).name] = {l.number, l.column(2)};
    } else if (k == "class") {
      l.expect_size(2, 2, "class NAME");
      try {
        doc.cls = class_by_name<FinSet>(l.word(1));
      } catch (const PreconditionError& e) {
        l.fail(1, e.what());
      }
    } else if (k == "table") {
      // table LABEL fallback small|large
      l.expect_size(4, 4, "table LABEL fallback small|large");
      if (l.word(2) != "fallback" || (l.word(3) != "small" && l.word(3) != "large"))
        l.fail(2, "expected: fallback small|large");
      table_label = l.word(1);
      table_fallback = l.word(3) == "small";
    } else if (k == "small" || k == "large") {
      // small DOM->COD [TABLE]
      if (!table_label) l.fail(0, "'" + k + "' outside a table class");
      l.expect_size(3, 3, k + " DOM->COD [TABLE]");
      try {
        FinMap f = parse_map(l.word(1) + " " + l.word(2));
        rows[describe_map(f)] = k == "small";
      } catch (const PreconditionError& e) {
        l.fail(1, e.what());
      }
    } else if (k == "ambient") {
      l.expect_size(2, 2, "ambient finset|presheaves|sheaves|ex");
      const std::string& a = l.word(1);
      if (a != "finset" && a != "presheaves" && a != "sheaves" && a != "ex") l.fail(1, "unknown ambient '" + a + "'");
      doc.suite.ambient = a;
    } else if (k == "axioms") {
      l.expect_size(2, 64, "axioms ID ... | axioms all");
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        if (l.word(i) == "all") {
          for (const auto& [id, name] : kAxiomNames) doc.suite.axioms.push_back(id);
          continue;
        }
        try {
          doc.suite.axioms.push_back(parse_axiom(l.word(i)));
        } catch (const PreconditionError& e) {
          l.fail(i, e.what());
        }
      }
    } else if (k == "budget" || k == "witness-bound" || k == "test-bound" || k == "ceiling") {
      l.expect_size(2, 2, k + " N");
      if (!doc.suite.budget) doc.suite.budget = Budget{};
      std::size_t n = parse_count(l, 1);
      if (n == 0) l.fail(1, k + " must be positive");
      if (k == "budget") doc.suite.budget->size_bound = n;
      if (k == "witness-bound") doc.suite.budget->witness_bound = n;
      if (k == "test-bound") doc.suite.budget->test_bound = n;
      if (k == "ceiling") doc.suite.budget->ceiling = n;
    } else if (k == "strong") {
      if (!doc.suite.budget) doc.suite.budget = Budget{};
      doc.suite.budget->strong = true;
    } else if (k == "slack") {
      l.expect_size(2, 2, "slack N");
      doc.suite.slack = parse_count(l, 1);
    } else if (k == "base") {
      l.expect_size(2, 3, "base finset [BOUND]");
      if (l.word(1) != "finset") l.fail(1, "only the finset base is supported");
      doc.base = l.word(1);
      if (l.tokens.size() == 3) doc.base_bound = parse_count(l, 2);
    } else {
      l.fail(0, "unknown directive '" + k + "'");
    }
  }

  if (table_label) doc.cls = detail::table_class_from(*table_label, table_fallback, rows);

  if (topology || any_cover) {
    if (!doc.category) throw ParseError("site without a category", site_line, 1);
    const auto& c = *doc.category;
    if (topology && any_cover) throw ParseError("give either a topology or cover lines, not both", site_line, 1);
    if (topology) {
      doc.site = *topology == "trivial" ? sheaves::trivial_site(c) : sheaves::dense_site(c);
    } else {
      sheaves::Site s{c, std::vector<std::vector<sheaves::Sieve>>(c.object_count()), std::nullopt, "site"};
      for (auto& [a, v] : cov) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        s.cov[a] = v;
      }
      doc.site = std::move(s);
    }
    if (!site_name.empty()) doc.site->name = site_name;
    if (any_basis) {
      std::vector<std::vector<sheaves::Sieve>> b(c.object_count());
      for (auto& [a, v] : basis) b[a] = v;
      doc.site->basis = std::move(b);
    }
  } else if (any_basis) {
    throw ParseError("basis without a coverage", site_line, 1);
  }

  if (!pending.empty()) {
    PresheafCategory psh(*doc.category);
    const auto& c = *doc.category;
    for (const auto& p : pending) {
      std::vector<std::size_t> sizes(c.object_count(), 0);
      for (std::size_t o = 0; o < c.object_count(); ++o) {
        auto it = p.sizes.find(o);
        if (it == p.sizes.end()) throw ParseError("presheaf " + p.name + " has no size for " + c.object_name(o), p.line, 1);
        sizes[o] = it->second;
      }
      // X(cod u) -> X(dom u), checked here so the error points at the table
      for (const auto& [name, t] : p.tables) {
        const std::size_t u = *c.find_arrow(name);
        const auto [line, col] = p.where.at(name);
        if (t.size() != sizes[c.cod(u)])
          throw ParseError("restriction along " + name + " needs " + std::to_string(sizes[c.cod(u)]) + " entries", line, col);
        for (std::size_t v : t)
          if (v >= sizes[c.dom(u)])
            throw ParseError("restriction along " + name + " leaves " + c.object_name(c.dom(u)), line, col);
      }
      try {
        doc.presheaves.push_back({p.name, psh.make(sizes, p.tables), p.line});
      } catch (const PreconditionError& e) {
        throw ParseError("presheaf " + p.name + ": " + e.what(), p.line, 1);
      }
    }
  }
  return doc;
}

/// Parse errors come back prefixed with the file name.
inline Document load_document(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_document(text, path);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

// -- expectations -----------------------------------------------------------------

/// "ID OUTCOME" per line.
inline std::map<std::string, std::string> parse_expectations(const std::string& text) {
  std::map<std::string, std::string> out;
  for (const auto& l : split_lines(text)) {
    l.expect_size(2, 2, "ID OUTCOME");
    if (!out.emplace(l.word(0), l.word(1)).second) l.fail(0, "duplicate expectation for " + l.word(0));
  }
  return out;
}

// -- formula files ------------------------------------------------------------------

/// A finite-set environment and the formulas to evaluate in it. The
/// preamble declares sorts and relations; "---" separates it from the
/// formulas, one per line.
struct FormulaFile {
  std::vector<std::pair<std::string, std::size_t>> sorts;
  struct Rel {
    std::string name;
    std::vector<std::string> sorts;
    std::vector<std::vector<std::size_t>> tuples;
  };
  std::vector<Rel> relations;
  std::vector<std::tuple<std::string, std::string, FinMap>> coercions;
  std::optional<std::string> membership;
  std::optional<std::string> default_sort;
  std::vector<logic::SortedVar> context;
  // environment by name: "v RANK HEADROOM"
  std::optional<std::pair<std::size_t, std::size_t>> v_env;
  std::vector<std::pair<logic::FormulaPtr, std::size_t>> formulas;  // with line numbers
};

inline FormulaFile parse_formula_file(const std::string& text) {
  FormulaFile out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  bool body = false;
  std::map<std::string, std::size_t> sort_size;
  while (std::getline(in, raw)) {
    ++n;
    if (!body) {
      auto toks = tokenize(raw, n);
      if (toks.empty()) continue;
      Line l{n, toks};
      const std::string& k = l.word(0);
      if (k == "---") {
        l.expect_size(1, 1, "---");
        body = true;
      } else if (k == "sort") {
        l.expect_size(3, 3, "sort NAME SIZE");
        if (sort_size.count(l.word(1))) l.fail(1, "sort declared twice");
        sort_size[l.word(1)] = parse_count(l, 2);
        out.sorts.emplace_back(l.word(1), sort_size[l.word(1)]);
      } else if (k == "relation") {
        // relation NAME SORT... : TUPLE...
        std::size_t colon = 0;
        for (std::size_t i = 2; i < l.tokens.size() && !colon; ++i)
          if (l.word(i) == ":") colon = i;
        if (!colon) l.fail(l.tokens.size(), "expected: relation NAME SORT... : TUPLE...");
        FormulaFile::Rel r{l.word(1), {}, {}};
        for (std::size_t i = 2; i < colon; ++i) {
          if (!sort_size.count(l.word(i))) l.fail(i, "unknown sort '" + l.word(i) + "'");
          r.sorts.push_back(l.word(i));
        }
        for (std::size_t i = colon + 1; i < l.tokens.size(); ++i) {
          std::string w = l.word(i);
          std::vector<std::size_t> tup;
          if (w.front() == '(') {
            if (w.back() != ')') l.fail(i, "bad tuple");
            Line inner{n, {{"[" + w.substr(1, w.size() - 2) + "]", l.column(i)}}};
            tup = parse_table(inner, 0);
          } else {
            tup = {parse_count(l, i)};
          }
          if (tup.size() != r.sorts.size()) l.fail(i, "tuple has the wrong length");
          for (std::size_t j = 0; j < tup.size(); ++j)
            if (tup[j] >= sort_size[r.sorts[j]]) l.fail(i, "element out of range for sort " + r.sorts[j]);
          r.tuples.push_back(std::move(tup));
        }
        out.relations.push_back(std::move(r));
      } else if (k == "coerce") {
        // coerce FROM TO [TABLE]
        l.expect_size(4, 4, "coerce FROM TO [TABLE]");
        for (std::size_t i : {1u, 2u})
          if (!sort_size.count(l.word(i))) l.fail(i, "unknown sort '" + l.word(i) + "'");
        try {
          FinMap f = make_map(sort_size[l.word(1)], sort_size[l.word(2)], parse_table(l, 3));
          out.coercions.emplace_back(l.word(1), l.word(2), std::move(f));
        } catch (const PreconditionError& e) {
          l.fail(3, e.what());
        }
      } else if (k == "membership") {
        l.expect_size(2, 2, "membership RELATION");
        out.membership = l.word(1);
      } else if (k == "default") {
        l.expect_size(2, 2, "default SORT");
        out.default_sort = l.word(1);
      } else if (k == "context") {
        for (std::size_t i = 1; i < l.tokens.size(); ++i) {
          const std::string& w = l.word(i);
          auto c = w.find(':');
          if (c == std::string::npos || c == 0 || c + 1 == w.size()) l.fail(i, "expected VAR:SORT");
          out.context.push_back({w.substr(0, c), w.substr(c + 1)});
        }
      } else if (k == "env") {
        l.expect_size(4, 4, "env v RANK HEADROOM");
        if (l.word(1) != "v") l.fail(1, "unknown environment '" + l.word(1) + "'");
        out.v_env = std::pair{parse_count(l, 2), parse_count(l, 3)};
      } else {
        l.fail(0, "unknown directive '" + k + "'");
      }
      continue;
    }
    std::string trimmed = raw.substr(0, raw.find('#'));
    if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.formulas.emplace_back(logic::parse(trimmed, n, 1), n);
  }
  if (!body) throw ParseError("formula file needs a '---' line before the formulas", n, 1);
  return out;
}

/// Tuples are indexed like the tuple objects of a structure: mixed radix,
/// first sort most significant.
inline logic::Structure<FinSet> build_structure(const FinSet& sets, const FormulaFile& ff) {
  logic::Structure<FinSet> s(sets);
  std::map<std::string, std::size_t> size;
  for (const auto& [name, n] : ff.sorts) {
    s.add_sort(name, n);
    size[name] = n;
  }
  for (const auto& [from, to, f] : ff.coercions) s.add_coercion(from, to, f);
  for (const auto& r : ff.relations) {
    std::size_t total = 1;
    for (const auto& so : r.sorts) total *= size[so];
    Subset sub(total, false);
    for (const auto& t : r.tuples) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < t.size(); ++j) idx = idx * size[r.sorts[j]] + t[j];
      sub[idx] = true;
    }
    s.add_relation(r.name, r.sorts, sub);
  }
  if (ff.membership) s.set_membership(*ff.membership);
  if (ff.default_sort) s.set_default_sort(*ff.default_sort);
  return s;
}

inline FormulaFile load_formula_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_formula_file(text);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

}  // namespace aset::cli

#endif  // ASET_CLI_FORMATS_HPP_
