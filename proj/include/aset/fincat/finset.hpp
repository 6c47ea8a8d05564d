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

#ifndef ASET_FINCAT_FINSET_HPP_
#define ASET_FINCAT_FINSET_HPP_

#include <compare>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"
#include "aset/core/subset.hpp"

namespace aset {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// A function {0..dom-1} -> {0..cod-1} given by its table.
struct FinMap {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::vector<std::size_t> table;

  std::size_t operator()(std::size_t x) const { return table[x]; }

  friend bool operator==(const FinMap&, const FinMap&) = default;
  friend auto operator<=>(const FinMap&, const FinMap&) = default;
};

inline FinMap make_map(std::size_t dom, std::size_t cod, std::vector<std::size_t> table) {
  if (table.size() != dom) throw PreconditionError("function table length differs from domain size");
  for (std::size_t v : table)
    if (v >= cod) throw PreconditionError("function table entry outside codomain");
  return FinMap{dom, cod, std::move(table)};
}

inline bool well_formed(const FinMap& f) {
  if (f.table.size() != f.dom) return false;
  for (std::size_t v : f.table)
    if (v >= f.cod) return false;
  return true;
}

inline std::string describe_map(const FinMap& f) {
  std::string s = std::to_string(f.dom) + "->" + std::to_string(f.cod) + " [";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f.table[i]);
  }
  return s + "]";
}

/// Inverse of describe_map: "3->2 [0,1,1]".
inline FinMap parse_map(const std::string& text) {
  std::istringstream in(text);
  std::size_t dom = 0, cod = 0;
  char dash = 0, gt = 0, open = 0;
  if (!(in >> dom >> dash >> gt >> cod >> open) || dash != '-' || gt != '>' || open != '[')
    throw PreconditionError("malformed function '" + text + "'");
  std::vector<std::size_t> table;
  char sep = 0;
  if (in.peek() == ']') {
    in.get();
  } else {
    while (true) {
      std::size_t v = 0;
      if (!(in >> v >> sep)) throw PreconditionError("malformed function '" + text + "'");
      table.push_back(v);
      if (sep == ']') break;
      if (sep != ',') throw PreconditionError("malformed function '" + text + "'");
    }
  }
  return make_map(dom, cod, std::move(table));
}

/// Skeletal finite sets: the object n is {0..n-1}, arrows are function
/// tables. Pairs in products and pullbacks are listed lexicographically.
class FinSet {
 public:
  using Object = std::size_t;
  using Arrow = FinMap;
  static constexpr bool kWellPointed = true;

  struct Limits {
    std::size_t max_hom = std::size_t{1} << 22;
    std::size_t max_subobject_base = 22;
  };

  FinSet() = default;
  explicit FinSet(Limits limits) : limits_(limits) {}

  std::string name() const { return "SkeletalFinSet"; }
  const Limits& limits() const { return limits_; }

  Object dom(const Arrow& f) const { return f.dom; }
  Object cod(const Arrow& f) const { return f.cod; }

  Arrow identity(Object x) const {
    Arrow f{x, x, std::vector<std::size_t>(x)};
    for (std::size_t i = 0; i < x; ++i) f.table[i] = i;
    return f;
  }

  /// g . f
  Arrow compose(const Arrow& g, const Arrow& f) const {
    if (f.cod != g.dom)
      throw CompositionError("cannot compose " + describe_map(g) + " after " + describe_map(f));
    Arrow h{f.dom, g.cod, std::vector<std::size_t>(f.dom)};
    for (std::size_t i = 0; i < f.dom; ++i) h.table[i] = g.table[f.table[i]];
    return h;
  }

  std::vector<Arrow> hom(Object x, Object y) const {
    std::size_t total = 1;
    for (std::size_t i = 0; i < x; ++i) {
      if (y != 0 && total > limits_.max_hom / y)
        throw ResourceBound("hom(" + std::to_string(x) + "," + std::to_string(y) + ") too large");
      total *= y;
    }
    if (total > limits_.max_hom)
      throw ResourceBound("hom(" + std::to_string(x) + "," + std::to_string(y) + ") too large");
    std::vector<Arrow> out;
    if (y == 0 && x > 0) return out;
    out.reserve(total);
    std::vector<std::size_t> table(x, 0);
    while (true) {
      out.push_back(Arrow{x, y, table});
      std::size_t i = 0;
      while (i < x && ++table[i] == y) table[i++] = 0;
      if (i == x) break;
    }
    return out;
  }

  std::vector<Object> objects(std::size_t bound) const {
    std::vector<Object> out;
    for (std::size_t n = 0; n <= bound; ++n) out.push_back(n);
    return out;
  }

  // -- limits ---------------------------------------------------------------

  Object terminal() const { return 1; }
  Arrow to_terminal(Object x) const { return Arrow{x, 1, std::vector<std::size_t>(x, 0)}; }

  /// Pullback of f: B -> A and g: C -> A. The apex lists pairs (b, c) with
  /// f(b) = g(c) in lexicographic order; `first` goes to B, `second` to C.
  Cone<FinSet> pullback(const Arrow& f, const Arrow& g) const {
    if (f.cod != g.cod) throw CompositionError("pullback of arrows with different codomains");
    Cone<FinSet> cone{0, Arrow{0, f.dom, {}}, Arrow{0, g.dom, {}}};
    for (std::size_t b = 0; b < f.dom; ++b)
      for (std::size_t c = 0; c < g.dom; ++c)
        if (f.table[b] == g.table[c]) {
          cone.first.table.push_back(b);
          cone.second.table.push_back(c);
        }
    cone.apex = cone.first.table.size();
    cone.first.dom = cone.apex;
    cone.second.dom = cone.apex;
    return cone;
  }

  /// Product x * y; the pair (i, j) has index i * y + j.
  Cone<FinSet> product(Object x, Object y) const { return pullback(to_terminal(x), to_terminal(y)); }

  /// The unique arrow z -> apex with first . h = f and second . h = g.
  Arrow mediate(const Cone<FinSet>& cone, const Arrow& f, const Arrow& g) const {
    if (f.dom != g.dom || f.cod != cone.first.cod || g.cod != cone.second.cod)
      throw CompositionError("mediating arrow requested for a mismatched cone");
    std::vector<std::size_t> index(cone.first.cod * cone.second.cod, npos);
    for (std::size_t e = 0; e < cone.apex; ++e)
      index[cone.first.table[e] * cone.second.cod + cone.second.table[e]] = e;
    Arrow h{f.dom, cone.apex, std::vector<std::size_t>(f.dom)};
    for (std::size_t z = 0; z < f.dom; ++z) {
      std::size_t e = index[f.table[z] * cone.second.cod + g.table[z]];
      if (e == npos) throw CompositionError("competing cone does not commute");
      h.table[z] = e;
    }
    return h;
  }

  Arrow equalizer(const Arrow& f, const Arrow& g) const {
    if (f.dom != g.dom || f.cod != g.cod) throw CompositionError("equalizer of non-parallel arrows");
    Subset s(f.dom);
    for (std::size_t x = 0; x < f.dom; ++x) s[x] = f.table[x] == g.table[x];
    return sub_mono(f.dom, s);
  }

  // -- regular structure ----------------------------------------------------

  bool is_mono(const Arrow& f) const {
    std::vector<bool> seen(f.cod, false);
    for (std::size_t v : f.table) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  bool is_cover(const Arrow& f) const {
    std::vector<bool> seen(f.cod, false);
    for (std::size_t v : f.table) seen[v] = true;
    return is_full(seen);
  }

  bool is_iso(const Arrow& f) const { return f.dom == f.cod && is_mono(f); }

  Factorization<FinSet> image(const Arrow& f) const {
    Subset img(f.cod, false);
    for (std::size_t v : f.table) img[v] = true;
    Arrow mono = sub_mono(f.cod, img);
    std::vector<std::size_t> rank(f.cod, npos);
    for (std::size_t i = 0; i < mono.dom; ++i) rank[mono.table[i]] = i;
    Arrow cover{f.dom, mono.dom, std::vector<std::size_t>(f.dom)};
    for (std::size_t x = 0; x < f.dom; ++x) cover.table[x] = rank[f.table[x]];
    return {cover, mono};
  }

  // -- coproducts -----------------------------------------------------------

  Object initial() const { return 0; }
  Arrow from_initial(Object x) const { return Arrow{0, x, {}}; }

  Cocone<FinSet> coproduct(Object x, Object y) const {
    Cocone<FinSet> k{x + y, Arrow{x, x + y, std::vector<std::size_t>(x)},
                     Arrow{y, x + y, std::vector<std::size_t>(y)}};
    for (std::size_t i = 0; i < x; ++i) k.first.table[i] = i;
    for (std::size_t j = 0; j < y; ++j) k.second.table[j] = x + j;
    return k;
  }

  Arrow copair(const Cocone<FinSet>& k, const Arrow& f, const Arrow& g) const {
    if (f.dom != k.first.dom || g.dom != k.second.dom || f.cod != g.cod)
      throw CompositionError("copairing arrows do not match the coproduct");
    Arrow h{k.apex, f.cod, std::vector<std::size_t>(k.apex, npos)};
    for (std::size_t i = 0; i < f.dom; ++i) h.table[k.first.table[i]] = f.table[i];
    for (std::size_t j = 0; j < g.dom; ++j) h.table[k.second.table[j]] = g.table[j];
    return h;
  }

  // -- quotients, dependent products, power classes -------------------------

  /// Quotient by an equivalence relation r on x (a subset of x * x). Classes
  /// are numbered by their least element.
  Arrow quotient(Object x, const Subset& r) const {
    if (r.size() != x * x) throw PreconditionError("relation has the wrong size");
    Arrow q{x, 0, std::vector<std::size_t>(x, npos)};
    for (std::size_t i = 0; i < x; ++i) {
      if (q.table[i] != npos) continue;
      for (std::size_t j = i; j < x; ++j)
        if (r[i * x + j]) q.table[j] = q.cod;
      ++q.cod;
    }
    for (std::size_t i = 0; i < x; ++i)
      for (std::size_t j = 0; j < x; ++j)
        if (r[i * x + j] != (q.table[i] == q.table[j]))
          throw PreconditionError("relation is not an equivalence relation");
    return q;
  }

  /// Pi_f(p) for f: X -> Y and p: P -> X. The fibre over y is the set of
  /// sections of p over the fibre of f at y.
  PiData<FinSet> pi_along(const Arrow& f, const Arrow& p) const {
    if (p.cod != f.dom) throw CompositionError("pi_along: p must lie over dom(f)");
    std::vector<std::vector<std::size_t>> over(f.dom);
    for (std::size_t e = 0; e < p.dom; ++e) over[p.table[e]].push_back(e);
    Arrow pi{0, f.cod, {}};
    std::vector<std::vector<std::size_t>> sections;  // indexed by Pi element
    for (std::size_t y = 0; y < f.cod; ++y) {
      std::vector<std::size_t> fibre;
      for (std::size_t x = 0; x < f.dom; ++x)
        if (f.table[x] == y) fibre.push_back(x);
      std::vector<std::size_t> choice(fibre.size(), 0);
      bool empty = false;
      for (std::size_t x : fibre) empty = empty || over[x].empty();
      if (empty) continue;
      while (true) {
        std::vector<std::size_t> s(f.dom, npos);
        for (std::size_t i = 0; i < fibre.size(); ++i) s[fibre[i]] = over[fibre[i]][choice[i]];
        sections.push_back(std::move(s));
        pi.table.push_back(y);
        if (sections.size() > limits_.max_hom) throw ResourceBound("pi_along: too many sections");
        std::size_t i = 0;
        while (i < fibre.size() && ++choice[i] == over[fibre[i]].size()) choice[i++] = 0;
        if (i == fibre.size()) break;
      }
    }
    pi.dom = pi.table.size();
    Cone<FinSet> along = pullback(pi, f);
    Arrow counit{along.apex, p.dom, std::vector<std::size_t>(along.apex)};
    for (std::size_t e = 0; e < along.apex; ++e)
      counit.table[e] = sections[along.first.table[e]][along.second.table[e]];
    return {pi, along, counit};
  }

  /// Power object 2^c with elements numbered by bitmask, and the membership
  /// relation as a subset of c * 2^c.
  struct PowerClass {
    Object carrier;
    Object power;
    Subset membership;
  };

  PowerClass power_class(Object c) const {
    if (c > limits_.max_subobject_base) throw ResourceBound("power class base too large");
    std::size_t n = std::size_t{1} << c;
    Subset mem(c * n, false);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t s = 0; s < n; ++s) mem[i * n + s] = ((s >> i) & 1U) != 0;
    return {c, n, mem};
  }

  /// The classifying map d -> 2^c of a relation r on c * d.
  Arrow classify(Object c, Object d, const Subset& r) const {
    if (r.size() != c * d) throw PreconditionError("relation has the wrong size");
    Arrow rho{d, std::size_t{1} << c, std::vector<std::size_t>(d, 0)};
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (r[i * d + j]) rho.table[j] |= std::size_t{1} << i;
    return rho;
  }

  /// Power class of p: C -> X computed in the slice over X: the fibre over x
  /// is the powerset of the fibre of p at x.
  Arrow fibred_power(const Arrow& p) const {
    std::vector<std::size_t> sizes = fibre_sizes(p);
    Arrow out{0, p.cod, {}};
    for (std::size_t x = 0; x < p.cod; ++x) {
      if (sizes[x] > limits_.max_subobject_base) throw ResourceBound("fibred power too large");
      for (std::size_t s = 0; s < (std::size_t{1} << sizes[x]); ++s) out.table.push_back(x);
    }
    out.dom = out.table.size();
    return out;
  }

  // -- subobjects -----------------------------------------------------------

  std::vector<Subset> subobjects(Object x) const {
    if (x > limits_.max_subobject_base)
      throw ResourceBound("subobject lattice of " + std::to_string(x) + " too large");
    std::vector<Subset> out;
    for (unsigned long long bits = 0; bits < (1ULL << x); ++bits) out.push_back(subset_from_bits(x, bits));
    return out;
  }

  Arrow sub_mono(Object x, const Subset& s) const {
    if (s.size() != x) throw PreconditionError("subset size differs from object");
    Arrow m{0, x, members(s)};
    m.dom = m.table.size();
    return m;
  }

  Subset sub_key(const Arrow& mono) const {
    Subset s(mono.cod, false);
    for (std::size_t v : mono.table) s[v] = true;
    return s;
  }

  Subset sub_top(Object x) const { return full_subset(x); }
  Subset sub_bottom(Object x) const { return empty_subset(x); }
  bool sub_leq(Object, const Subset& a, const Subset& b) const { return is_subset(a, b); }
  Subset sub_meet(Object, const Subset& a, const Subset& b) const { return intersect(a, b); }
  Subset sub_join(Object, const Subset& a, const Subset& b) const { return unite(a, b); }
  Subset sub_implies(Object, const Subset& a, const Subset& b) const { return unite(complement(a), b); }

  Subset sub_pullback(const Arrow& f, const Subset& s) const {
    Subset r(f.dom);
    for (std::size_t x = 0; x < f.dom; ++x) r[x] = s[f.table[x]];
    return r;
  }

  Subset sub_exists(const Arrow& f, const Subset& s) const {
    Subset r(f.cod, false);
    for (std::size_t x = 0; x < f.dom; ++x)
      if (s[x]) r[f.table[x]] = true;
    return r;
  }

  Subset sub_forall(const Arrow& f, const Subset& s) const {
    Subset r(f.cod, true);
    for (std::size_t x = 0; x < f.dom; ++x)
      if (!s[x]) r[f.table[x]] = false;
    return r;
  }

  // -- set-like ---------------------------------------------------------------

  std::size_t cardinality(Object x) const { return x; }

  std::vector<std::size_t> fibre_sizes(const Arrow& f) const {
    std::vector<std::size_t> sizes(f.cod, 0);
    for (std::size_t v : f.table) ++sizes[v];
    return sizes;
  }

  std::string describe(const Arrow& f) const { return describe_map(f); }
  std::string describe_object(Object x) const { return std::to_string(x); }

 private:
  Limits limits_{};
};

static_assert(Heyting<FinSet>);
static_assert(HasQuotients<FinSet>);
static_assert(HasPi<FinSet>);
static_assert(WellPointed<FinSet>);

}  // namespace aset

#endif  // ASET_FINCAT_FINSET_HPP_
