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

#ifndef ASET_FINCAT_PRESHEAF_HPP_
#define ASET_FINCAT_PRESHEAF_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"
#include "aset/core/subset.hpp"
#include "aset/fincat/finite_category.hpp"
#include "aset/fincat/finset.hpp"

namespace aset {

/// A presheaf of finite sets on a finite index category. For an index arrow
/// u: c -> d, restriction[u] is the table X(d) -> X(c).
struct Presheaf {
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::size_t>> restriction;

  friend bool operator==(const Presheaf&, const Presheaf&) = default;
  friend auto operator<=>(const Presheaf&, const Presheaf&) = default;
};

/// A natural transformation, one function table per index object.
struct PshMap {
  Presheaf dom;
  Presheaf cod;
  std::vector<std::vector<std::size_t>> components;

  friend bool operator==(const PshMap&, const PshMap&) = default;
  friend auto operator<=>(const PshMap&, const PshMap&) = default;
};

/// Presheaves of finite sets on a finite category, with every operation
/// computed componentwise except the Heyting implication, universal
/// quantification and dependent products, which quantify over the arrows
/// of the index category.
class PresheafCategory {
 public:
  using Object = Presheaf;
  using Arrow = PshMap;
  using Index = FiniteCategory;
  static constexpr bool kWellPointed = false;

  struct Limits {
    std::size_t max_elements = 24;
    std::size_t max_hom = std::size_t{1} << 20;
    std::size_t max_catalog = std::size_t{1} << 16;
  };

  explicit PresheafCategory(FiniteCategory index)
      : index_(std::make_shared<const FiniteCategory>(std::move(index))) {}
  PresheafCategory(FiniteCategory index, Limits limits)
      : index_(std::make_shared<const FiniteCategory>(std::move(index))), limits_(limits) {}

  std::string name() const { return "Psh(" + index_->name() + ")"; }
  const FiniteCategory& index() const { return *index_; }
  const Limits& limits() const { return limits_; }

  // -- construction and validation -----------------------------------------

  /// Builds a presheaf from its sizes and the restriction tables of the
  /// non-identity index arrows, keyed by arrow name.
  Presheaf make(std::vector<std::size_t> sizes,
                const std::map<std::string, std::vector<std::size_t>>& tables) const {
    const auto& C = *index_;
    if (sizes.size() != C.object_count()) throw PreconditionError("presheaf needs one size per object");
    Presheaf x{std::move(sizes), std::vector<std::vector<std::size_t>>(C.arrow_count())};
    for (std::size_t u = 0; u < C.arrow_count(); ++u) {
      if (C.is_identity(u)) {
        x.restriction[u] = iota(x.sizes[u]);
        continue;
      }
      auto it = tables.find(C.arrow(u).name);
      if (it == tables.end()) throw PreconditionError("missing restriction for " + C.arrow(u).name);
      x.restriction[u] = it->second;
    }
    validate(x);
    return x;
  }

  bool is_presheaf(const Presheaf& x) const {
    const auto& C = *index_;
    if (x.sizes.size() != C.object_count() || x.restriction.size() != C.arrow_count()) return false;
    for (std::size_t u = 0; u < C.arrow_count(); ++u) {
      const auto& t = x.restriction[u];
      if (t.size() != x.sizes[C.cod(u)]) return false;
      for (std::size_t v : t)
        if (v >= x.sizes[C.dom(u)]) return false;
      if (C.is_identity(u))
        for (std::size_t i = 0; i < t.size(); ++i)
          if (t[i] != i) return false;
    }
    // X(g . f) = X(f) . X(g)
    for (std::size_t g = 0; g < C.arrow_count(); ++g)
      for (std::size_t f = 0; f < C.arrow_count(); ++f) {
        if (C.cod(f) != C.dom(g)) continue;
        const auto& gf = x.restriction[C.compose(g, f)];
        for (std::size_t e = 0; e < x.sizes[C.cod(g)]; ++e)
          if (gf[e] != x.restriction[f][x.restriction[g][e]]) return false;
      }
    return true;
  }

  void validate(const Presheaf& x) const {
    if (!is_presheaf(x)) throw PreconditionError("not a functor on " + index_->name());
  }

  bool is_natural(const PshMap& a) const {
    const auto& C = *index_;
    if (a.components.size() != C.object_count()) return false;
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      if (a.components[c].size() != a.dom.sizes[c]) return false;
      for (std::size_t v : a.components[c])
        if (v >= a.cod.sizes[c]) return false;
    }
    for (std::size_t u = 0; u < C.arrow_count(); ++u) {
      std::size_t c = C.dom(u), d = C.cod(u);
      for (std::size_t e = 0; e < a.dom.sizes[d]; ++e)
        if (a.components[c][a.dom.restriction[u][e]] != a.cod.restriction[u][a.components[d][e]])
          return false;
    }
    return true;
  }

  // -- category -------------------------------------------------------------

  Object dom(const Arrow& f) const { return f.dom; }
  Object cod(const Arrow& f) const { return f.cod; }

  Arrow identity(const Object& x) const {
    Arrow a{x, x, {}};
    for (std::size_t n : x.sizes) a.components.push_back(iota(n));
    return a;
  }

  Arrow compose(const Arrow& g, const Arrow& f) const {
    if (!(f.cod == g.dom)) throw CompositionError("presheaf maps are not composable");
    Arrow h{f.dom, g.cod, f.components};
    for (std::size_t c = 0; c < h.components.size(); ++c)
      for (auto& v : h.components[c]) v = g.components[c][v];
    return h;
  }

  /// All natural transformations x -> y, by backtracking over components.
  std::vector<Arrow> hom(const Object& x, const Object& y) const {
    const auto& C = *index_;
    std::vector<Arrow> out;
    Arrow cur{x, y, std::vector<std::vector<std::size_t>>(C.object_count())};
    std::function<void(std::size_t)> go = [&](std::size_t c) {
      if (c == C.object_count()) {
        if (out.size() >= limits_.max_hom) throw ResourceBound("presheaf hom-set too large");
        out.push_back(cur);
        return;
      }
      for (const auto& f : FinSet().hom(x.sizes[c], y.sizes[c])) {
        cur.components[c] = f.table;
        if (natural_upto(cur, c)) go(c + 1);
      }
    };
    go(0);
    return out;
  }

  /// Every presheaf whose components have at most `bound` elements.
  std::vector<Object> objects(std::size_t bound) const {
    const auto& C = *index_;
    std::vector<Object> out;
    std::vector<std::size_t> sizes(C.object_count(), 0);
    std::vector<std::size_t> nonid;
    for (std::size_t u = 0; u < C.arrow_count(); ++u)
      if (!C.is_identity(u)) nonid.push_back(u);
    while (true) {
      Presheaf x{sizes, std::vector<std::vector<std::size_t>>(C.arrow_count())};
      for (std::size_t o = 0; o < C.object_count(); ++o) x.restriction[o] = iota(sizes[o]);
      std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == nonid.size()) {
          if (is_presheaf(x)) {
            if (out.size() >= limits_.max_catalog) throw ResourceBound("presheaf catalog too large");
            out.push_back(x);
          }
          return;
        }
        std::size_t u = nonid[k];
        for (const auto& t : FinSet().hom(sizes[C.cod(u)], sizes[C.dom(u)])) {
          x.restriction[u] = t.table;
          go(k + 1);
        }
      };
      go(0);
      std::size_t i = 0;
      while (i < sizes.size() && ++sizes[i] > bound) sizes[i++] = 0;
      if (i == sizes.size()) break;
    }
    return out;
  }

  // -- limits ---------------------------------------------------------------

  Object terminal() const {
    const auto& C = *index_;
    Presheaf t{std::vector<std::size_t>(C.object_count(), 1),
               std::vector<std::vector<std::size_t>>(C.arrow_count(), std::vector<std::size_t>{0})};
    return t;
  }

  Arrow to_terminal(const Object& x) const {
    Arrow a{x, terminal(), {}};
    for (std::size_t n : x.sizes) a.components.push_back(std::vector<std::size_t>(n, 0));
    return a;
  }

  Cone<PresheafCategory> pullback(const Arrow& f, const Arrow& g) const {
    if (!(f.cod == g.cod)) throw CompositionError("pullback of arrows with different codomains");
    const auto& C = *index_;
    const FinSet sets;
    std::vector<Cone<FinSet>> parts;
    Presheaf apex{{}, std::vector<std::vector<std::size_t>>(C.arrow_count())};
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      parts.push_back(sets.pullback(component(f, c), component(g, c)));
      apex.sizes.push_back(parts.back().apex);
    }
    for (std::size_t u = 0; u < C.arrow_count(); ++u) {
      std::size_t c = C.dom(u), d = C.cod(u);
      auto tb = sets.mediate(parts[c], sets.compose(restrict_map(f.dom, u), parts[d].first),
                             sets.compose(restrict_map(g.dom, u), parts[d].second));
      apex.restriction[u] = tb.table;
    }
    Cone<PresheafCategory> cone{apex, Arrow{apex, f.dom, {}}, Arrow{apex, g.dom, {}}};
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      cone.first.components.push_back(parts[c].first.table);
      cone.second.components.push_back(parts[c].second.table);
    }
    return cone;
  }

  Cone<PresheafCategory> product(const Object& x, const Object& y) const {
    return pullback(to_terminal(x), to_terminal(y));
  }

  Arrow mediate(const Cone<PresheafCategory>& cone, const Arrow& f, const Arrow& g) const {
    const auto& C = *index_;
    const FinSet sets;
    Arrow h{f.dom, cone.apex, {}};
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      Cone<FinSet> part{cone.apex.sizes[c], component(cone.first, c), component(cone.second, c)};
      h.components.push_back(sets.mediate(part, component(f, c), component(g, c)).table);
    }
    return h;
  }

  Arrow equalizer(const Arrow& f, const Arrow& g) const {
    Subset s;
    for (std::size_t c = 0; c < f.components.size(); ++c)
      for (std::size_t x = 0; x < f.dom.sizes[c]; ++x) s.push_back(f.components[c][x] == g.components[c][x]);
    return sub_mono(f.dom, s);
  }

  // -- regular structure ----------------------------------------------------

  bool is_mono(const Arrow& f) const {
    for (std::size_t c = 0; c < f.components.size(); ++c)
      if (!FinSet().is_mono(component(f, c))) return false;
    return true;
  }

  bool is_cover(const Arrow& f) const {
    for (std::size_t c = 0; c < f.components.size(); ++c)
      if (!FinSet().is_cover(component(f, c))) return false;
    return true;
  }

  Factorization<PresheafCategory> image(const Arrow& f) const {
    Subset img = sub_exists(f, sub_top(f.dom));
    Arrow mono = sub_mono(f.cod, img);
    Arrow cover{f.dom, mono.dom, {}};
    for (std::size_t c = 0; c < f.components.size(); ++c) {
      std::vector<std::size_t> rank(f.cod.sizes[c], npos);
      for (std::size_t i = 0; i < mono.components[c].size(); ++i) rank[mono.components[c][i]] = i;
      std::vector<std::size_t> t;
      for (std::size_t v : f.components[c]) t.push_back(rank[v]);
      cover.components.push_back(std::move(t));
    }
    return {cover, mono};
  }

  // -- coproducts -----------------------------------------------------------

  Object initial() const {
    const auto& C = *index_;
    return Presheaf{std::vector<std::size_t>(C.object_count(), 0),
                    std::vector<std::vector<std::size_t>>(C.arrow_count())};
  }

  Arrow from_initial(const Object& x) const {
    return Arrow{initial(), x, std::vector<std::vector<std::size_t>>(index_->object_count())};
  }

  Cocone<PresheafCategory> coproduct(const Object& x, const Object& y) const {
    const auto& C = *index_;
    Presheaf s{{}, std::vector<std::vector<std::size_t>>(C.arrow_count())};
    for (std::size_t c = 0; c < C.object_count(); ++c) s.sizes.push_back(x.sizes[c] + y.sizes[c]);
    for (std::size_t u = 0; u < C.arrow_count(); ++u) {
      std::size_t c = C.dom(u);
      auto t = x.restriction[u];
      for (std::size_t v : y.restriction[u]) t.push_back(x.sizes[c] + v);
      s.restriction[u] = std::move(t);
    }
    Cocone<PresheafCategory> k{s, Arrow{x, s, {}}, Arrow{y, s, {}}};
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      k.first.components.push_back(iota(x.sizes[c]));
      std::vector<std::size_t> t(y.sizes[c]);
      for (std::size_t j = 0; j < y.sizes[c]; ++j) t[j] = x.sizes[c] + j;
      k.second.components.push_back(std::move(t));
    }
    return k;
  }

  Arrow copair(const Cocone<PresheafCategory>& k, const Arrow& f, const Arrow& g) const {
    const FinSet sets;
    Arrow h{k.apex, f.cod, {}};
    for (std::size_t c = 0; c < f.components.size(); ++c) {
      Cocone<FinSet> part{k.apex.sizes[c], component(k.first, c), component(k.second, c)};
      h.components.push_back(sets.copair(part, component(f, c), component(g, c)).table);
    }
    return h;
  }

  // -- quotients and dependent products -------------------------------------

  /// Quotient of x by an equivalence relation r, given as a subobject of the
  /// canonical product x * x.
  Arrow quotient(const Object& x, const Subset& r) const {
    const auto& C = *index_;
    const FinSet sets;
    Arrow q{x, Presheaf{{}, std::vector<std::vector<std::size_t>>(C.arrow_count())}, {}};
    std::size_t off = 0;
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      std::size_t n = x.sizes[c];
      Subset rc(r.begin() + static_cast<std::ptrdiff_t>(off), r.begin() + static_cast<std::ptrdiff_t>(off + n * n));
      off += n * n;
      auto qc = sets.quotient(n, rc);
      q.cod.sizes.push_back(qc.cod);
      q.components.push_back(qc.table);
    }
    for (std::size_t u = 0; u < C.arrow_count(); ++u) {
      std::size_t c = C.dom(u), d = C.cod(u);
      std::vector<std::size_t> t(q.cod.sizes[d], npos);
      for (std::size_t e = 0; e < x.sizes[d]; ++e) {
        std::size_t img = q.components[c][x.restriction[u][e]];
        std::size_t& slot = t[q.components[d][e]];
        if (slot != npos && slot != img) throw PreconditionError("relation is not a subpresheaf");
        slot = img;
      }
      q.cod.restriction[u] = std::move(t);
    }
    return q;
  }

  /// Dependent product along f: X -> Y of p: P -> X. An element of Pi at c
  /// is a pair (y, s) with y in Y(c) and s a natural choice, for every
  /// u: d -> c and x in X(d) over y.u, of an element of P(d) over x.
  PiData<PresheafCategory> pi_along(const Arrow& f, const Arrow& p) const {
    if (!(p.cod == f.dom)) throw CompositionError("pi_along: p must lie over dom(f)");
    const auto& C = *index_;
    const Presheaf& X = f.dom;
    const Presheaf& Y = f.cod;
    const Presheaf& P = p.dom;

    struct Item {
      std::size_t arrow;
      std::size_t x;
    };
    // sections[c][k] = (y, sigma) ; sigma aligned with items_of(c, y)
    std::vector<std::vector<std::pair<std::size_t, std::vector<std::size_t>>>> sections(C.object_count());
    std::vector<std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t>> lookup(C.object_count());

    auto items_of = [&](std::size_t c, std::size_t y) {
      std::vector<Item> items;
      for (std::size_t u : C.arrows_into(c)) {
        std::size_t d = C.dom(u);
        for (std::size_t x = 0; x < X.sizes[d]; ++x)
          if (f.components[d][x] == Y.restriction[u][y]) items.push_back({u, x});
      }
      return items;
    };
    auto item_index = [](const std::vector<Item>& items, std::size_t u, std::size_t x) {
      for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].arrow == u && items[i].x == x) return i;
      return npos;
    };

    for (std::size_t c = 0; c < C.object_count(); ++c) {
      for (std::size_t y = 0; y < Y.sizes[c]; ++y) {
        auto items = items_of(c, y);
        std::vector<std::size_t> sigma(items.size(), npos);
        std::function<void(std::size_t)> go = [&](std::size_t k) {
          if (k == items.size()) {
            lookup[c][{y, sigma}] = sections[c].size();
            sections[c].push_back({y, sigma});
            if (sections[c].size() > limits_.max_hom) throw ResourceBound("pi_along: too many sections");
            return;
          }
          std::size_t d = C.dom(items[k].arrow);
          for (std::size_t e = 0; e < P.sizes[d]; ++e) {
            if (p.components[d][e] != items[k].x) continue;
            sigma[k] = e;
            bool ok = true;
            // naturality against every assigned item related by an arrow
            for (std::size_t j = 0; j <= k && ok; ++j) {
              for (std::size_t v : C.arrows_into(C.dom(items[j].arrow))) {
                std::size_t uv = C.compose(items[j].arrow, v);
                std::size_t xv = X.restriction[v][items[j].x];
                std::size_t i = item_index(items, uv, xv);
                if (i == npos || i > k) continue;
                if (j != k && i != k) continue;
                if (sigma[i] != P.restriction[v][sigma[j]]) { ok = false; break; }
              }
            }
            if (ok) go(k + 1);
          }
          sigma[k] = npos;
        };
        go(0);
      }
    }

    Presheaf Pi{{}, std::vector<std::vector<std::size_t>>(C.arrow_count())};
    for (std::size_t c = 0; c < C.object_count(); ++c) Pi.sizes.push_back(sections[c].size());
    for (std::size_t w = 0; w < C.arrow_count(); ++w) {
      std::size_t c2 = C.dom(w), c = C.cod(w);
      std::vector<std::size_t> t;
      for (const auto& [y, sigma] : sections[c]) {
        auto items = items_of(c, y);
        std::size_t y2 = Y.restriction[w][y];
        auto items2 = items_of(c2, y2);
        std::vector<std::size_t> sigma2(items2.size());
        for (std::size_t i = 0; i < items2.size(); ++i)
          sigma2[i] = sigma[item_index(items, C.compose(w, items2[i].arrow), items2[i].x)];
        t.push_back(lookup[c2].at({y2, sigma2}));
      }
      Pi.restriction[w] = std::move(t);
    }
    Arrow pi{Pi, Y, {}};
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      std::vector<std::size_t> t;
      for (const auto& s : sections[c]) t.push_back(s.first);
      pi.components.push_back(std::move(t));
    }
    Cone<PresheafCategory> along = pullback(pi, f);
    Arrow counit{along.apex, P, {}};
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      std::vector<std::size_t> t;
      for (std::size_t e = 0; e < along.apex.sizes[c]; ++e) {
        const auto& [y, sigma] = sections[c][along.first.components[c][e]];
        auto items = items_of(c, y);
        t.push_back(sigma[item_index(items, C.identity(c), along.second.components[c][e])]);
      }
      counit.components.push_back(std::move(t));
    }
    return {pi, along, counit};
  }

  // -- subobjects -----------------------------------------------------------

  /// Subpresheaves of x, as flattened subsets of its elements.
  std::vector<Subset> subobjects(const Object& x) const {
    const auto& C = *index_;
    if (cardinality(x) > limits_.max_elements)
      throw ResourceBound("subobject lattice of " + describe_object(x) + " too large");
    std::vector<Subset> out;
    std::vector<unsigned long long> choice(C.object_count(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t c) {
      if (c == C.object_count()) {
        Subset s;
        for (std::size_t o = 0; o < C.object_count(); ++o) {
          auto part = subset_from_bits(x.sizes[o], choice[o]);
          s.insert(s.end(), part.begin(), part.end());
        }
        out.push_back(std::move(s));
        return;
      }
      for (unsigned long long bits = 0; bits < (1ULL << x.sizes[c]); ++bits) {
        choice[c] = bits;
        bool ok = true;
        for (std::size_t u = 0; u < C.arrow_count() && ok; ++u) {
          std::size_t lo = C.dom(u), hi = C.cod(u);
          if (lo > c || hi > c) continue;
          for (std::size_t e = 0; e < x.sizes[hi]; ++e)
            if (((choice[hi] >> e) & 1ULL) && !((choice[lo] >> x.restriction[u][e]) & 1ULL)) {
              ok = false;
              break;
            }
        }
        if (ok) go(c + 1);
      }
    };
    go(0);
    return out;
  }

  bool is_subpresheaf(const Object& x, const Subset& s) const {
    const auto& C = *index_;
    auto off = offsets(x);
    for (std::size_t u = 0; u < C.arrow_count(); ++u) {
      std::size_t c = C.dom(u), d = C.cod(u);
      for (std::size_t e = 0; e < x.sizes[d]; ++e)
        if (s[off[d] + e] && !s[off[c] + x.restriction[u][e]]) return false;
    }
    return true;
  }

  Arrow sub_mono(const Object& x, const Subset& s) const {
    const auto& C = *index_;
    if (s.size() != cardinality(x)) throw PreconditionError("subset size differs from object");
    if (!is_subpresheaf(x, s)) throw PreconditionError("subset is not closed under restriction");
    auto off = offsets(x);
    Presheaf sub{{}, std::vector<std::vector<std::size_t>>(C.arrow_count())};
    Arrow m{sub, x, {}};
    std::vector<std::vector<std::size_t>> rank(C.object_count());
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      std::vector<std::size_t> inc;
      rank[c].assign(x.sizes[c], npos);
      for (std::size_t e = 0; e < x.sizes[c]; ++e)
        if (s[off[c] + e]) {
          rank[c][e] = inc.size();
          inc.push_back(e);
        }
      sub.sizes.push_back(inc.size());
      m.components.push_back(std::move(inc));
    }
    for (std::size_t u = 0; u < C.arrow_count(); ++u) {
      std::size_t c = C.dom(u), d = C.cod(u);
      std::vector<std::size_t> t;
      for (std::size_t e : m.components[d]) t.push_back(rank[c][x.restriction[u][e]]);
      sub.restriction[u] = std::move(t);
    }
    m.dom = sub;
    return m;
  }

  Subset sub_key(const Arrow& mono) const { return sub_exists(mono, sub_top(mono.dom)); }

  Subset sub_top(const Object& x) const { return full_subset(cardinality(x)); }
  Subset sub_bottom(const Object& x) const { return empty_subset(cardinality(x)); }
  bool sub_leq(const Object&, const Subset& a, const Subset& b) const { return is_subset(a, b); }
  Subset sub_meet(const Object&, const Subset& a, const Subset& b) const { return intersect(a, b); }
  Subset sub_join(const Object&, const Subset& a, const Subset& b) const { return unite(a, b); }

  /// x in (a => b)(c) iff every restriction of x lying in a lies in b.
  Subset sub_implies(const Object& x, const Subset& a, const Subset& b) const {
    const auto& C = *index_;
    auto off = offsets(x);
    Subset r(cardinality(x), false);
    for (std::size_t c = 0; c < C.object_count(); ++c)
      for (std::size_t e = 0; e < x.sizes[c]; ++e) {
        bool ok = true;
        for (std::size_t u : C.arrows_into(c)) {
          std::size_t d = C.dom(u);
          std::size_t g = off[d] + x.restriction[u][e];
          if (a[g] && !b[g]) { ok = false; break; }
        }
        r[off[c] + e] = ok;
      }
    return r;
  }

  Subset sub_pullback(const Arrow& f, const Subset& s) const {
    auto offx = offsets(f.dom), offy = offsets(f.cod);
    Subset r(cardinality(f.dom));
    for (std::size_t c = 0; c < f.components.size(); ++c)
      for (std::size_t e = 0; e < f.dom.sizes[c]; ++e) r[offx[c] + e] = s[offy[c] + f.components[c][e]];
    return r;
  }

  Subset sub_exists(const Arrow& f, const Subset& s) const {
    auto offx = offsets(f.dom), offy = offsets(f.cod);
    Subset r(cardinality(f.cod), false);
    for (std::size_t c = 0; c < f.components.size(); ++c)
      for (std::size_t e = 0; e < f.dom.sizes[c]; ++e)
        if (s[offx[c] + e]) r[offy[c] + f.components[c][e]] = true;
    return r;
  }

  /// y in (forall_f s)(c) iff every x over any restriction of y lies in s.
  Subset sub_forall(const Arrow& f, const Subset& s) const {
    const auto& C = *index_;
    auto offx = offsets(f.dom), offy = offsets(f.cod);
    Subset r(cardinality(f.cod), true);
    for (std::size_t c = 0; c < C.object_count(); ++c)
      for (std::size_t y = 0; y < f.cod.sizes[c]; ++y) {
        bool ok = true;
        for (std::size_t u : C.arrows_into(c)) {
          std::size_t d = C.dom(u);
          std::size_t yu = f.cod.restriction[u][y];
          for (std::size_t x = 0; x < f.dom.sizes[d] && ok; ++x)
            if (f.components[d][x] == yu && !s[offx[d] + x]) ok = false;
          if (!ok) break;
        }
        r[offy[c] + y] = ok;
      }
    return r;
  }

  // -- set-like ---------------------------------------------------------------

  std::size_t cardinality(const Object& x) const {
    std::size_t n = 0;
    for (std::size_t s : x.sizes) n += s;
    return n;
  }

  std::vector<std::size_t> offsets(const Object& x) const {
    std::vector<std::size_t> off;
    std::size_t n = 0;
    for (std::size_t s : x.sizes) {
      off.push_back(n);
      n += s;
    }
    return off;
  }

  /// Componentwise fibre sizes, flattened over the elements of the codomain.
  std::vector<std::size_t> fibre_sizes(const Arrow& f) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < f.components.size(); ++c) {
      auto part = FinSet().fibre_sizes(component(f, c));
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::string describe_object(const Object& x) const {
    const auto& C = *index_;
    std::string s = "(";
    for (std::size_t c = 0; c < x.sizes.size(); ++c) {
      if (c) s += ",";
      s += C.object_name(c) + "=" + std::to_string(x.sizes[c]);
    }
    for (std::size_t u = 0; u < C.arrow_count(); ++u) {
      if (C.is_identity(u)) continue;
      s += " " + C.arrow(u).name + ":[";
      for (std::size_t i = 0; i < x.restriction[u].size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x.restriction[u][i]);
      }
      s += "]";
    }
    return s + ")";
  }

  std::string describe(const Arrow& f) const {
    std::string s = describe_object(f.dom) + " -> " + describe_object(f.cod) + " {";
    for (std::size_t c = 0; c < f.components.size(); ++c) {
      if (c) s += "; ";
      s += index_->object_name(c) + ":";
      for (std::size_t i = 0; i < f.components[c].size(); ++i) {
        s += (i ? "," : "") + std::to_string(f.components[c][i]);
      }
    }
    return s + "}";
  }

  /// The component at index object c as a finite-set map.
  static FinMap component(const Arrow& f, std::size_t c) {
    return FinMap{f.dom.sizes[c], f.cod.sizes[c], f.components[c]};
  }

  /// The restriction of x along index arrow u as a finite-set map.
  FinMap restrict_map(const Object& x, std::size_t u) const {
    return FinMap{x.sizes[index_->cod(u)], x.sizes[index_->dom(u)], x.restriction[u]};
  }

 private:
  static std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = i;
    return t;
  }

  // naturality squares among components 0..c
  bool natural_upto(const Arrow& a, std::size_t c) const {
    const auto& C = *index_;
    for (std::size_t u = 0; u < C.arrow_count(); ++u) {
      std::size_t lo = C.dom(u), hi = C.cod(u);
      if (lo > c || hi > c || (lo != c && hi != c)) continue;
      for (std::size_t e = 0; e < a.dom.sizes[hi]; ++e)
        if (a.components[lo][a.dom.restriction[u][e]] != a.cod.restriction[u][a.components[hi][e]])
          return false;
    }
    return true;
  }

  std::shared_ptr<const FiniteCategory> index_;
  Limits limits_{};
};

static_assert(Heyting<PresheafCategory>);
static_assert(HasQuotients<PresheafCategory>);
static_assert(HasPi<PresheafCategory>);

}  // namespace aset

#endif  // ASET_FINCAT_PRESHEAF_HPP_
