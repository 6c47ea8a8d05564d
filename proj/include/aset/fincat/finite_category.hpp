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

#ifndef ASET_FINCAT_FINITE_CATEGORY_HPP_
#define ASET_FINCAT_FINITE_CATEGORY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "aset/core/concepts.hpp"
#include "aset/core/errors.hpp"
#include "aset/fincat/finset.hpp"
#include "aset/fincat/universal.hpp"

namespace aset {

struct ArrowInfo {
  std::string name;
  std::size_t dom = 0;
  std::size_t cod = 0;
};

/// A composite g . f = h between named arrows.
struct Composite {
  std::string g;
  std::string f;
  std::string h;
};

struct Capabilities {
  bool finite_limits = false;
  bool regular = false;
  bool sums = false;
  bool heyting = false;
};

/// A finitely presented category: finitely many objects and arrows with a
/// complete composition table. Arrow ids 0..n-1 are the identities of
/// objects 0..n-1; the listed arrows follow.
class FiniteCategory {
 public:
  using Object = std::size_t;
  using Arrow = std::size_t;

  FiniteCategory(std::vector<std::string> objects, std::vector<ArrowInfo> arrows,
                 const std::vector<Composite>& composites, Capabilities declared = {},
                 std::string name = "finite category")
      : name_(std::move(name)), objects_(std::move(objects)), declared_(declared) {
    for (std::size_t o = 0; o < objects_.size(); ++o)
      arrows_.push_back(ArrowInfo{"id_" + objects_[o], o, o});
    for (auto& a : arrows) {
      if (a.dom >= objects_.size() || a.cod >= objects_.size())
        throw PreconditionError("arrow " + a.name + " has an unknown endpoint");
      arrows_.push_back(std::move(a));
    }
    std::map<std::string, std::size_t> by_name;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      if (!by_name.emplace(arrows_[i].name, i).second)
        throw PreconditionError("duplicate arrow name " + arrows_[i].name);
    }
    const std::size_t n = arrows_.size();
    table_.assign(n * n, npos);
    for (std::size_t f = 0; f < n; ++f) {
      table_[arrows_[f].cod * n + f] = f;  // id . f
      table_[f * n + arrows_[f].dom] = f;  // f . id
    }
    for (const auto& c : composites) {
      auto find = [&](const std::string& s) {
        auto it = by_name.find(s);
        if (it == by_name.end()) throw PreconditionError("unknown arrow " + s + " in composition table");
        return it->second;
      };
      std::size_t g = find(c.g), f = find(c.f), h = find(c.h);
      if (arrows_[f].cod != arrows_[g].dom)
        throw PreconditionError("composite " + c.g + " . " + c.f + " of non-composable arrows");
      if (arrows_[h].dom != arrows_[f].dom || arrows_[h].cod != arrows_[g].cod)
        throw PreconditionError("composite " + c.g + " . " + c.f + " = " + c.h + " has wrong endpoints");
      std::size_t& slot = table_[g * n + f];
      if (slot != npos && slot != h)
        throw PreconditionError("conflicting composites for " + c.g + " . " + c.f);
      slot = h;
    }
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t f = 0; f < n; ++f)
        if (arrows_[f].cod == arrows_[g].dom && table_[g * n + f] == npos)
          throw PreconditionError("composition table lacks " + arrows_[g].name + " . " + arrows_[f].name);
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f) {
          if (arrows_[f].cod != arrows_[g].dom || arrows_[g].cod != arrows_[h].dom) continue;
          if (compose(h, compose(g, f)) != compose(compose(h, g), f))
            throw PreconditionError("composition is not associative at " + arrows_[h].name + ", " +
                                    arrows_[g].name + ", " + arrows_[f].name);
        }
  }

  // -- built-in index categories ------------------------------------------

  static FiniteCategory terminal_category() {
    return FiniteCategory({"*"}, {}, {}, {}, "1");
  }

  /// Two objects and one non-identity arrow u: 0 -> 1.
  static FiniteCategory arrow_category() {
    return FiniteCategory({"0", "1"}, {{"u", 0, 1}}, {}, {}, "0->1");
  }

  static FiniteCategory discrete(std::size_t n) {
    std::vector<std::string> objs;
    for (std::size_t i = 0; i < n; ++i) objs.push_back(std::to_string(i));
    return FiniteCategory(objs, {}, {}, {}, "discrete(" + std::to_string(n) + ")");
  }

  /// The poset on 0..n-1 with i <= j iff leq[i][j] (assumed reflexive and
  /// transitive). The arrow i -> j is named "i<j".
  static FiniteCategory poset(std::size_t n, const std::vector<std::vector<bool>>& leq,
                              std::string name = "poset") {
    std::vector<std::string> objs;
    for (std::size_t i = 0; i < n; ++i) objs.push_back(std::to_string(i));
    std::vector<ArrowInfo> arrows;
    auto arrow_name = [](std::size_t i, std::size_t j) {
      return std::to_string(i) + "<" + std::to_string(j);
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && leq[i][j]) arrows.push_back({arrow_name(i, j), i, j});
    std::vector<Composite> comps;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (i != j && j != k && leq[i][j] && leq[j][k])
            comps.push_back({arrow_name(j, k), arrow_name(i, j), i == k ? "id_" + objs[i] : arrow_name(i, k)});
    return FiniteCategory(objs, arrows, comps, {}, std::move(name));
  }

  /// The chain 0 < 1 < ... < n-1.
  static FiniteCategory chain(std::size_t n) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
    return poset(n, leq, "chain(" + std::to_string(n) + ")");
  }

  // -- category interface ---------------------------------------------------

  std::string name() const { return name_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& object_name(Object o) const { return objects_[o]; }
  const ArrowInfo& arrow(Arrow a) const { return arrows_[a]; }
  const Capabilities& declared() const { return declared_; }

  std::optional<Arrow> find_arrow(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].name == name) return i;
    return std::nullopt;
  }

  std::optional<Object> find_object(const std::string& name) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
      if (objects_[i] == name) return i;
    return std::nullopt;
  }

  Object dom(Arrow a) const { return arrows_[a].dom; }
  Object cod(Arrow a) const { return arrows_[a].cod; }
  Arrow identity(Object o) const { return o; }
  bool is_identity(Arrow a) const { return a < objects_.size(); }

  Arrow compose(Arrow g, Arrow f) const {
    Arrow h = table_[g * arrows_.size() + f];
    if (h == npos)
      throw CompositionError("cannot compose " + arrows_[g].name + " after " + arrows_[f].name);
    return h;
  }

  std::vector<Arrow> hom(Object x, Object y) const {
    std::vector<Arrow> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (arrows_[a].dom == x && arrows_[a].cod == y) out.push_back(a);
    return out;
  }

  std::vector<Arrow> arrows_into(Object y) const {
    std::vector<Arrow> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (arrows_[a].cod == y) out.push_back(a);
    return out;
  }

  std::vector<Object> objects(std::size_t = 0) const {
    std::vector<Object> out(objects_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }

  std::string describe(Arrow a) const {
    return arrows_[a].name + ": " + objects_[arrows_[a].dom] + " -> " + objects_[arrows_[a].cod];
  }
  std::string describe_object(Object o) const { return objects_[o]; }

  // -- structure found by search -------------------------------------------

  bool is_mono(Arrow f) const {
    for (Object x : objects())
      for (Arrow g : hom(x, dom(f)))
        for (Arrow h : hom(x, dom(f)))
          if (g != h && compose(f, g) == compose(f, h)) return false;
    return true;
  }

  bool is_iso(Arrow f) const {
    for (Arrow g : hom(cod(f), dom(f)))
      if (is_identity(compose(g, f)) && is_identity(compose(f, g))) return true;
    return false;
  }

  /// f is extremal epi: whenever f = m . e with m mono, m is an iso.
  bool is_extremal_epi(Arrow f) const {
    for (Object z : objects())
      for (Arrow e : hom(dom(f), z))
        for (Arrow m : hom(z, cod(f)))
          if (compose(m, e) == f && is_mono(m) && !is_iso(m)) return false;
    return true;
  }

  std::optional<Object> find_terminal() const {
    for (Object t : objects()) {
      bool ok = true;
      for (Object x : objects()) ok = ok && hom(x, t).size() == 1;
      if (ok) return t;
    }
    return std::nullopt;
  }

  std::optional<Object> find_initial() const {
    for (Object t : objects()) {
      bool ok = true;
      for (Object x : objects()) ok = ok && hom(t, x).size() == 1;
      if (ok) return t;
    }
    return std::nullopt;
  }

  /// A pullback of the cospan (f, g), found by searching cones and checking
  /// the universal property against every object.
  std::optional<Cone<FiniteCategory>> find_pullback(Arrow f, Arrow g) const {
    if (cod(f) != cod(g)) throw CompositionError("pullback of arrows with different codomains");
    for (Object p : objects())
      for (Arrow a : hom(p, dom(f)))
        for (Arrow b : hom(p, dom(g))) {
          if (compose(f, a) != compose(g, b)) continue;
          Cone<FiniteCategory> cone{p, a, b};
          if (verify_pullback(*this, f, g, cone, objects(), npos) == SearchResult::kHolds) return cone;
        }
    return std::nullopt;
  }

  /// A coproduct of x and y found by search.
  std::optional<Cocone<FiniteCategory>> find_coproduct(Object x, Object y) const {
    for (Object s : objects())
      for (Arrow i : hom(x, s))
        for (Arrow j : hom(y, s)) {
          bool ok = true;
          for (Object z : objects()) {
            for (Arrow f : hom(x, z))
              for (Arrow g : hom(y, z)) {
                std::size_t found = 0;
                for (Arrow h : hom(s, z))
                  if (compose(h, i) == f && compose(h, j) == g) ++found;
                ok = ok && found == 1;
              }
            if (!ok) break;
          }
          if (ok) return Cocone<FiniteCategory>{s, i, j};
        }
    return std::nullopt;
  }

  /// Extremal-epi / mono factorization of f found by search.
  std::optional<std::pair<Arrow, Arrow>> find_image(Arrow f) const {
    for (Object z : objects())
      for (Arrow e : hom(dom(f), z))
        for (Arrow m : hom(z, cod(f)))
          if (compose(m, e) == f && is_mono(m) && is_extremal_epi(e)) return std::make_pair(e, m);
    return std::nullopt;
  }

  struct CapabilityReport {
    std::string capability;
    bool declared = false;
    bool holds = false;
    std::string witness;
  };

  /// Checks each declared capability by exhaustive search. A capability that
  /// is not declared is still reported, so callers can see what holds.
  std::vector<CapabilityReport> verify_capabilities() const {
    std::vector<CapabilityReport> out;
    {
      CapabilityReport r{"finite-limits", declared_.finite_limits, true, ""};
      if (!find_terminal()) {
        r.holds = false;
        r.witness = "no terminal object";
      }
      for (std::size_t f = 0; f < arrow_count() && r.holds; ++f)
        for (std::size_t g = 0; g < arrow_count() && r.holds; ++g)
          if (cod(f) == cod(g) && !find_pullback(f, g)) {
            r.holds = false;
            r.witness = "no pullback of " + arrows_[f].name + ", " + arrows_[g].name;
          }
      out.push_back(r);
    }
    {
      CapabilityReport r{"regular", declared_.regular, out[0].holds, out[0].holds ? "" : "not cartesian"};
      for (std::size_t f = 0; f < arrow_count() && r.holds; ++f)
        if (!find_image(f)) {
          r.holds = false;
          r.witness = "no image factorization of " + arrows_[f].name;
        }
      // extremal epis stable under pullback
      for (std::size_t e = 0; e < arrow_count() && r.holds; ++e) {
        if (!is_extremal_epi(e)) continue;
        for (std::size_t g = 0; g < arrow_count() && r.holds; ++g) {
          if (cod(g) != cod(e)) continue;
          auto pb = find_pullback(e, g);
          if (pb && !is_extremal_epi(pb->second)) {
            r.holds = false;
            r.witness = "cover " + arrows_[e].name + " not stable along " + arrows_[g].name;
          }
        }
      }
      out.push_back(r);
    }
    {
      CapabilityReport r{"sums", declared_.sums, true, ""};
      if (!find_initial()) {
        r.holds = false;
        r.witness = "no initial object";
      }
      for (Object x : objects())
        for (Object y : objects())
          if (r.holds && !find_coproduct(x, y)) {
            r.holds = false;
            r.witness = "no coproduct of " + objects_[x] + ", " + objects_[y];
          }
      out.push_back(r);
    }
    {
      CapabilityReport r{"heyting", declared_.heyting, out[1].holds, out[1].holds ? "" : "not regular"};
      for (Object x : objects()) {
        if (!r.holds) break;
        if (!subobject_poset_is_heyting(x)) {
          r.holds = false;
          r.witness = "Sub(" + objects_[x] + ") is not a Heyting algebra";
        }
      }
      out.push_back(r);
    }
    return out;
  }

  /// Monos into x up to isomorphism (one representative per class).
  std::vector<Arrow> subobject_representatives(Object x) const {
    std::vector<Arrow> reps;
    for (std::size_t m = 0; m < arrow_count(); ++m) {
      if (cod(m) != x || !is_mono(m)) continue;
      bool known = false;
      for (Arrow r : reps) known = known || (factors_through(m, r) && factors_through(r, m));
      if (!known) reps.push_back(m);
    }
    return reps;
  }

  /// m factors through n (both into the same object).
  bool factors_through(Arrow m, Arrow n) const {
    for (Arrow k : hom(dom(m), dom(n)))
      if (compose(n, k) == m) return true;
    return false;
  }

 private:
  bool subobject_poset_is_heyting(Object x) const {
    auto reps = subobject_representatives(x);
    const std::size_t n = reps.size();
    auto leq = [&](std::size_t i, std::size_t j) { return factors_through(reps[i], reps[j]); };
    auto greatest = [&](const std::vector<std::size_t>& xs) -> std::optional<std::size_t> {
      for (std::size_t k : xs) {
        bool ok = true;
        for (std::size_t m : xs) ok = ok && leq(m, k);
        if (ok) return k;
      }
      return std::nullopt;
    };
    std::vector<std::size_t> meet(n * n, npos);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> lower;
        for (std::size_t k = 0; k < n; ++k)
          if (leq(k, i) && leq(k, j)) lower.push_back(k);
        auto m = greatest(lower);
        if (!m) return false;
        meet[i * n + j] = *m;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> cands;
        for (std::size_t k = 0; k < n; ++k)
          if (leq(meet[k * n + i], j)) cands.push_back(k);
        if (!greatest(cands)) return false;
      }
    return true;
  }

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<ArrowInfo> arrows_;
  std::vector<std::size_t> table_;
  Capabilities declared_;
};

static_assert(Category<FiniteCategory>);

}  // namespace aset

#endif  // ASET_FINCAT_FINITE_CATEGORY_HPP_
