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

#ifndef ASET_SHEAVES_SHEAFIFY_HPP_
#define ASET_SHEAVES_SHEAFIFY_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "aset/core/errors.hpp"
#include "aset/fincat/presheaf.hpp"
#include "aset/sheaves/site.hpp"

namespace aset::sheaves {

inline std::vector<std::size_t> members(const FiniteCategory& c, Sieve s) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < c.arrow_count(); ++f)
    if (in_sieve(s, f)) out.push_back(f);
  return out;
}

/// Compatible families for the sieve s on a: one element of X(dom f) per
/// member f, listed in arrow-id order, with X(g)(x_f) = x_{f.g}.
inline std::vector<std::vector<std::size_t>> matching_families(const FiniteCategory& c, const Presheaf& x,
                                                               std::size_t a, Sieve s,
                                                               std::size_t limit = std::size_t{1} << 20) {
  (void)a;
  auto ms = members(c, s);
  std::vector<std::size_t> pos(c.arrow_count(), npos);
  for (std::size_t i = 0; i < ms.size(); ++i) pos[ms[i]] = i;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> val(ms.size(), 0);
  // constraints checked once both ends are assigned
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == ms.size()) {
      if (out.size() >= limit) throw ResourceBound("too many matching families");
      out.push_back(val);
      return;
    }
    const std::size_t f = ms[i];
    for (std::size_t v = 0; v < x.sizes[c.dom(f)]; ++v) {
      val[i] = v;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        const std::size_t h = ms[j];
        // h = f . g  or  f = h . g
        for (std::size_t g : c.arrows_into(c.dom(f)))
          if (c.compose(f, g) == h && x.restriction[g][val[i]] != val[j]) ok = false;
        for (std::size_t g : c.arrows_into(c.dom(h)))
          if (ok && c.compose(h, g) == f && x.restriction[g][val[j]] != val[i]) ok = false;
      }
      if (ok) go(i + 1);
    }
  };
  go(0);
  return out;
}

/// Elements x of X(a) with X(f)(x) = family_f for every member f of s.
inline std::vector<std::size_t> amalgamations(const FiniteCategory& c, const Presheaf& x, std::size_t a, Sieve s,
                                              const std::vector<std::size_t>& family) {
  auto ms = members(c, s);
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < x.sizes[a]; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < ms.size() && ok; ++i) ok = x.restriction[ms[i]][e] == family[i];
    if (ok) out.push_back(e);
  }
  return out;
}

struct SheafCheck {
  bool holds = true;
  std::string witness;
};

/// Every compatible family on every covering sieve has exactly one
/// amalgamation (or at most one, when only separation is asked for).
inline SheafCheck sheaf_condition(const Site& site, const Presheaf& x, bool separation_only = false) {
  const auto& c = site.category;
  for (std::size_t a = 0; a < c.object_count(); ++a)
    for (Sieve s : site.cov[a])
      for (const auto& fam : matching_families(c, x, a, s)) {
        std::size_t n = amalgamations(c, x, a, s, fam).size();
        if (n > 1 || (n == 0 && !separation_only)) {
          std::string w = "family (";
          for (std::size_t i = 0; i < fam.size(); ++i) w += (i ? "," : "") + std::to_string(fam[i]);
          return {false, w + ") on " + describe_sieve(c, s) + " has " + std::to_string(n) + " amalgamations"};
        }
      }
  return {};
}

inline bool is_sheaf(const Site& site, const Presheaf& x) { return sheaf_condition(site, x).holds; }
inline bool is_separated(const Site& site, const Presheaf& x) { return sheaf_condition(site, x, true).holds; }

/// One application of the plus construction, with the data needed to
/// transport maps: sections over a are compatible families on basis covers,
/// two being identified when they agree on some smaller basis cover.
struct Plus {
  Presheaf result;
  PshMap unit;
  // per object: (basis sieve, family) -> class
  std::vector<std::map<std::pair<Sieve, std::vector<std::size_t>>, std::size_t>> class_of;
  // per object and class: a representative
  std::vector<std::vector<std::pair<Sieve, std::vector<std::size_t>>>> rep;
};

namespace detail {

inline std::vector<std::size_t> restrict_family(const FiniteCategory& c, Sieve from, const std::vector<std::size_t>& fam,
                                                Sieve to) {
  auto mf = members(c, from);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mf.size(); ++i)
    if (in_sieve(to, mf[i])) out.push_back(fam[i]);
  return out;
}

inline Sieve basis_inside(const Site& site, std::size_t b, Sieve s) {
  for (Sieve r : site.basis_covers(b))
    if ((r & ~s) == 0) return r;
  throw PreconditionError("cover " + describe_sieve(site.category, s) + " on " + site.category.object_name(b) +
                          " contains no basis sieve");
}

}  // namespace detail

inline Plus plus_construction(const Site& site, const Presheaf& x) {
  const auto& c = site.category;
  const std::size_t n = c.object_count();
  Plus p;
  p.result.sizes.assign(n, 0);
  p.result.restriction.assign(c.arrow_count(), {});
  p.class_of.resize(n);
  p.rep.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (site.basis_covers(a).empty()) throw PreconditionError("no covering sieve on " + c.object_name(a));
    std::vector<std::pair<Sieve, std::vector<std::size_t>>> entries;
    for (Sieve r : site.basis_covers(a))
      for (auto& fam : matching_families(c, x, a, r)) entries.emplace_back(r, std::move(fam));
    // union entries that agree on a common basis cover
    std::vector<std::size_t> parent(entries.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
      return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    std::map<std::pair<Sieve, std::vector<std::size_t>>, std::size_t> seen;
    for (std::size_t e = 0; e < entries.size(); ++e)
      for (Sieve r : site.basis_covers(a)) {
        if ((r & ~entries[e].first) != 0) continue;
        auto key = std::pair{r, detail::restrict_family(c, entries[e].first, entries[e].second, r)};
        auto [it, fresh] = seen.emplace(key, e);
        if (!fresh) parent[find(e)] = find(it->second);
      }
    std::map<std::size_t, std::size_t> cls;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      auto [it, fresh] = cls.emplace(find(e), cls.size());
      if (fresh) p.rep[a].push_back(entries[e]);
      p.class_of[a][entries[e]] = it->second;
    }
    p.result.sizes[a] = cls.size();
  }
  for (std::size_t h = 0; h < c.arrow_count(); ++h) {
    const std::size_t b = c.dom(h), a = c.cod(h);
    auto& t = p.result.restriction[h];
    for (const auto& [r, fam] : p.rep[a]) {
      Sieve pulled = pullback_sieve(c, h, r);
      Sieve target = detail::basis_inside(site, b, pulled);
      std::vector<std::size_t> y;
      auto mr = members(c, r);
      std::vector<std::size_t> pos(c.arrow_count(), npos);
      for (std::size_t i = 0; i < mr.size(); ++i) pos[mr[i]] = i;
      for (std::size_t g : members(c, target)) y.push_back(fam[pos[c.compose(h, g)]]);
      t.push_back(p.class_of[b].at({target, y}));
    }
  }
  p.unit = PshMap{x, p.result, std::vector<std::vector<std::size_t>>(n)};
  for (std::size_t a = 0; a < n; ++a) {
    Sieve r = site.basis_covers(a).front();
    for (std::size_t e = 0; e < x.sizes[a]; ++e) {
      std::vector<std::size_t> fam;
      for (std::size_t f : members(c, r)) fam.push_back(x.restriction[f][e]);
      p.unit.components[a].push_back(p.class_of[a].at({r, fam}));
    }
  }
  return p;
}

/// The plus construction on a natural map g: X -> Y, given both plus data.
inline PshMap plus_map(const Site& site, const Plus& px, const Plus& py, const PshMap& g) {
  const auto& c = site.category;
  PshMap out{px.result, py.result, std::vector<std::vector<std::size_t>>(c.object_count())};
  for (std::size_t a = 0; a < c.object_count(); ++a)
    for (const auto& [r, fam] : px.rep[a]) {
      auto ms = members(c, r);
      std::vector<std::size_t> y;
      for (std::size_t i = 0; i < ms.size(); ++i) y.push_back(g.components[c.dom(ms[i])][fam[i]]);
      out.components[a].push_back(py.class_of[a].at({r, y}));
    }
  return out;
}

struct Sheafification {
  Presheaf sheaf;
  PshMap unit;  // X -> aX
  Plus first, second;
};

/// aX = (X+)+, with unit the composite of the two plus units.
inline Sheafification sheafify(const Site& site, const Presheaf& x) {
  Sheafification s;
  s.first = plus_construction(site, x);
  s.second = plus_construction(site, s.first.result);
  s.sheaf = s.second.result;
  PresheafCategory psh(site.category);
  s.unit = psh.compose(s.second.unit, s.first.unit);
  return s;
}

/// a(g): aX -> aY.
inline PshMap sheafify_map(const Site& site, const Sheafification& sx, const Sheafification& sy, const PshMap& g) {
  PshMap once = plus_map(site, sx.first, sy.first, g);
  return plus_map(site, sx.second, sy.second, once);
}

inline bool is_componentwise_bijective(const PshMap& f) {
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    if (f.dom.sizes[c] != f.cod.sizes[c]) return false;
    std::vector<bool> hit(f.cod.sizes[c], false);
    for (std::size_t v : f.components[c]) {
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

/// Inverse of a componentwise bijective natural map.
inline PshMap invert(const PshMap& f) {
  if (!is_componentwise_bijective(f)) throw PreconditionError("map is not invertible");
  PshMap g{f.cod, f.dom, std::vector<std::vector<std::size_t>>(f.components.size())};
  for (std::size_t c = 0; c < f.components.size(); ++c) {
    g.components[c].assign(f.cod.sizes[c], 0);
    for (std::size_t i = 0; i < f.components[c].size(); ++i) g.components[c][f.components[c][i]] = i;
  }
  return g;
}

}  // namespace aset::sheaves

#endif  // ASET_SHEAVES_SHEAFIFY_HPP_
