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

#ifndef ASET_SHEAVES_SITE_HPP_
#define ASET_SHEAVES_SITE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aset/core/errors.hpp"
#include "aset/fincat/finite_category.hpp"

namespace aset::sheaves {

/// A sieve on a, as a bitmask over the arrow ids of the index category.
/// Every member must have codomain a.
using Sieve = std::uint64_t;

inline bool in_sieve(Sieve s, std::size_t arrow) { return (s >> arrow) & 1U; }

/// A finite category with a coverage: cov[a] lists the covering sieves on
/// a. An optional basis lists, per object, sieves that generate the
/// coverage by enlargement.
struct Site {
  FiniteCategory category;
  std::vector<std::vector<Sieve>> cov;
  std::optional<std::vector<std::vector<Sieve>>> basis;
  std::string name = "site";

  /// The basis if declared, else the coverage itself.
  const std::vector<Sieve>& basis_covers(std::size_t a) const { return basis ? (*basis)[a] : cov[a]; }

  bool covers(std::size_t a, Sieve s) const { return std::find(cov[a].begin(), cov[a].end(), s) != cov[a].end(); }
};

inline void require_small_index(const FiniteCategory& c) {
  if (c.arrow_count() > 64) throw ResourceBound("sieves are limited to 64 index arrows");
}

inline Sieve maximal_sieve(const FiniteCategory& c, std::size_t a) {
  Sieve s = 0;
  for (std::size_t f : c.arrows_into(a)) s |= Sieve{1} << f;
  return s;
}

/// Members on a and closed under precomposition.
inline bool is_sieve(const FiniteCategory& c, std::size_t a, Sieve s) {
  for (std::size_t f = 0; f < c.arrow_count(); ++f) {
    if (!in_sieve(s, f)) continue;
    if (c.cod(f) != a) return false;
    for (std::size_t g : c.arrows_into(c.dom(f)))
      if (!in_sieve(s, c.compose(f, g))) return false;
  }
  if (s >> c.arrow_count()) return false;
  return true;
}

/// Every sieve on a, in increasing bitmask order.
inline std::vector<Sieve> all_sieves(const FiniteCategory& c, std::size_t a) {
  require_small_index(c);
  auto into = c.arrows_into(a);
  if (into.size() > 20) throw ResourceBound("too many arrows into " + c.object_name(a) + " to list sieves");
  std::vector<Sieve> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << into.size()); ++bits) {
    Sieve s = 0;
    for (std::size_t i = 0; i < into.size(); ++i)
      if ((bits >> i) & 1U) s |= Sieve{1} << into[i];
    if (is_sieve(c, a, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// f*S = { g : f . g in S } for f: b -> a.
inline Sieve pullback_sieve(const FiniteCategory& c, std::size_t f, Sieve s) {
  Sieve out = 0;
  for (std::size_t g : c.arrows_into(c.dom(f)))
    if (in_sieve(s, c.compose(f, g))) out |= Sieve{1} << g;
  return out;
}

/// The sieve on a generated by a family of arrows into a.
inline Sieve generated_sieve(const FiniteCategory& c, std::size_t a, const std::vector<std::size_t>& family) {
  Sieve out = 0;
  for (std::size_t f : family) {
    if (c.cod(f) != a) throw PreconditionError("arrow " + c.arrow(f).name + " does not end at " + c.object_name(a));
    for (std::size_t g : c.arrows_into(c.dom(f))) out |= Sieve{1} << c.compose(f, g);
  }
  return out;
}

inline std::string describe_sieve(const FiniteCategory& c, Sieve s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t f = 0; f < c.arrow_count(); ++f)
    if (in_sieve(s, f)) {
      out += (first ? "" : ", ") + c.arrow(f).name;
      first = false;
    }
  return out + "}";
}

// -- topologies -------------------------------------------------------------------

/// Only maximal sieves cover.
inline Site trivial_site(FiniteCategory c) {
  require_small_index(c);
  Site s{c, {}, std::nullopt, "trivial(" + c.name() + ")"};
  for (std::size_t a = 0; a < c.object_count(); ++a) s.cov.push_back({maximal_sieve(c, a)});
  s.basis = s.cov;
  return s;
}

/// S covers a iff every arrow into a can be extended into S, i.e. for all
/// f: b -> a some g: c -> b has f . g in S.
inline Site dense_site(FiniteCategory c) {
  require_small_index(c);
  Site s{c, {}, std::nullopt, "dense(" + c.name() + ")"};
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    std::vector<Sieve> covers;
    for (Sieve t : all_sieves(c, a)) {
      bool dense = true;
      for (std::size_t f : c.arrows_into(a)) {
        bool ext = false;
        for (std::size_t g : c.arrows_into(c.dom(f))) ext = ext || in_sieve(t, c.compose(f, g));
        dense = dense && ext;
      }
      if (dense) covers.push_back(t);
    }
    s.cov.push_back(std::move(covers));
  }
  return s;
}

/// The poset 0 < 2 > 1 with the dense topology.
inline Site dense_vee_site() {
  std::vector<std::vector<bool>> leq = {{true, false, true}, {false, true, true}, {false, false, true}};
  return dense_site(FiniteCategory::poset(3, leq, "vee"));
}

/// 0 -> 1 where {u} covers 1: the standard nontrivial two-object site.
/// Its basis is {max} on 0 and {{u}} on 1.
inline Site arrow_site() {
  FiniteCategory c = FiniteCategory::arrow_category();
  const std::size_t u = *c.find_arrow("u");
  Site s{c, {}, std::nullopt, "arrow-site"};
  s.cov = {{maximal_sieve(c, 0)}, {Sieve{1} << u, maximal_sieve(c, 1)}};
  std::sort(s.cov[1].begin(), s.cov[1].end());
  s.basis = std::vector<std::vector<Sieve>>{{maximal_sieve(c, 0)}, {Sieve{1} << u}};
  return s;
}

// -- validation -------------------------------------------------------------------

struct SiteCheck {
  std::string axiom;  // "sieves", "M", "L", "T"
  bool holds = true;
  std::string witness;
};

/// Checks that covers are sieves and the three coverage axioms:
///   (M) the maximal sieve covers;
///   (L) covers pull back to covers;
///   (T) a sieve that is locally covering on a cover is covering.
inline std::vector<SiteCheck> validate_site(const Site& site) {
  const auto& c = site.category;
  require_small_index(c);
  if (site.cov.size() != c.object_count()) throw PreconditionError("coverage needs one entry per object");
  std::vector<SiteCheck> out = {{"sieves"}, {"M"}, {"L"}, {"T"}};
  auto refute = [&](std::size_t k, std::string w) {
    if (out[k].holds) {
      out[k].holds = false;
      out[k].witness = std::move(w);
    }
  };
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    for (Sieve s : site.cov[a])
      if (!is_sieve(c, a, s)) refute(0, describe_sieve(c, s) + " on " + c.object_name(a) + " is not a sieve");
    if (!site.covers(a, maximal_sieve(c, a))) refute(1, "maximal sieve on " + c.object_name(a) + " does not cover");
    for (Sieve s : site.cov[a])
      for (std::size_t f : c.arrows_into(a)) {
        Sieve p = pullback_sieve(c, f, s);
        if (!site.covers(c.dom(f), p))
          refute(2, c.arrow(f).name + "*" + describe_sieve(c, s) + " = " + describe_sieve(c, p) + " does not cover " +
                        c.object_name(c.dom(f)));
      }
    for (Sieve t : all_sieves(c, a)) {
      if (site.covers(a, t)) continue;
      for (Sieve s : site.cov[a]) {
        bool local = true;
        for (std::size_t f = 0; f < c.arrow_count() && local; ++f)
          if (in_sieve(s, f)) local = site.covers(c.dom(f), pullback_sieve(c, f, t));
        if (local) {
          refute(3, describe_sieve(c, t) + " is covering locally on " + describe_sieve(c, s) + " but not a cover of " +
                        c.object_name(a));
          break;
        }
      }
    }
  }
  return out;
}

inline bool site_is_valid(const Site& site) {
  auto checks = validate_site(site);
  return std::all_of(checks.begin(), checks.end(), [](const SiteCheck& k) { return k.holds; });
}

struct BasisCheck {
  bool holds = true;
  std::string witness;
};

/// The basis generates the coverage exactly: S covers a iff S contains a
/// basis sieve on a.
inline BasisCheck bounded_cov_check(const Site& site) {
  if (!site.basis) throw PreconditionError("site has no basis");
  const auto& c = site.category;
  for (std::size_t a = 0; a < c.object_count(); ++a)
    for (Sieve s : all_sieves(c, a)) {
      bool generated = false;
      for (Sieve r : (*site.basis)[a]) generated = generated || (r & ~s) == 0;
      if (generated != site.covers(a, s))
        return {false, describe_sieve(c, s) + " on " + c.object_name(a) +
                           (generated ? " contains a basis sieve but is not declared covering"
                                      : " is declared covering but contains no basis sieve")};
    }
  return {};
}

}  // namespace aset::sheaves

#endif  // ASET_SHEAVES_SITE_HPP_
