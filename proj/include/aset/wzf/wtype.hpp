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

#ifndef ASET_WZF_WTYPE_HPP_
#define ASET_WZF_WTYPE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "aset/core/errors.hpp"
#include "aset/fincat/finset.hpp"
#include "aset/wzf/polynomial.hpp"

namespace aset::wzf {

/// A well-founded tree: a constructor y and one child per element of the
/// fibre over y, in fibre order.
struct WTree {
  std::size_t root = 0;
  std::vector<std::shared_ptr<const WTree>> children;
  std::size_t depth = 1;  // a leaf has depth 1
};

using WTreePtr = std::shared_ptr<const WTree>;

inline WTreePtr make_tree(std::size_t root, std::vector<WTreePtr> children = {}) {
  std::size_t d = 0;
  for (const auto& ch : children) d = std::max(d, ch->depth);
  return std::make_shared<const WTree>(WTree{root, std::move(children), d + 1});
}

inline bool same_tree(const WTree& a, const WTree& b) {
  if (a.root != b.root || a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (a.children[i] != b.children[i] && !same_tree(*a.children[i], *b.children[i])) return false;
  return true;
}

/// Bracket notation, e.g. 1(0, 0).
inline std::string to_string(const WTree& t) {
  std::string s = std::to_string(t.root);
  if (t.children.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) s += (i ? ", " : "") + to_string(*t.children[i]);
  return s + ")";
}

/// The trees of depth <= bound, obtained by iterating P_f from the empty
/// set. Trees are listed in order of first appearance, so the first
/// census[k] of them are the ones of depth <= k + 1.
struct WTypeApprox {
  FinMap f;
  std::vector<std::vector<std::size_t>> fibres;  // fibres[y]: positions of x over y
  std::vector<WTreePtr> trees;
  std::vector<std::vector<std::size_t>> children;  // per tree, indices into trees
  std::vector<std::size_t> census;                 // census[k] = #trees of depth <= k + 1
  bool converged = false;

  std::size_t size() const { return trees.size(); }

  /// Index of sup(y, kids) or npos if that tree is not enumerated.
  std::size_t find(std::size_t y, const std::vector<std::size_t>& kids) const {
    auto it = index.find({y, kids});
    return it == index.end() ? npos : it->second;
  }

  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
};

/// Enumerates W-type trees of depth <= depth_bound. Converged means the
/// iteration reached a fixed point, in which case the trees are the whole
/// initial algebra. Throws ResourceBound (with the census so far) once
/// more than max_trees trees are produced.
inline WTypeApprox wtype(const FinMap& f, std::size_t depth_bound, std::size_t max_trees = 1u << 20) {
  WTypeApprox w;
  w.f = f;
  w.fibres.assign(f.cod, {});
  for (std::size_t x = 0; x < f.dom; ++x) w.fibres[f.table[x]].push_back(x);
  std::size_t previous = 0;
  for (std::size_t level = 0; level < depth_bound; ++level) {
    const std::size_t avail = w.trees.size();  // trees of depth <= level
    for (std::size_t y = 0; y < f.cod; ++y) {
      const std::size_t k = w.fibres[y].size();
      if (k > 0 && avail == 0) continue;
      std::vector<std::size_t> kids(k, 0);
      while (true) {
        // new iff some child has depth exactly `level`, i.e. index >= previous
        bool fresh = level == 0 || std::any_of(kids.begin(), kids.end(), [&](std::size_t i) { return i >= previous; });
        if (k == 0) fresh = level == 0;
        if (fresh) {
          std::vector<WTreePtr> ch;
          for (std::size_t i : kids) ch.push_back(w.trees[i]);
          w.index.emplace(std::pair{y, kids}, w.trees.size());
          w.trees.push_back(make_tree(y, std::move(ch)));
          w.children.push_back(kids);
          if (w.trees.size() > max_trees) {
            std::string cs;
            for (auto n : w.census) cs += " " + std::to_string(n);
            throw ResourceBound("W-type enumeration exceeds " + std::to_string(max_trees) +
                                " trees; census so far:" + cs);
          }
        }
        std::size_t i = 0;
        while (i < k && ++kids[i] == avail) kids[i++] = 0;
        if (i == k) break;
      }
    }
    previous = avail;
    w.census.push_back(w.trees.size());
    if (w.trees.size() == avail) {
      w.converged = true;
      break;
    }
  }
  return w;
}

/// The structure map P_f(W) -> W is a bijection. Only meaningful for a
/// converged enumeration; elements of P_f(W) are counted independently
/// through polynomial_apply.
inline bool structure_map_is_iso(const WTypeApprox& w) {
  FinSet c;
  auto value = polynomial_apply(c, PolynomialSignature<FinSet>{w.f}, w.size());
  if (value.object != w.size()) return false;
  // every (y, kids) with kids drawn from W must be a tree of W
  for (std::size_t y = 0; y < w.fibres.size(); ++y) {
    const std::size_t k = w.fibres[y].size();
    if (k > 0 && w.size() == 0) continue;
    std::vector<std::size_t> kids(k, 0);
    while (true) {
      if (w.find(y, kids) == npos) return false;
      std::size_t i = 0;
      while (i < k && ++kids[i] == w.size()) kids[i++] = 0;
      if (i == k) break;
    }
  }
  return true;
}

/// A P_f-algebra on {0..carrier-1}: ops[y] maps each tuple in
/// carrier^(arity y), numbered little-endian, to an element.
struct PolyAlgebra {
  std::size_t carrier = 0;
  std::vector<std::vector<std::size_t>> ops;

  std::size_t apply(std::size_t y, const std::vector<std::size_t>& args) const {
    std::size_t code = 0;
    for (std::size_t i = args.size(); i-- > 0;) code = code * carrier + args[i];
    return ops[y][code];
  }
};

/// The map from the enumerated trees into an algebra defined by structural
/// recursion, h(sup(y, t)) = a(y, h . t).
inline std::vector<std::size_t> fold(const WTypeApprox& w, const PolyAlgebra& a) {
  std::vector<std::size_t> h(w.size());
  for (std::size_t t = 0; t < w.size(); ++t) {  // children precede parents
    std::vector<std::size_t> args;
    for (std::size_t k : w.children[t]) args.push_back(h[k]);
    h[t] = a.apply(w.trees[t]->root, args);
  }
  return h;
}

/// Counts maps h from the enumerated trees to the algebra commuting with
/// the structure maps, by trying all of them.
inline std::size_t count_algebra_morphisms(const WTypeApprox& w, const PolyAlgebra& a,
                                           std::size_t max_maps = 1u << 22) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (a.carrier != 0 && total > max_maps / a.carrier) throw ResourceBound("too many maps to enumerate");
    total *= a.carrier;
  }
  if (a.carrier == 0) return w.size() == 0 ? 1 : 0;
  std::size_t count = 0;
  std::vector<std::size_t> h(w.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t t = 0; t < w.size() && ok; ++t) {
      std::vector<std::size_t> args;
      for (std::size_t k : w.children[t]) args.push_back(h[k]);
      ok = h[t] == a.apply(w.trees[t]->root, args);
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < h.size() && ++h[i] == a.carrier) h[i++] = 0;
    if (i == h.size()) break;
  }
  return count;
}

/// Extensional bisimulation on a forest: two trees are identified when the
/// sets of classes of their children agree. Labels are ignored, as for
/// sets. Computed by partition refinement starting from one block.
struct BisimQuotient {
  std::vector<std::size_t> class_of;         // per input tree
  std::vector<std::size_t> representatives;  // first input tree of each class
};

inline BisimQuotient bisim_quotient(const std::vector<WTreePtr>& input) {
  // flatten all subtrees
  std::vector<const WTree*> nodes;
  std::map<const WTree*, std::size_t> id;
  std::vector<std::vector<std::size_t>> kids;
  auto visit = [&](auto& self, const WTree* t) -> std::size_t {
    if (auto it = id.find(t); it != id.end()) return it->second;
    std::vector<std::size_t> ks;
    for (const auto& c : t->children) ks.push_back(self(self, c.get()));
    std::size_t n = nodes.size();
    nodes.push_back(t);
    kids.push_back(std::move(ks));
    id.emplace(t, n);
    return n;
  };
  std::vector<std::size_t> top;
  for (const auto& t : input) top.push_back(visit(visit, t.get()));

  std::vector<std::size_t> block(nodes.size(), 0);
  std::size_t blocks = nodes.empty() ? 0 : 1;
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> sig;
    std::vector<std::size_t> next(nodes.size());
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      std::vector<std::size_t> s;
      for (std::size_t k : kids[n]) s.push_back(block[k]);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      next[n] = sig.emplace(std::pair{block[n], std::move(s)}, sig.size()).first->second;
    }
    bool stable = sig.size() == blocks;
    block = std::move(next);
    blocks = sig.size();
    if (stable) break;
  }

  BisimQuotient q;
  std::map<std::size_t, std::size_t> cls;
  for (std::size_t i = 0; i < top.size(); ++i) {
    auto [it, fresh] = cls.emplace(block[top[i]], cls.size());
    if (fresh) q.representatives.push_back(i);
    q.class_of.push_back(it->second);
  }
  return q;
}

}  // namespace aset::wzf

#endif  // ASET_WZF_WTYPE_HPP_
