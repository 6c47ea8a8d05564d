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

#ifndef ASET_WZF_SET_AXIOMS_HPP_
#define ASET_WZF_SET_AXIOMS_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "aset/core/errors.hpp"
#include "aset/fincat/finset.hpp"
#include "aset/logic/eval.hpp"
#include "aset/logic/parser.hpp"
#include "aset/logic/schemas.hpp"
#include "aset/wzf/zf_algebra.hpp"

namespace aset::wzf {

enum class SetAxiomOutcome { kHolds, kFails, kOutOfHeadroom };

inline const char* to_string(SetAxiomOutcome o) {
  switch (o) {
    case SetAxiomOutcome::kHolds: return "holds";
    case SetAxiomOutcome::kFails: return "fails";
    case SetAxiomOutcome::kOutOfHeadroom: return "out-of-headroom";
  }
  return "?";
}

struct SetAxiomVerdict {
  logic::SchemaId axiom;
  SetAxiomOutcome outcome = SetAxiomOutcome::kHolds;
  logic::FormulaPtr formula;  // the relativized instance that was evaluated
  std::size_t rank = 0;
  std::size_t headroom = 0;
  std::size_t required_headroom = 0;
  // On failure: values of the outermost universally quantified variables
  // at which the instance fails, or empty if it fails with none (a
  // top-level existential has no witness).
  std::vector<std::pair<std::string, std::string>> witness;
};

/// Rank slack a schema needs so that the set it asserts stays inside V_n
/// when its inputs range over V_{n-h}.
inline std::size_t required_headroom(logic::SchemaId id) {
  using logic::SchemaId;
  switch (id) {
    case SchemaId::kPairing:
    case SchemaId::kUnion:
    case SchemaId::kPowerSet:
    case SchemaId::kStrongCollection:
    case SchemaId::kSubsetCollection: return 1;
    case SchemaId::kFullness: return 4;  // Kuratowski pairs cost two ranks, relations and their sets one each
    default: return 0;
  }
}

/// V_n as a structure with two sorts: V for all of V_n, Vh for
/// V_{n-h}, with Vh -> V the inclusion and eps (x in y iff s x <= y) as the
/// membership relation. Unannotated quantifiers range over Vh.
inline logic::Structure<FinSet> v_structure(const FinSet& c, const VApprox& v, std::size_t headroom) {
  if (headroom > v.rank()) throw PreconditionError("headroom exceeds rank");
  const std::size_t low = v.stage_size(v.rank() - headroom);
  logic::Structure<FinSet> s(c);
  s.add_sort("V", v.size());
  s.add_sort("Vh", low);
  std::vector<std::size_t> incl(low);
  for (std::size_t i = 0; i < low; ++i) incl[i] = i;
  s.add_coercion("Vh", "V", make_map(low, v.size(), incl));
  s.add_relation("in", {"V", "V"}, v.membership_relation());
  s.set_default_sort("Vh");
  return s;
}

/// Parameter formulas used when a schema is checked without an explicit
/// one. Free variables other than the schema's own are parameters.
inline std::vector<logic::FormulaPtr> sample_parameters(logic::SchemaId id) {
  using logic::SchemaId;
  std::vector<const char*> src;
  switch (id) {
    case SchemaId::kEpsilonInduction:
      src = {"exists y in x. true", "~x in x", "forall y in x. exists z in y. true \\/ x = p"};
      break;
    case SchemaId::kBoundedSeparation:
      src = {"exists z in y. true", "forall z in y. exists w in z. true", "y in p", "~(exists z in p. y in z)",
             "exists z in y. forall w in z. w in p"};
      break;
    case SchemaId::kStrongCollection:
      src = {"x in y", "y = x", "forall z in y. z in x"};
      break;
    case SchemaId::kFullSeparation:
      src = {"exists z. z in y /\\ (forall w. ~w in z)", "forall z. z in y -> z in p"};
      break;
    case SchemaId::kSubsetCollection:
      src = {"y = x \\/ y in z"};
      break;
    default:
      return {nullptr};
  }
  std::vector<logic::FormulaPtr> out;
  for (const char* s : src) out.push_back(logic::parse(s));
  return out;
}

/// Evaluates one instance of a set axiom in V_n, with the constructed set
/// ranging over V_n and every other unbounded variable over V_{n-h}.
inline SetAxiomVerdict check_set_axiom(logic::SchemaId id, const VApprox& v, std::size_t headroom,
                                       const logic::FormulaPtr& phi = nullptr,
                                       std::size_t max_context = std::size_t{1} << 22) {
  SetAxiomVerdict out{id};
  out.rank = v.rank();
  out.headroom = headroom;
  out.required_headroom = required_headroom(id);
  out.formula = logic::instantiate_schema(id, phi, {"V", "Vh"});
  if (headroom < out.required_headroom || headroom > v.rank()) {
    out.outcome = SetAxiomOutcome::kOutOfHeadroom;
    return out;
  }
  FinSet c;
  auto env = v_structure(c, v, headroom);
  // peel the outer universal block so a failure can name its instance
  logic::FormulaPtr body = out.formula;
  std::vector<logic::SortedVar> ctx;
  while (body->kind == logic::Kind::kForall) {
    ctx.push_back({body->var, body->sort.empty() ? "Vh" : body->sort});
    body = body->sub[0];
  }
  logic::KripkeJoyal<FinSet> kj(env, ctx, max_context);
  Subset truth = kj.eval(body);
  std::size_t bad = npos;
  for (std::size_t i = 0; i < truth.size() && bad == npos; ++i)
    if (!truth[i]) bad = i;
  if (bad == npos) return out;
  out.outcome = SetAxiomOutcome::kFails;
  // decode the left-nested tuple (...((0 * n1 + x1) * n2 + x2) ...)
  std::vector<std::size_t> vals(ctx.size());
  std::size_t rest = bad;
  for (std::size_t k = ctx.size(); k-- > 0;) {
    std::size_t n = env.sort_object(ctx[k].sort);
    vals[k] = rest % n;
    rest /= n;
  }
  for (std::size_t k = 0; k < ctx.size(); ++k) out.witness.emplace_back(ctx[k].name, v.show(vals[k]));
  return out;
}

}  // namespace aset::wzf

#endif  // ASET_WZF_SET_AXIOMS_HPP_
