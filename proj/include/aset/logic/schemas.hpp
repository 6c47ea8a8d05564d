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

#ifndef ASET_LOGIC_SCHEMAS_HPP_
#define ASET_LOGIC_SCHEMAS_HPP_

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "aset/core/errors.hpp"
#include "aset/logic/formula.hpp"

// The set-theoretic axioms, as closed formulas over the single binary
// relation `in`. Schemas take a parameter formula whose distinguished free
// variables have fixed names (listed per schema below); any other free
// variable is a parameter and gets universally closed.

namespace aset::logic {

enum class SchemaId {
  kExtensionality,
  kEmptySet,
  kPairing,
  kUnion,
  kEpsilonInduction,   // phi(x)
  kBoundedSeparation,  // phi(y), bounded
  kStrongCollection,   // phi(x, y)
  kInfinity,
  kFullSeparation,     // phi(y)
  kPowerSet,
  kSubsetCollection,   // phi(x, y, z)
  kFullness,
};

inline constexpr std::array<std::string_view, 12> kSchemaNames = {
    "extensionality", "empty-set", "pairing", "union", "epsilon-induction", "bounded-separation",
    "strong-collection", "infinity", "full-separation", "power-set", "subset-collection", "fullness"};

inline std::string to_string(SchemaId id) { return std::string(kSchemaNames[static_cast<std::size_t>(id)]); }

inline SchemaId parse_schema(std::string_view s) {
  for (std::size_t i = 0; i < kSchemaNames.size(); ++i)
    if (kSchemaNames[i] == s) return static_cast<SchemaId>(i);
  throw PreconditionError("unknown axiom schema: " + std::string(s));
}

/// Distinguished variables of a schema's parameter, empty if it has none.
inline std::vector<std::string> schema_parameter_vars(SchemaId id) {
  switch (id) {
    case SchemaId::kEpsilonInduction: return {"x"};
    case SchemaId::kBoundedSeparation:
    case SchemaId::kFullSeparation: return {"y"};
    case SchemaId::kStrongCollection: return {"x", "y"};
    case SchemaId::kSubsetCollection: return {"x", "y", "z"};
    default: return {};
  }
}

/// Sort annotations to put on unbounded quantifiers. `witness` goes on the
/// existential that asserts the set being constructed, `other` on the
/// remaining ones; empty strings leave quantifiers unannotated.
struct SchemaSorts {
  std::string witness;
  std::string other;
};

namespace detail {

class SchemaBuilder {
 public:
  explicit SchemaBuilder(SchemaSorts s) : s_(std::move(s)) {}

  FormulaPtr all(const std::string& x, FormulaPtr b) const { return forall(x, std::move(b), s_.other); }
  FormulaPtr some(const std::string& x, FormulaPtr b) const { return exists(x, std::move(b), s_.other); }
  FormulaPtr witness(const std::string& x, FormulaPtr b) const { return exists(x, std::move(b), s_.witness); }

  FormulaPtr close(FormulaPtr f, const std::vector<std::string>& outer) const {
    std::vector<std::string> fv = free_vars(*f);
    // close over named variables in the given order, then leftovers
    std::vector<std::string> order = outer;
    for (const auto& v : fv)
      if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (std::find(fv.begin(), fv.end(), *it) != fv.end()) f = all(*it, f);
    return f;
  }

 private:
  SchemaSorts s_;
};

// y <= a, i.e. forall z in y. z in a
inline FormulaPtr subset_of(const std::string& y, const std::string& a, const std::string& z) {
  return bforall(z, y, mem(z, a));
}

// z = {{x}, {x, y}}
inline FormulaPtr is_pair(const std::string& z, const std::string& x, const std::string& y) {
  auto singleton = [&](const std::string& w) {  // w = {x}
    return conj(bforall("t", w, eq("t", x)), mem(x, w));
  };
  auto doubleton = [&](const std::string& w) {  // w = {x, y}
    return conj(bforall("t", w, disj(eq("t", x), eq("t", y))), conj(mem(x, w), mem(y, w)));
  };
  return conj(bforall("w", z, disj(singleton("w"), doubleton("w"))),
              conj(bexists("w", z, singleton("w")), bexists("w", z, doubleton("w"))));
}

// r in mv(a, b): r is a total relation from a to b
inline FormulaPtr is_mv(const std::string& r, const std::string& a, const std::string& b) {
  auto within = bforall("p", r, bexists("x", a, bexists("y", b, is_pair("p", "x", "y"))));
  auto total = bforall("x", a, bexists("y", b, bexists("p", r, is_pair("p", "x", "y"))));
  return conj(within, total);
}

inline void require_parameter(SchemaId id, const FormulaPtr& phi) {
  if (!phi) throw PreconditionError(to_string(id) + " needs a parameter formula");
}

}  // namespace detail

/// Membership in the class of total relations from a to b, spelled out with
/// Kuratowski pairs.
inline FormulaPtr mv_formula(const std::string& r, const std::string& a, const std::string& b) {
  return detail::is_mv(r, a, b);
}

/// Closed formula for the axiom or schema instance. `phi` is required for
/// the schemas and ignored otherwise.
inline FormulaPtr instantiate_schema(SchemaId id, const FormulaPtr& phi = nullptr, const SchemaSorts& sorts = {}) {
  detail::SchemaBuilder b(sorts);
  using detail::subset_of;
  switch (id) {
    case SchemaId::kExtensionality:
      return b.all("a", b.all("b", implies(b.all("x", iff(mem("x", "a"), mem("x", "b"))), eq("a", "b"))));
    case SchemaId::kEmptySet:
      return b.witness("x", b.all("y", neg(mem("y", "x"))));
    case SchemaId::kPairing:
      return b.all("a", b.all("b", b.witness("x", b.all("y", iff(mem("y", "x"), disj(eq("y", "a"), eq("y", "b")))))));
    case SchemaId::kUnion:
      return b.all("a", b.witness("x", b.all("y", iff(mem("y", "x"), bexists("z", "a", mem("y", "z"))))));
    case SchemaId::kEpsilonInduction: {
      detail::require_parameter(id, phi);
      auto at = [&](const std::string& v) { return substitute(phi, "x", v); };
      auto step = b.all("x", implies(bforall("y", "x", at("y")), phi));
      return b.close(implies(step, b.all("x", phi)), {});
    }
    case SchemaId::kBoundedSeparation:
    case SchemaId::kFullSeparation: {
      detail::require_parameter(id, phi);
      if (id == SchemaId::kBoundedSeparation && !is_bounded(*phi))
        throw PreconditionError("bounded separation needs a bounded formula");
      auto fv = free_vars(*phi);
      if (std::find(fv.begin(), fv.end(), "a") != fv.end() || std::find(fv.begin(), fv.end(), "x") != fv.end())
        throw PreconditionError("separation parameter may not mention a or x");
      auto body = b.all("a", b.witness("x", b.all("y", iff(mem("y", "x"), conj(mem("y", "a"), phi)))));
      return b.close(body, {});
    }
    case SchemaId::kStrongCollection: {
      detail::require_parameter(id, phi);
      auto fv = free_vars(*phi);
      if (std::find(fv.begin(), fv.end(), "a") != fv.end() || std::find(fv.begin(), fv.end(), "b") != fv.end())
        throw PreconditionError("collection parameter may not mention a or b");
      auto body = b.all("a", implies(bforall("x", "a", b.some("y", phi)),
                                     b.witness("b", biquant("x", "a", "y", "b", phi))));
      return b.close(body, {});
    }
    case SchemaId::kInfinity:
      return b.witness("a", conj(b.some("x", mem("x", "a")), bforall("x", "a", bexists("y", "a", mem("x", "y")))));
    case SchemaId::kPowerSet:
      return b.all("a", b.witness("x", b.all("y", iff(mem("y", "x"), subset_of("y", "a", "z")))));
    case SchemaId::kSubsetCollection: {
      detail::require_parameter(id, phi);
      auto fv = free_vars(*phi);
      for (const char* v : {"a", "b", "c", "d"})
        if (std::find(fv.begin(), fv.end(), v) != fv.end())
          throw PreconditionError(std::string("subset collection parameter may not mention ") + v);
      auto inner = b.all("z", implies(bforall("x", "a", bexists("y", "b", phi)),
                                      bexists("d", "c", biquant("x", "a", "y", "d", phi))));
      return b.close(b.all("a", b.all("b", b.witness("c", inner))), {});
    }
    case SchemaId::kFullness: {
      // exists u. u <= mv(a,b) /\ forall v. v in mv(a,b) -> exists w in u. w <= v
      auto u_in_mv = bforall("r", "u", detail::is_mv("r", "a", "b"));
      auto refines = b.all("v", implies(detail::is_mv("v", "a", "b"), bexists("w", "u", subset_of("w", "v", "q"))));
      return b.all("a", b.all("b", b.witness("u", conj(u_in_mv, refines))));
    }
  }
  throw PreconditionError("unknown schema");
}

}  // namespace aset::logic

#endif  // ASET_LOGIC_SCHEMAS_HPP_
