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

#ifndef ASET_SMALLMAPS_VERDICT_HPP_
#define ASET_SMALLMAPS_VERDICT_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aset/core/errors.hpp"

namespace aset {

enum class AxiomId {
  kA1, kA2, kA3, kA4, kA5, kA6, kC, kR, kRStrong, kPiE, kWE, kHB, kUS, kBE,
  kNE, kNS, kPE, kPS, kM, kF, kPiS,
};

inline constexpr std::array<std::pair<AxiomId, std::string_view>, 21> kAxiomNames{{
    {AxiomId::kA1, "A1"},   {AxiomId::kA2, "A2"},   {AxiomId::kA3, "A3"},
    {AxiomId::kA4, "A4"},   {AxiomId::kA5, "A5"},   {AxiomId::kA6, "A6"},
    {AxiomId::kC, "C"},     {AxiomId::kR, "R"},     {AxiomId::kRStrong, "R-strong"},
    {AxiomId::kPiE, "PiE"}, {AxiomId::kWE, "WE"},   {AxiomId::kHB, "HB"},
    {AxiomId::kUS, "US"},   {AxiomId::kBE, "BE"},   {AxiomId::kNE, "NE"},
    {AxiomId::kNS, "NS"},   {AxiomId::kPE, "PE"},   {AxiomId::kPS, "PS"},
    {AxiomId::kM, "M"},     {AxiomId::kF, "F"},     {AxiomId::kPiS, "PiS"},
}};

inline std::string to_string(AxiomId a) {
  for (const auto& [id, name] : kAxiomNames)
    if (id == a) return std::string(name);
  return "?";
}

/// Accepts the ASCII names above, plus the Greek spellings of the Pi axioms.
inline AxiomId parse_axiom(const std::string& s) {
  if (s == "ΠE") return AxiomId::kPiE;
  if (s == "ΠS") return AxiomId::kPiS;
  for (const auto& [id, name] : kAxiomNames)
    if (name == s) return id;
  throw PreconditionError("unknown axiom id: " + s);
}

enum class Outcome { kWitnessed, kPassedSampled, kRefuted, kInconclusive };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kWitnessed: return "WITNESSED";
    case Outcome::kPassedSampled: return "PASSED-SAMPLED";
    case Outcome::kRefuted: return "REFUTED";
    case Outcome::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

inline Outcome parse_outcome(const std::string& s) {
  for (Outcome o : {Outcome::kWitnessed, Outcome::kPassedSampled, Outcome::kRefuted, Outcome::kInconclusive})
    if (to_string(o) == s) return o;
  throw PreconditionError("unknown outcome: " + s);
}

inline bool is_pass(Outcome o) { return o == Outcome::kWitnessed || o == Outcome::kPassedSampled; }

/// Search limits for the axiom checks.
struct Budget {
  std::size_t size_bound = 4;           // catalog objects
  std::size_t witness_bound = 6;        // (R) candidates, (C) witnesses
  std::size_t test_bound = 1;           // test objects for universal properties
  std::size_t ceiling = std::size_t{1} << 26;  // instances before giving up
  bool strong = false;                  // (R) with a pullback on the left

  void validate() const {
    if (size_bound == 0 || ceiling == 0) throw PreconditionError("budget must be positive");
  }
};

template <class C>
struct AxiomVerdict {
  AxiomId axiom = AxiomId::kA1;
  Outcome outcome = Outcome::kInconclusive;
  std::string class_label;
  std::string summary;
  // named arrows of the counterexample or witness diagram
  std::vector<std::pair<std::string, typename C::Arrow>> diagram;
  // further evidence as printable key/value pairs
  std::vector<std::pair<std::string, std::string>> facts;
  std::size_t instances = 0;
  Budget budget;

  const typename C::Arrow& arrow(const std::string& role) const {
    for (const auto& [r, a] : diagram)
      if (r == role) return a;
    throw PreconditionError("verdict has no arrow named " + role);
  }

  std::optional<std::string> fact(const std::string& key) const {
    for (const auto& [k, v] : facts)
      if (k == key) return v;
    return std::nullopt;
  }
};

}  // namespace aset

#endif  // ASET_SMALLMAPS_VERDICT_HPP_
