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

#ifndef ASET_CLI_COMMANDS_HPP_
#define ASET_CLI_COMMANDS_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aset/cli/formats.hpp"
#include "aset/cli/report.hpp"
#include "aset/excomp/ex_complete.hpp"
#include "aset/fincat/presheaf.hpp"
#include "aset/logic/eval.hpp"
#include "aset/logic/schemas.hpp"
#include "aset/sheaves/sheaf_category.hpp"
#include "aset/sheaves/sheafify.hpp"
#include "aset/smallmaps/axioms.hpp"
#include "aset/wzf/set_axioms.hpp"
#include "aset/wzf/zf_algebra.hpp"

// The pipelines behind each subcommand. Each returns a Report; the caller
// applies expectations and prints.

namespace aset::cli {

struct Options {
  std::optional<std::size_t> budget;  // overrides the size bound
  std::optional<std::string> class_name;
  std::size_t rank = 4;
  std::size_t headroom = 1;
  std::string axiom = "all";
  std::optional<std::string> phi;
  bool show = false;
};

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Status status_of(Outcome o) {
  switch (o) {
    case Outcome::kWitnessed:
    case Outcome::kPassedSampled: return Status::kPass;
    case Outcome::kRefuted: return Status::kRefuted;
    case Outcome::kInconclusive: return Status::kInconclusive;
  }
  return Status::kInfo;
}

inline Json budget_json(const Budget& b) {
  return Json{{"size_bound", b.size_bound}, {"witness_bound", b.witness_bound}, {"test_bound", b.test_bound},
              {"ceiling", b.ceiling}, {"strong", b.strong}};
}

template <class C>
Record axiom_record(const C& c, const AxiomVerdict<C>& v, double ms) {
  Record r{to_string(v.axiom), to_string(v.outcome), status_of(v.outcome)};
  r.evidence["summary"] = v.summary;
  r.evidence["class"] = v.class_label;
  r.evidence["instances"] = v.instances;
  Json diagram = Json::object();
  for (const auto& [role, a] : v.diagram) diagram[role] = c.describe(a);
  r.evidence["diagram"] = diagram;
  Json facts = Json::object();
  for (const auto& [k, val] : v.facts) facts[k] = val;
  r.evidence["facts"] = facts;
  r.evidence["budget"] = budget_json(v.budget);
  r.wall_ms = ms;
  return r;
}

template <Heyting C>
void run_axioms(Report& rep, const C& c, const MapClass<C>& cls, const std::vector<AxiomId>& ids, const Budget& b) {
  for (AxiomId id : ids) {
    Stopwatch sw;
    AxiomVerdict<C> v;
    try {
      v = check_axiom(c, cls, id, b);
    } catch (const ResourceBound& e) {
      v.axiom = id;
      v.outcome = Outcome::kInconclusive;
      v.class_label = cls.label;
      v.summary = std::string("resource bound: ") + e.what();
      v.budget = b;
    } catch (const UnsupportedStructure& e) {
      v.axiom = id;
      v.outcome = Outcome::kInconclusive;
      v.class_label = cls.label;
      v.summary = std::string("unsupported: ") + e.what();
      v.budget = b;
    }
    rep.records.push_back(axiom_record(c, v, sw.ms()));
  }
}

/// A map of presheaves is in the class when every component is.
inline MapClass<PresheafCategory> pointwise(const MapClass<FinSet>& base) {
  return {"pointwise " + base.label, [base](const PresheafCategory&, const PshMap& f) {
            const FinSet sets;
            for (std::size_t c = 0; c < f.components.size(); ++c)
              if (!base.contains(sets, PresheafCategory::component(f, c))) return false;
            return true;
          }};
}

inline MapClass<FinSet> choose_class(const Document& doc, const Options& opt) {
  if (opt.class_name) return class_by_name<FinSet>(*opt.class_name);
  if (doc.cls) return *doc.cls;
  return all_maps<FinSet>();
}

inline Budget choose_budget(const Document& doc, const Options& opt, Budget fallback = {}) {
  Budget b = doc.suite.budget.value_or(fallback);
  if (opt.budget) b.size_bound = *opt.budget;
  b.validate();
  return b;
}

inline std::vector<AxiomId> default_axioms() {
  std::vector<AxiomId> ids;
  for (const auto& [id, name] : kAxiomNames) ids.push_back(id);
  return ids;
}

}  // namespace detail

// -- check-axioms ------------------------------------------------------------------

inline Report check_axioms(const Document& doc, const Options& opt) {
  Report rep;
  rep.command = "check-axioms";
  const MapClass<FinSet> base = detail::choose_class(doc, opt);
  const Budget b = detail::choose_budget(doc, opt);
  const auto ids = doc.suite.axioms.empty() ? detail::default_axioms() : doc.suite.axioms;
  rep.config = {{"input", doc.path}, {"ambient", doc.suite.ambient}, {"class", base.label},
                {"budget", detail::budget_json(b)}};
  const std::string& amb = doc.suite.ambient;
  if (amb == "finset") {
    detail::run_axioms(rep, FinSet(), base, ids, b);
  } else if (amb == "presheaves") {
    if (!doc.category) throw Error(doc.path + ": ambient presheaves needs a category");
    detail::run_axioms(rep, PresheafCategory(*doc.category), detail::pointwise(base), ids, b);
  } else if (amb == "sheaves") {
    if (!doc.site) throw Error(doc.path + ": ambient sheaves needs a site");
    auto model = sheaves::sheaf_category(*doc.site, base, b);
    detail::run_axioms(rep, model.category, model.small, ids, b);
  } else {
    auto ex = excomp::ex_complete(base, doc.suite.slack);
    detail::run_axioms(rep, ex.category, ex.small, ids, b);
  }
  return rep;
}

// -- eval ---------------------------------------------------------------------------

inline Report eval(const FormulaFile& ff, const Options& opt, const std::string& path = "<input>") {
  Report rep;
  rep.command = "eval";
  FinSet sets;
  std::optional<wzf::VApprox> v;
  std::optional<logic::Structure<FinSet>> env;
  if (ff.v_env || ff.sorts.empty()) {
    auto [rank, h] = ff.v_env.value_or(std::pair{opt.rank, opt.headroom});
    v = wzf::build_V(rank);
    env = wzf::v_structure(sets, *v, h);
    rep.config = {{"input", path}, {"environment", "V"}, {"rank", rank}, {"headroom", h}};
  } else {
    env = build_structure(sets, ff);
    rep.config = {{"input", path}, {"environment", "file"}};
  }
  const auto& sig = env->signature();
  auto show = [&](const std::string& sort, std::size_t i) -> Json {
    if (v && (sort == "V" || sort == "Vh")) return v->show(i);
    return i;
  };
  for (const auto& [phi, line] : ff.formulas) {
    detail::Stopwatch sw;
    // free variables not in the context get the default sort
    std::vector<logic::SortedVar> ctx = ff.context;
    for (const auto& x : logic::free_vars(*phi)) {
      bool known = false;
      for (const auto& c : ctx) known = known || c.name == x;
      if (!known) ctx.push_back({x, sig.default_sort});
    }
    logic::check_sorts(*phi, sig, ctx);
    Subset truth = logic::kripke_joyal_eval(phi, *env, ctx);
    Record r{"formula@" + std::to_string(line), "", Status::kInfo};
    r.evidence["formula"] = logic::to_string(*phi);
    Json jctx = Json::array();
    for (const auto& c : ctx) jctx.push_back(c.name + ":" + c.sort);
    r.evidence["context"] = jctx;
    if (ctx.empty()) {
      r.outcome = truth.at(0) ? "VALID" : "NOT-VALID";
    } else {
      std::vector<std::size_t> sizes;
      for (const auto& c : ctx) sizes.push_back(env->sort_object(c.sort));
      Json tuples = Json::array();
      for (std::size_t idx = 0; idx < truth.size(); ++idx) {
        if (!truth[idx]) continue;
        Json t = Json::array();
        std::size_t rest = idx;
        std::vector<Json> parts(sizes.size());
        for (std::size_t j = sizes.size(); j-- > 0;) {
          parts[j] = show(ctx[j].sort, rest % sizes[j]);
          rest /= sizes[j];
        }
        for (auto& p : parts) t.push_back(std::move(p));
        tuples.push_back(std::move(t));
      }
      r.outcome = "SATISFIED-BY-" + std::to_string(count(truth)) + "/" + std::to_string(truth.size());
      r.evidence["truth"] = tuples;
    }
    r.evidence["summary"] = logic::to_string(*phi);
    r.wall_ms = sw.ms();
    rep.records.push_back(std::move(r));
  }
  return rep;
}

// -- build-v -----------------------------------------------------------------------

inline Report build_v(const Options& opt) {
  Report rep;
  rep.command = "build-v";
  rep.config = {{"rank", opt.rank}};
  detail::Stopwatch sw;
  wzf::VApprox v = wzf::build_V(opt.rank);
  for (std::size_t k = 0; k <= opt.rank; ++k) {
    Record r{"V_" + std::to_string(k), std::to_string(v.stage_size(k)), Status::kInfo};
    r.evidence["size"] = v.stage_size(k);
    r.evidence["summary"] = std::to_string(v.stage_size(k)) + " elements";
    if (opt.show && v.stage_size(k) <= 64) {
      Json els = Json::array();
      for (std::size_t i = 0; i < v.stage_size(k); ++i) els.push_back(v.show(i));
      r.evidence["elements"] = els;
    }
    rep.records.push_back(std::move(r));
  }
  if (!rep.records.empty()) rep.records.back().wall_ms = sw.ms();
  return rep;
}

// -- check-set-axiom ---------------------------------------------------------------

inline Report check_set_axioms(const Options& opt) {
  Report rep;
  rep.command = "check-set-axiom";
  rep.config = {{"axiom", opt.axiom}, {"rank", opt.rank}, {"headroom", opt.headroom}};
  if (opt.phi) rep.config["phi"] = *opt.phi;
  std::vector<logic::SchemaId> ids;
  if (opt.axiom == "all") {
    for (std::size_t i = 0; i < logic::kSchemaNames.size(); ++i) ids.push_back(static_cast<logic::SchemaId>(i));
  } else {
    ids.push_back(logic::parse_schema(opt.axiom));
  }
  wzf::VApprox v = wzf::build_V(opt.rank);
  for (auto id : ids) {
    std::vector<logic::FormulaPtr> params;
    if (opt.phi) {
      params.push_back(logic::parse(*opt.phi));
    } else {
      params = wzf::sample_parameters(id);
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
      detail::Stopwatch sw;
      std::string rid = logic::to_string(id);
      if (params.size() > 1) rid += "#" + std::to_string(i + 1);
      Record r{rid, "", Status::kInfo};
      try {
        auto verdict = wzf::check_set_axiom(id, v, opt.headroom, params[i]);
        switch (verdict.outcome) {
          case wzf::SetAxiomOutcome::kHolds: r.outcome = "HOLDS"; r.status = Status::kPass; break;
          case wzf::SetAxiomOutcome::kFails: r.outcome = "FAILS"; r.status = Status::kRefuted; break;
          case wzf::SetAxiomOutcome::kOutOfHeadroom: r.outcome = "OUT-OF-HEADROOM"; r.status = Status::kInconclusive; break;
        }
        r.evidence["formula"] = verdict.formula ? logic::to_string(*verdict.formula) : "";
        if (params[i]) r.evidence["parameter"] = logic::to_string(*params[i]);
        r.evidence["required_headroom"] = verdict.required_headroom;
        Json w = Json::object();
        for (const auto& [x, val] : verdict.witness) w[x] = val;
        r.evidence["witness"] = w;
        r.evidence["summary"] = params[i] ? "with " + logic::to_string(*params[i]) : std::string("");
      } catch (const ResourceBound& e) {
        r.outcome = "INCONCLUSIVE";
        r.status = Status::kInconclusive;
        r.evidence["summary"] = std::string("resource bound: ") + e.what();
      }
      r.wall_ms = sw.ms();
      rep.records.push_back(std::move(r));
    }
  }
  return rep;
}

// -- sites and sheaves ----------------------------------------------------------------

inline Report validate_site(const Document& doc) {
  Report rep;
  rep.command = "validate-site";
  if (!doc.site) throw Error(doc.path + ": no site given");
  rep.config = {{"input", doc.path}, {"site", doc.site->name}};
  for (const auto& k : sheaves::validate_site(*doc.site)) {
    Record r{k.axiom, k.holds ? "HOLDS" : "REFUTED", k.holds ? Status::kPass : Status::kRefuted};
    if (!k.holds) r.evidence["summary"] = k.witness;
    rep.records.push_back(std::move(r));
  }
  if (doc.site->basis) {
    auto b = sheaves::bounded_cov_check(*doc.site);
    Record r{"basis", b.holds ? "HOLDS" : "REFUTED", b.holds ? Status::kPass : Status::kRefuted};
    if (!b.holds) r.evidence["summary"] = b.witness;
    rep.records.push_back(std::move(r));
  }
  return rep;
}

inline Report sheafify(const Document& doc) {
  Report rep;
  rep.command = "sheafify";
  if (!doc.site) throw Error(doc.path + ": no site given");
  if (!sheaves::site_is_valid(*doc.site)) throw PreconditionError(doc.path + ": the coverage is not a Grothendieck topology");
  rep.config = {{"input", doc.path}, {"site", doc.site->name}, {"presheaves", doc.presheaves.size()}};
  PresheafCategory psh(doc.site->category);
  auto pass = [](bool b) { return b ? Status::kPass : Status::kRefuted; };
  for (const auto& [name, x, line] : doc.presheaves) {
    detail::Stopwatch sw;
    const bool input_is_sheaf = sheaves::is_sheaf(*doc.site, x);
    auto a = sheaves::sheafify(*doc.site, x);
    auto check = sheaves::sheaf_condition(*doc.site, a.sheaf);
    auto aa = sheaves::sheafify(*doc.site, a.sheaf);
    const bool unit_iso = sheaves::is_componentwise_bijective(a.unit);
    const bool idempotent = sheaves::is_componentwise_bijective(aa.unit);
    Record info{name + "/input", input_is_sheaf ? "SHEAF" : "NOT-SHEAF", Status::kInfo};
    info.evidence["summary"] = psh.describe_object(x) + " -> " + psh.describe_object(a.sheaf);
    info.evidence["sheafified"] = psh.describe_object(a.sheaf);
    rep.records.push_back(std::move(info));
    Record amalg{name + "/amalgamation", check.holds ? "HOLDS" : "REFUTED", pass(check.holds)};
    if (!check.holds) amalg.evidence["summary"] = check.witness;
    rep.records.push_back(std::move(amalg));
    rep.records.push_back({name + "/idempotent", idempotent ? "HOLDS" : "REFUTED", pass(idempotent)});
    const bool unit_ok = unit_iso == input_is_sheaf;
    Record unit{name + "/unit", unit_ok ? "HOLDS" : "REFUTED", pass(unit_ok)};
    unit.evidence["summary"] = unit_iso ? "unit is an iso" : "unit is not an iso";
    unit.wall_ms = sw.ms();
    rep.records.push_back(std::move(unit));
  }
  return rep;
}

inline Report sheaf_suite(const Document& doc, const Options& opt) {
  Report rep;
  rep.command = "sheaf-suite";
  if (!doc.site) throw Error(doc.path + ": no site given");
  const MapClass<FinSet> base = detail::choose_class(doc, opt);
  Budget fallback;
  fallback.size_bound = 2;
  const Budget b = detail::choose_budget(doc, opt, fallback);
  const std::vector<AxiomId> ids = doc.suite.axioms.empty()
                                       ? std::vector<AxiomId>{AxiomId::kA1, AxiomId::kA2, AxiomId::kA3, AxiomId::kA4,
                                                              AxiomId::kA5, AxiomId::kA6, AxiomId::kC, AxiomId::kHB,
                                                              AxiomId::kUS, AxiomId::kBE}
                                       : doc.suite.axioms;
  rep.config = {{"input", doc.path}, {"site", doc.site->name}, {"class", base.label},
                {"budget", detail::budget_json(b)}};
  auto model = sheaves::sheaf_category(*doc.site, base, b);
  Record pis = detail::axiom_record(FinSet(), model.base_pi_small, 0);
  pis.id = "base:" + pis.id;
  rep.records.push_back(std::move(pis));
  detail::run_axioms(rep, model.category, model.small, ids, b);
  return rep;
}

// -- ex-complete ---------------------------------------------------------------------

inline Report ex_complete(const Document& doc, const Options& opt) {
  Report rep;
  rep.command = "ex-complete";
  const MapClass<FinSet> base = detail::choose_class(doc, opt);
  const std::size_t bound = opt.budget.value_or(doc.base_bound);
  rep.config = {{"input", doc.path}, {"base", doc.base}, {"class", base.label}, {"bound", bound},
                {"slack", doc.suite.slack}};
  auto ex = excomp::ex_complete(base, doc.suite.slack);
  const auto& e = ex.category;

  // census
  for (std::size_t k = 0; k <= bound; ++k) {
    detail::Stopwatch sw;
    auto objs = e.objects(k);
    std::size_t arrows = 0;
    if (k <= 3)
      for (const auto& x : objs)
        for (const auto& y : objs) arrows += e.hom(x, y).size();
    Record r{"census-" + std::to_string(k), std::to_string(objs.size()), Status::kInfo};
    r.evidence["objects"] = objs.size();
    if (k <= 3) r.evidence["morphisms"] = arrows;
    r.evidence["summary"] = std::to_string(objs.size()) + " objects" +
                            (k <= 3 ? ", " + std::to_string(arrows) + " morphisms" : std::string(""));
    r.wall_ms = sw.ms();
    rep.records.push_back(std::move(r));
  }

  {
    detail::Stopwatch sw;
    auto report = excomp::verify_embedding(ex, bound, std::min<std::size_t>(bound, 3), doc.suite.slack);
    for (const auto& c : report.checks) {
      Record r{c.property, c.holds ? "HOLDS" : "REFUTED", c.holds ? Status::kPass : Status::kRefuted};
      r.evidence["instances"] = c.instances;
      r.evidence["summary"] = c.holds ? std::to_string(c.instances) + " instances" : c.detail;
      rep.records.push_back(std::move(r));
    }
    rep.records.back().wall_ms = sw.ms();
  }

  {
    detail::Stopwatch sw;
    std::size_t checked = 0, unbounded = 0;
    std::string failure;
    for (std::size_t k = 0; k <= std::min<std::size_t>(bound, 4); ++k) {
      auto yk = e.embed(k);
      Cone<excomp::ExCompletion> kk = e.product(yk, yk);
      FinMap c1 = e.class_map(kk.first), c2 = e.class_map(kk.second);
      for (const auto& rel : excomp::all_objects(k)) {
        Subset s(e.cardinality(kk.apex));
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = rel.rel[c1.table[i] * k + c2.table[i]];
        try {
          auto q = excomp::quotient_in_completion(ex, yk, s);
          ++checked;
          if ((!q.exact || !q.stable) && failure.empty())
            failure = e.describe_object(rel) + ": " + (q.exact ? q.detail : "not exact");
        } catch (const PreconditionError&) {
          ++unbounded;
        }
      }
    }
    Record r{"stable-quotients", failure.empty() ? "HOLDS" : "REFUTED",
             failure.empty() ? Status::kPass : Status::kRefuted};
    r.evidence["checked"] = checked;
    r.evidence["unbounded"] = unbounded;
    r.evidence["summary"] = failure.empty() ? std::to_string(checked) + " bounded relations" : failure;
    r.wall_ms = sw.ms();
    rep.records.push_back(std::move(r));
  }

  Budget b;
  b.size_bound = 2;
  if (doc.suite.budget) b = *doc.suite.budget;
  const auto ids = doc.suite.axioms.empty() ? std::vector<AxiomId>{AxiomId::kBE} : doc.suite.axioms;
  detail::run_axioms(rep, e, ex.small, ids, b);
  return rep;
}

}  // namespace aset::cli

#endif  // ASET_CLI_COMMANDS_HPP_
