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

// aset: batch front end for the checkers. See docs/cli.md.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aset/cli/commands.hpp"
#include "aset/cli/formats.hpp"
#include "aset/cli/report.hpp"

namespace fs = std::filesystem;
using namespace aset;
using namespace aset::cli;

namespace {

struct Common {
  std::vector<std::string> inputs;
  std::optional<std::string> fixtures;
  std::optional<std::string> expect;
  bool json = false;
  bool no_timing = false;
};

std::map<std::string, std::string> expectations_for(const std::string& input, const Common& common) {
  if (common.expect) return parse_expectations(read_file(*common.expect));
  if (input.empty()) return {};
  fs::path p(input);
  p.replace_extension(".expected");
  if (fs::exists(p)) return parse_expectations(read_file(p.string()));
  return {};
}

/// Inputs given on the command line, resolved against --fixtures; with
/// none, every file in the fixtures directory with the given extension.
std::vector<std::string> resolve_inputs(const Common& common, const std::string& ext) {
  std::vector<std::string> out;
  for (const auto& in : common.inputs) {
    fs::path p(in);
    if (common.fixtures && p.is_relative() && !fs::exists(p)) p = fs::path(*common.fixtures) / p;
    out.push_back(p.string());
  }
  if (out.empty() && common.fixtures) {
    if (!fs::is_directory(*common.fixtures)) throw Error("not a directory: " + *common.fixtures);
    for (const auto& entry : fs::directory_iterator(*common.fixtures))
      if (entry.is_regular_file() && entry.path().extension() == ext) out.push_back(entry.path().string());
    std::sort(out.begin(), out.end());
    if (out.empty()) throw Error("no *" + ext + " files in " + *common.fixtures);
  }
  if (out.empty()) throw Error("no input given (pass a file or --fixtures DIR)");
  for (const auto& p : out)
    if (!fs::exists(p)) throw Error("cannot read " + p);
  return out;
}

/// Runs one report per input, applies expectations, and merges.
template <class F>
Report run_each(const std::string& command, const std::vector<std::string>& inputs, const Common& common, F run) {
  if (inputs.size() == 1) {
    Report r = run(inputs[0]);
    r.apply_expectations(expectations_for(inputs[0], common));
    return r;
  }
  Report merged;
  merged.command = command;
  merged.config = {{"inputs", inputs}};
  for (const auto& in : inputs) {
    Report r = run(in);
    r.apply_expectations(expectations_for(in, common));
    const std::string stem = fs::path(in).stem().string();
    for (auto& rec : r.records) {
      rec.id = stem + ":" + rec.id;
      merged.records.push_back(std::move(rec));
    }
    for (auto& n : r.notes) merged.notes.push_back(stem + ": " + n);
  }
  return merged;
}

int emit(Report rep, const Common& common) {
  rep.timing = !common.no_timing;
  if (common.json)
    std::cout << to_json(rep).dump(2) << "\n";
  else
    std::cout << render_text(rep);
  return rep.exit_code();
}

void add_common(CLI::App* app, Common& common, bool takes_inputs) {
  if (takes_inputs) app->add_option("inputs", common.inputs, "Input files");
  app->add_option("--fixtures", common.fixtures, "Fixture directory: inputs are resolved against it, and with no inputs every matching file in it is run");
  app->add_option("--expect", common.expect, "Expected outcomes (ID OUTCOME per line); default: INPUT.expected when present");
  app->add_flag("--json", common.json, "Print the report as JSON");
  app->add_flag("--no-timing", common.no_timing, "Leave wall times out of the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aset: finite checks for categories with small maps"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Common common;
  Options opt;
  std::size_t budget = 0;
  std::string class_name;
  std::string base_file;
  std::optional<std::string> phi;

  auto* axioms = app.add_subcommand("check-axioms", "Check the small-map axioms on a suite file (*.suite)");
  add_common(axioms, common, true);
  axioms->add_option("--budget", budget, "Size bound for the object catalog")->check(CLI::PositiveNumber);
  axioms->add_option("--class", class_name, "Class of maps: all, mono, even-domain, fibre<k");

  auto* ev = app.add_subcommand("eval", "Evaluate formulas in a finite structure (*.fml)");
  add_common(ev, common, true);
  ev->add_option("--rank", opt.rank, "Rank of V_n when the file declares no sorts");
  ev->add_option("--headroom", opt.headroom, "Headroom for V_n");

  auto* bv = app.add_subcommand("build-v", "Build the hierarchy V_0 .. V_n");
  add_common(bv, common, false);
  bv->add_option("--rank", opt.rank, "n")->required();
  bv->add_flag("--show", opt.show, "List elements in brace notation (stages of at most 64 elements)");

  auto* sa = app.add_subcommand("check-set-axiom", "Evaluate set-theory axioms in V_n");
  add_common(sa, common, false);
  sa->add_option("--axiom", opt.axiom, "Axiom name or 'all'");
  sa->add_option("--rank", opt.rank, "n");
  sa->add_option("--headroom", opt.headroom, "h");
  sa->add_option("--phi", phi, "Parameter formula for schemas");

  auto* vs = app.add_subcommand("validate-site", "Check a coverage for (M), (L), (T) (*.site)");
  add_common(vs, common, true);

  auto* sh = app.add_subcommand("sheafify", "Sheafify presheaves over a site (*.psh)");
  add_common(sh, common, true);

  auto* ss = app.add_subcommand("sheaf-suite", "Axiom suite for pointwise-small maps of sheaves (*.shs)");
  add_common(ss, common, true);
  ss->add_option("--budget", budget, "Size bound")->check(CLI::PositiveNumber);
  ss->add_option("--class", class_name, "Base class of finite-set maps");

  auto* ex = app.add_subcommand("ex-complete", "Exact completion of finite sets with a class (*.base)");
  add_common(ex, common, true);
  ex->add_option("--base", base_file, "Base description file");
  ex->add_option("--budget", budget, "Size bound for the census and embedding checks")->check(CLI::PositiveNumber);
  ex->add_option("--class", class_name, "Class of maps: all, mono, even-domain, fibre<k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (budget) opt.budget = budget;
  if (!class_name.empty()) opt.class_name = class_name;
  opt.phi = phi;

  try {
    if (axioms->parsed()) {
      auto inputs = resolve_inputs(common, ".suite");
      return emit(run_each("check-axioms", inputs, common,
                           [&](const std::string& in) { return check_axioms(load_document(in), opt); }),
                  common);
    }
    if (ev->parsed()) {
      auto inputs = resolve_inputs(common, ".fml");
      return emit(run_each("eval", inputs, common,
                           [&](const std::string& in) { return eval(load_formula_file(in), opt, in); }),
                  common);
    }
    if (bv->parsed()) {
      Report r = build_v(opt);
      r.apply_expectations(expectations_for("", common));
      return emit(std::move(r), common);
    }
    if (sa->parsed()) {
      Report r = check_set_axioms(opt);
      r.apply_expectations(expectations_for("", common));
      return emit(std::move(r), common);
    }
    if (vs->parsed()) {
      auto inputs = resolve_inputs(common, ".site");
      return emit(run_each("validate-site", inputs, common,
                           [&](const std::string& in) { return validate_site(load_document(in)); }),
                  common);
    }
    if (sh->parsed()) {
      auto inputs = resolve_inputs(common, ".psh");
      return emit(run_each("sheafify", inputs, common, [&](const std::string& in) { return sheafify(load_document(in)); }),
                  common);
    }
    if (ss->parsed()) {
      auto inputs = resolve_inputs(common, ".shs");
      return emit(run_each("sheaf-suite", inputs, common,
                           [&](const std::string& in) { return sheaf_suite(load_document(in), opt); }),
                  common);
    }
    if (ex->parsed()) {
      if (!base_file.empty()) common.inputs.insert(common.inputs.begin(), base_file);
      std::vector<std::string> inputs;
      if (common.inputs.empty() && !common.fixtures) {
        inputs = {""};  // the default base: finite sets
      } else {
        inputs = resolve_inputs(common, ".base");
      }
      return emit(run_each("ex-complete", inputs, common,
                           [&](const std::string& in) {
                             return ex_complete(in.empty() ? parse_document("base finset", "<default>") : load_document(in), opt);
                           }),
                  common);
    }
  } catch (const std::exception& e) {
    std::cerr << "aset: error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
