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

#ifndef ASET_CLI_REPORT_HPP_
#define ASET_CLI_REPORT_HPP_

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aset/core/errors.hpp"
#include "aset/version.hpp"

namespace aset::cli {

using Json = nlohmann::ordered_json;

enum class Status { kPass, kRefuted, kInconclusive, kInfo };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kRefuted: return "refuted";
    case Status::kInconclusive: return "inconclusive";
    case Status::kInfo: return "info";
  }
  return "?";
}

inline Status parse_status(const std::string& s) {
  for (Status x : {Status::kPass, Status::kRefuted, Status::kInconclusive, Status::kInfo})
    if (s == to_string(x)) return x;
  throw PreconditionError("unknown status " + s);
}

struct Record {
  std::string id;
  std::string outcome;  // as printed: PASSED-SAMPLED, REFUTED, HOLDS, ...
  Status status = Status::kInfo;
  Json evidence = Json::object();
  double wall_ms = 0;
  std::string expected;  // empty when no expectation was given
  bool violation = false;
};

/// Expected outcomes that count as refutations for the exit-code contract.
inline bool is_refutation(const std::string& outcome) { return outcome == "REFUTED" || outcome == "FAILS"; }

struct Report {
  std::string tool = "aset";
  std::string version = kVersion;
  std::string command;
  Json config = Json::object();
  std::vector<Record> records;
  std::vector<std::string> notes;
  bool timing = true;

  std::size_t violations() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.violation;
    return n;
  }

  /// 0 when nothing was refuted against expectation and no expected
  /// refutation went missing, 1 otherwise.
  int exit_code() const { return violations() ? 1 : 0; }

  /// Without expectations every record is expected to pass.
  void apply_expectations(const std::map<std::string, std::string>& expected) {
    for (auto& r : records) {
      auto it = expected.find(r.id);
      if (it != expected.end()) r.expected = it->second;
      const bool want_refuted = it != expected.end() && is_refutation(it->second);
      r.violation = (r.status == Status::kRefuted) != want_refuted;
      if (it != expected.end() && !r.violation && r.outcome != it->second)
        notes.push_back(r.id + ": expected " + it->second + ", got " + r.outcome);
    }
    for (const auto& [id, outcome] : expected) {
      bool found = false;
      for (const auto& r : records) found = found || r.id == id;
      if (found) continue;
      if (is_refutation(outcome)) {
        Record missing{id, "MISSING", Status::kInconclusive};
        missing.expected = outcome;
        missing.violation = true;
        records.push_back(std::move(missing));
      } else {
        notes.push_back(id + ": expected " + outcome + " but no such check ran");
      }
    }
  }
};

inline Json to_json(const Record& r, bool timing = true) {
  Json j;
  j["id"] = r.id;
  j["outcome"] = r.outcome;
  j["status"] = to_string(r.status);
  if (!r.expected.empty()) j["expected"] = r.expected;
  j["violation"] = r.violation;
  j["evidence"] = r.evidence;
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

inline Record record_from_json(const Json& j) {
  Record r;
  r.id = j.at("id").get<std::string>();
  r.outcome = j.at("outcome").get<std::string>();
  r.status = parse_status(j.at("status").get<std::string>());
  if (j.contains("expected")) r.expected = j.at("expected").get<std::string>();
  r.violation = j.at("violation").get<bool>();
  r.evidence = j.at("evidence");
  if (j.contains("wall_ms")) r.wall_ms = j.at("wall_ms").get<double>();
  return r;
}

inline Json to_json(const Report& rep) {
  Json j;
  j["tool"] = rep.tool;
  j["version"] = rep.version;
  j["command"] = rep.command;
  j["config"] = rep.config;
  j["records"] = Json::array();
  for (const auto& r : rep.records) j["records"].push_back(to_json(r, rep.timing));
  j["notes"] = rep.notes;
  j["violations"] = rep.violations();
  j["exit_code"] = rep.exit_code();
  return j;
}

inline Report report_from_json(const Json& j) {
  Report rep;
  rep.tool = j.at("tool").get<std::string>();
  rep.version = j.at("version").get<std::string>();
  rep.command = j.at("command").get<std::string>();
  rep.config = j.at("config");
  for (const auto& r : j.at("records")) rep.records.push_back(record_from_json(r));
  rep.notes = j.at("notes").get<std::vector<std::string>>();
  rep.timing = !rep.records.empty() && j.at("records")[0].contains("wall_ms");
  return rep;
}

inline std::string render_text(const Report& rep) {
  std::ostringstream out;
  std::size_t width = 4;
  for (const auto& r : rep.records) width = std::max(width, r.id.size());
  for (const auto& r : rep.records) {
    out << r.id << std::string(width + 2 - r.id.size(), ' ') << r.outcome;
    if (r.evidence.contains("summary") && !r.evidence["summary"].get<std::string>().empty())
      out << "  " << r.evidence["summary"].get<std::string>();
    if (!r.expected.empty() && r.expected != r.outcome) out << "  (expected " << r.expected << ")";
    if (r.violation) out << "  <-- violation";
    out << "\n";
    if (r.evidence.contains("elements"))
      for (const auto& e : r.evidence["elements"]) out << "    " << e.get<std::string>() << "\n";
  }
  for (const auto& n : rep.notes) out << "note: " << n << "\n";
  out << rep.command << ": " << rep.records.size() << " checks, " << rep.violations() << " violations\n";
  return out.str();
}

}  // namespace aset::cli

#endif  // ASET_CLI_REPORT_HPP_
