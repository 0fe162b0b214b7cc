// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qb/config.hpp"
#include "qb/script/evaluator.hpp"

namespace qb {

struct CheckEntry {
  std::string name;
  std::string target;
  std::string decision;
  json witness;  // object or null
  std::vector<json> certificates;
  std::int64_t millis = 0;
  json assertion;  // null, or {"expected", "passed"}
  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct RunReport {
  std::string version = kVersion;
  std::uint64_t seed = 0;
  std::string input;
  std::vector<CheckEntry> checks;
  std::string status = "ok";
  json error;  // null, or {"message", "line", "column"}
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline RunReport make_report(const script::RunResult& r, const std::string& input, std::uint64_t seed) {
  RunReport rep;
  rep.seed = seed;
  rep.input = input;
  rep.status = script::to_string(r.status);
  for (const auto& c : r.checks) {
    CheckEntry e{c.verdict.property, c.verdict.target, to_string(c.verdict.decision), c.verdict.witness,
                 c.verdict.certificates, c.millis, nullptr};
    if (!c.verdict.notes.empty()) e.certificates.insert(e.certificates.begin(), json{{"kind", "notes"}, {"notes", c.verdict.notes}});
    if (c.expected) e.assertion = json{{"expected", *c.expected}, {"passed", c.passed}};
    rep.checks.push_back(std::move(e));
  }
  if (r.error)
    rep.error = json{{"message", r.error->message}, {"line", r.error->span.line}, {"column", r.error->span.column}};
  return rep;
}

inline json to_json(const RunReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"name", c.name},
           {"target", c.target},
           {"decision", c.decision},
           {"witness", c.witness},
           {"certificates", c.certificates},
           {"millis", c.millis}};
    if (!c.assertion.is_null()) e["assert"] = c.assertion;
    checks.push_back(std::move(e));
  }
  json j{{"version", r.version}, {"seed", r.seed}, {"input", r.input}, {"checks", checks}, {"status", r.status}};
  if (!r.error.is_null()) j["error"] = r.error;
  return j;
}

/// Reads a report back; throws std::invalid_argument naming the first schema violation.
inline RunReport report_from_json(const json& j) {
  auto need = [](const json& o, const char* key, bool (json::*pred)() const noexcept, const char* what) -> const json& {
    if (!o.is_object() || !o.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
    const auto& v = o.at(key);
    if (!(v.*pred)()) throw std::invalid_argument(std::string("key '") + key + "' is not " + what);
    return v;
  };
  RunReport r;
  r.version = need(j, "version", &json::is_string, "a string").get<std::string>();
  r.seed = need(j, "seed", &json::is_number_unsigned, "an unsigned integer").get<std::uint64_t>();
  r.input = need(j, "input", &json::is_string, "a string").get<std::string>();
  r.status = need(j, "status", &json::is_string, "a string").get<std::string>();
  if (r.status != "ok" && r.status != "assert-failed" && r.status != "error")
    throw std::invalid_argument("status '" + r.status + "' is not ok, assert-failed or error");
  for (const auto& c : need(j, "checks", &json::is_array, "an array")) {
    CheckEntry e;
    e.name = need(c, "name", &json::is_string, "a string").get<std::string>();
    e.target = need(c, "target", &json::is_string, "a string").get<std::string>();
    e.decision = need(c, "decision", &json::is_string, "a string").get<std::string>();
    if (!decision_from_string(e.decision)) throw std::invalid_argument("unknown decision '" + e.decision + "'");
    if (!c.contains("witness") || !(c["witness"].is_object() || c["witness"].is_null()))
      throw std::invalid_argument("key 'witness' must be an object or null");
    e.witness = c["witness"];
    for (const auto& cert : need(c, "certificates", &json::is_array, "an array")) {
      if (!cert.is_object()) throw std::invalid_argument("certificate is not an object");
      e.certificates.push_back(cert);
    }
    e.millis = need(c, "millis", &json::is_number_integer, "an integer").get<std::int64_t>();
    if (c.contains("assert")) e.assertion = c["assert"];
    r.checks.push_back(std::move(e));
  }
  if (j.contains("error")) r.error = j["error"];
  return r;
}

namespace detail {

inline std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

inline std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace detail

/// Plain-text report. Timings are left out so equal runs print equal text.
inline std::string render_text(const RunReport& r) {
  std::ostringstream out;
  out << "qb " << r.version << "\n";
  out << "input: " << r.input << "\n";
  out << "seed: " << r.seed << "\n";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const auto& c = r.checks[i];
    out << "\n[" << i + 1 << "] " << (c.assertion.is_null() ? "check " : "assert ") << c.name << "  " << c.target << "\n";
    out << "    decision: " << c.decision << "\n";
    if (!c.assertion.is_null())
      out << "    expected: " << c.assertion["expected"].get<std::string>() << " ("
          << (c.assertion["passed"].get<bool>() ? "passed" : "FAILED") << ")\n";
    if (!c.witness.is_null()) out << "    witness: " << c.witness.dump() << "\n";
    for (const auto& cert : c.certificates) out << "    certificate: " << cert.dump() << "\n";
  }

  // targets x properties, in order of first appearance
  std::vector<std::string> targets, props;
  for (const auto& c : r.checks) {
    if (std::find(targets.begin(), targets.end(), c.target) == targets.end()) targets.push_back(c.target);
    if (std::find(props.begin(), props.end(), c.name) == props.end()) props.push_back(c.name);
  }
  if (!targets.empty()) {
    std::vector<std::vector<std::string>> cells(targets.size(), std::vector<std::string>(props.size(), "-"));
    for (const auto& c : r.checks) {
      auto ti = std::find(targets.begin(), targets.end(), c.target) - targets.begin();
      auto pi = std::find(props.begin(), props.end(), c.name) - props.begin();
      cells[ti][pi] = c.decision;
    }
    std::size_t tw = 6;
    for (const auto& t : targets) tw = std::max(tw, t.size());
    std::vector<std::size_t> pw;
    for (std::size_t p = 0; p < props.size(); ++p) {
      std::size_t w = props[p].size();
      for (const auto& row : cells) w = std::max(w, row[p].size());
      pw.push_back(w);
    }
    std::string head = "  " + detail::pad("target", tw);
    for (std::size_t p = 0; p < props.size(); ++p) head += " | " + detail::pad(props[p], pw[p]);
    out << "\nsummary\n" << detail::rstrip(head) << "\n  " << std::string(tw, '-');
    for (auto w : pw) out << "-+-" << std::string(w, '-');
    out << "\n";
    for (std::size_t t = 0; t < targets.size(); ++t) {
      std::string row = "  " + detail::pad(targets[t], tw);
      for (std::size_t p = 0; p < props.size(); ++p) row += " | " + detail::pad(cells[t][p], pw[p]);
      out << detail::rstrip(row) << "\n";
    }
  }
  if (!r.error.is_null())
    out << "\nerror: " << r.error["message"].get<std::string>() << " at " << r.error["line"] << ":" << r.error["column"] << "\n";
  out << "\nstatus: " << r.status << "\n";
  return out.str();
}

}  // namespace qb
