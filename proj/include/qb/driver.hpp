// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "qb/demos.hpp"
#include "qb/report.hpp"
#include "qb/script/parser.hpp"

namespace qb {

enum ExitCode : int { kExitOk = 0, kExitAssertFailed = 1, kExitUsage = 2, kExitParse = 3, kExitEval = 4 };

struct RunOptions {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t cap = 4096;
  std::uint64_t samples = 200;
  bool timing = true;
};

/// Parses, evaluates and prints one script. Diagnostics go to `err`.
inline int run_script_text(const std::string& text, const std::string& input, const RunOptions& opt, std::ostream& out,
                           std::ostream& err) {
  script::Program prog;
  try {
    prog = script::parse_script(text);
  } catch (const script::ScriptError& e) {
    err << e.diagnostic().render(text, input);
    return kExitParse;
  }
  Config cfg;
  cfg.cap = opt.cap;
  cfg.samples = opt.samples;
  cfg.seed = opt.seed ? *opt.seed : std::random_device{}() * 0x100000000ULL + std::random_device{}();
  auto result = script::evaluate(prog, cfg, opt.timing);
  auto report = make_report(result, input, cfg.seed);
  if (opt.json) out << to_json(report).dump(2) << "\n";
  else out << render_text(report);
  switch (result.status) {
    case script::RunStatus::ok: return kExitOk;
    case script::RunStatus::assert_failed: return kExitAssertFailed;
    case script::RunStatus::error:
      err << result.error->render(text, input);
      return kExitEval;
  }
  return kExitEval;
}

inline int run_file(const std::string& path, const RunOptions& opt, std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": cannot read file\n";
    return kExitEval;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_script_text(buf.str(), path, opt, out, err);
}

inline int run_demo(const std::string& name, const RunOptions& opt, std::ostream& out, std::ostream& err) {
  auto text = demo_script(name);
  if (!text) {
    err << "unknown demo '" << name << "' (available:";
    for (const auto& d : demos()) err << " " << d.name;
    err << ")\n";
    return kExitEval;
  }
  return run_script_text(std::string(*text), "demo:" + name, opt, out, err);
}

}  // namespace qb
