// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <CLI11.hpp>

#include <iostream>

#include "qb/driver.hpp"

namespace {

void add_common(CLI::App* cmd, qb::RunOptions& opt, std::uint64_t& seed) {
  cmd->add_flag("--json", opt.json, "Emit the JSON report");
  cmd->add_option("--seed", seed, "Seed for randomized suites (default: generated, printed in the report)");
  cmd->add_option("--cap", opt.cap, "Exhaustive-check cap")->check(CLI::PositiveNumber);
  cmd->add_option("--samples", opt.samples, "Randomized suite size");
  cmd->add_flag("--no-timing", [&opt](std::int64_t) { opt.timing = false; }, "Report 0 ms for every check");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qb: quasi-Baer and retractability checks for generalized matrix modules"};
  app.set_version_flag("--version", std::string(qb::kVersion));
  app.require_subcommand(1);

  qb::RunOptions opt;
  std::uint64_t seed = 0;
  std::string path, demo;

  auto* run = app.add_subcommand("run", "Run a .qb script");
  run->add_option("path", path, "Script file")->required();
  add_common(run, opt, seed);

  auto* dem = app.add_subcommand("demo", "Run a bundled demo (weyl-counterexample, finite-survey, smash-c2)");
  dem->add_option("name", demo, "Demo name")->required();
  add_common(dem, opt, seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : qb::kExitUsage;
  }
  for (auto* cmd : {run, dem})
    if (cmd->count("--seed")) opt.seed = seed;

  if (*run) return qb::run_file(path, opt, std::cout, std::cerr);
  return qb::run_demo(demo, opt, std::cout, std::cerr);
}
