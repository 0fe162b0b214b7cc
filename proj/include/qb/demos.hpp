// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qb {

struct Demo {
  std::string_view name;
  std::string_view script;
};

inline const std::vector<Demo>& demos() {
  static const std::vector<Demo> all = {
      {"weyl-counterexample",
       "# Weyl algebra with the bimodule A1[x^-1]/A1\n"
       "ring S = Weyl\n"
       "bimodule N = WeylQuotient\n"
       "module M = Pair(S, N)\n"
       "check quasi_baer(M)\n"
       "check q_local_retractable(M)\n"
       "check quasi_retractable(M)\n"
       "check local_retractable(M)\n"},
      {"finite-survey",
       "ring F2 = Zmod(2)\n"
       "ring F3 = Zmod(3)\n"
       "ring Z4 = Zmod(4)\n"
       "ring M2 = MatRing(2, Zmod(2))\n"
       "bimodule N2 = Regular(F2)\n"
       "bimodule N3 = Regular(F3)\n"
       "bimodule N4 = ZmodBimodule(Z4, 2)\n"
       "bimodule NM = Regular(M2)\n"
       "module A = Pair(F2, N2)\n"
       "module B = Pair(F3, N3)\n"
       "module C = Pair(Z4, N4)\n"
       "module D = Pair(M2, NM)\n"
       "check quasi_baer(A)\ncheck q_local_retractable(A)\ncheck local_retractable(A)\ncheck quasi_retractable(A)\n"
       "check quasi_baer(B)\ncheck q_local_retractable(B)\ncheck local_retractable(B)\ncheck quasi_retractable(B)\n"
       "check quasi_baer(C)\ncheck q_local_retractable(C)\ncheck local_retractable(C)\ncheck quasi_retractable(C)\n"
       "check quasi_baer(D)\ncheck q_local_retractable(D)\ncheck local_retractable(D)\ncheck quasi_retractable(D)\n"},
      {"smash-c2",
       "ring F2 = Zmod(2)\n"
       "ring Z4 = Zmod(4)\n"
       "bimodule N2 = Regular(F2)\n"
       "bimodule N4 = ZmodBimodule(Z4, 2)\n"
       "module A = Pair(F2, N2)\n"
       "module C = Pair(Z4, N4)\n"
       "check smash_structure(A)\n"
       "check smash_structure(C)\n"},
  };
  return all;
}

inline std::optional<std::string_view> demo_script(std::string_view name) {
  for (const auto& d : demos())
    if (d.name == name) return d.script;
  return std::nullopt;
}

}  // namespace qb
