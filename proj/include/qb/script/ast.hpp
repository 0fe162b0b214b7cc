// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qb/script/token.hpp"

namespace qb::script {

inline constexpr std::array<std::string_view, 7> kCheckNames = {
    "quasi_baer", "q_local_retractable", "local_retractable", "quasi_retractable",
    "end_ring",   "torsion_free",        "smash_structure"};

struct RingExpr {
  enum class Kind { zmod, matring, weyl, weyl_loc } kind = Kind::zmod;
  std::uint64_t n = 0;              // modulus, or matrix dimension
  std::shared_ptr<RingExpr> base;   // matring only
  Span span;

  friend bool operator==(const RingExpr& a, const RingExpr& b) {
    if (a.kind != b.kind || a.n != b.n) return false;
    if (!a.base || !b.base) return !a.base && !b.base;
    return *a.base == *b.base;
  }
};

struct BimoduleExpr {
  enum class Kind { regular, zmod_quotient, weyl_quotient } kind = Kind::regular;
  std::string ring;  // empty for weyl_quotient
  std::uint64_t m = 0;
  Span span;
  Span ring_span;
  friend bool operator==(const BimoduleExpr& a, const BimoduleExpr& b) {
    return a.kind == b.kind && a.ring == b.ring && a.m == b.m;
  }
};

struct RingDecl {
  std::string name;
  RingExpr expr;
  Span span, name_span;
  friend bool operator==(const RingDecl& a, const RingDecl& b) { return a.name == b.name && a.expr == b.expr; }
};

struct BimoduleDecl {
  std::string name;
  BimoduleExpr expr;
  Span span, name_span;
  friend bool operator==(const BimoduleDecl& a, const BimoduleDecl& b) { return a.name == b.name && a.expr == b.expr; }
};

struct ModuleDecl {
  std::string name, ring, bimodule;
  Span span, name_span, ring_span, bimodule_span;
  friend bool operator==(const ModuleDecl& a, const ModuleDecl& b) {
    return a.name == b.name && a.ring == b.ring && a.bimodule == b.bimodule;
  }
};

struct CheckStmt {
  std::string check, module;
  Span span, module_span;
  friend bool operator==(const CheckStmt& a, const CheckStmt& b) { return a.check == b.check && a.module == b.module; }
};

struct AssertStmt {
  std::string check, module, expected;  // expected: holds | fails
  Span span, module_span;
  friend bool operator==(const AssertStmt& a, const AssertStmt& b) {
    return a.check == b.check && a.module == b.module && a.expected == b.expected;
  }
};

using Statement = std::variant<RingDecl, BimoduleDecl, ModuleDecl, CheckStmt, AssertStmt>;

struct Program {
  std::vector<Statement> statements;
  friend bool operator==(const Program&, const Program&) = default;
};

inline Span statement_span(const Statement& s) {
  return std::visit([](const auto& x) { return x.span; }, s);
}

// ---------------------------------------------------------------------------
// Pretty printing (re-parses to an equal Program)

inline std::string to_string(const RingExpr& r) {
  switch (r.kind) {
    case RingExpr::Kind::zmod: return "Zmod(" + std::to_string(r.n) + ")";
    case RingExpr::Kind::matring: return "MatRing(" + std::to_string(r.n) + ", " + to_string(*r.base) + ")";
    case RingExpr::Kind::weyl: return "Weyl";
    case RingExpr::Kind::weyl_loc: return "WeylLoc";
  }
  return "?";
}

inline std::string to_string(const BimoduleExpr& b) {
  switch (b.kind) {
    case BimoduleExpr::Kind::regular: return "Regular(" + b.ring + ")";
    case BimoduleExpr::Kind::zmod_quotient: return "ZmodBimodule(" + b.ring + ", " + std::to_string(b.m) + ")";
    case BimoduleExpr::Kind::weyl_quotient: return "WeylQuotient";
  }
  return "?";
}

inline std::string to_string(const Statement& s) {
  struct V {
    std::string operator()(const RingDecl& d) const { return "ring " + d.name + " = " + to_string(d.expr); }
    std::string operator()(const BimoduleDecl& d) const { return "bimodule " + d.name + " = " + to_string(d.expr); }
    std::string operator()(const ModuleDecl& d) const {
      return "module " + d.name + " = Pair(" + d.ring + ", " + d.bimodule + ")";
    }
    std::string operator()(const CheckStmt& c) const { return "check " + c.check + "(" + c.module + ")"; }
    std::string operator()(const AssertStmt& a) const {
      return "assert " + a.check + "(" + a.module + ") == " + a.expected;
    }
  };
  return std::visit(V{}, s);
}

inline std::string pretty_print(const Program& p) {
  std::string out;
  for (const auto& s : p.statements) out += to_string(s) + "\n";
  return out;
}

}  // namespace qb::script
