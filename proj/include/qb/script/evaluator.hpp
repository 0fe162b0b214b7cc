// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qb/checks.hpp"
#include "qb/script/ast.hpp"
#include "qb/script/parser.hpp"

namespace qb::script {

struct CheckRecord {
  Verdict verdict;
  std::int64_t millis = 0;
  std::optional<std::string> expected;  // set for assert statements
  bool passed = true;
  Span span;
};

enum class RunStatus { ok, assert_failed, error };

inline std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::ok: return "ok";
    case RunStatus::assert_failed: return "assert-failed";
    case RunStatus::error: return "error";
  }
  return "?";
}

struct RunResult {
  std::vector<CheckRecord> checks;
  RunStatus status = RunStatus::ok;
  std::optional<Diagnostic> error;
};

/// An assert passes on `holds` for both holds and holds-by-structure.
inline bool assertion_satisfied(const std::string& expected, Decision d) {
  return expected == "fails" ? d == Decision::fails : d != Decision::fails;
}

namespace detail {

struct RingValue {
  std::optional<FiniteRing> finite;
  WeylRing weyl = WeylRing::weyl;
  std::string descriptor() const { return finite ? finite->descriptor() : to_string(weyl); }
};

struct BimoduleValue {
  std::optional<FiniteBimodule> finite;
  WeylBimodule weyl = WeylBimodule::regular;
  std::optional<WeylRing> weyl_ring;  // regular over a symbolic ring
};

class Evaluator {
 public:
  Evaluator(const Config& cfg, bool timing) : cfg_(cfg), timing_(timing) {}

  RunResult run(const Program& p) {
    RunResult r;
    for (const auto& st : p.statements) {
      try {
        std::visit([&](const auto& s) { exec(s, r); }, st);
      } catch (const ScriptError& e) {
        r.status = RunStatus::error;
        r.error = e.diagnostic();
        return r;
      } catch (const std::exception& e) {
        r.status = RunStatus::error;
        r.error = Diagnostic{"error", std::string("evaluation failed: ") + e.what(), statement_span(st), ""};
        return r;
      }
    }
    for (const auto& c : r.checks)
      if (!c.passed) r.status = RunStatus::assert_failed;
    return r;
  }

 private:
  FiniteRing finite_ring(const RingExpr& e) {
    if (e.kind == RingExpr::Kind::zmod) {
      if (e.n > cfg_.cap) throw CapExceeded("Zmod(" + std::to_string(e.n) + ") exceeds cap " + std::to_string(cfg_.cap));
      return FiniteRing::zmod(e.n);
    }
    if (e.kind != RingExpr::Kind::matring) throw EvaluationError("MatRing over a symbolic ring is not supported");
    auto base = finite_ring(*e.base);
    const double bits = static_cast<double>(e.n) * e.n * std::log2(static_cast<double>(base.size()));
    if (e.n == 0 || bits > std::log2(static_cast<double>(cfg_.cap)) + 1e-9) {
      if (e.n == 0) throw PreconditionError("MatRing dimension must be >= 1");
      throw CapExceeded("MatRing(" + std::to_string(e.n) + ", " + base.descriptor() + ") exceeds cap " +
                        std::to_string(cfg_.cap));
    }
    return FiniteRing::matrix(static_cast<unsigned>(e.n), base);
  }

  void exec(const RingDecl& d, RunResult&) {
    RingValue v;
    if (d.expr.kind == RingExpr::Kind::weyl) v.weyl = WeylRing::weyl;
    else if (d.expr.kind == RingExpr::Kind::weyl_loc) v.weyl = WeylRing::weyl_loc;
    else v.finite = finite_ring(d.expr);
    rings_[d.name] = std::move(v);
  }

  void exec(const BimoduleDecl& d, RunResult&) {
    BimoduleValue b;
    if (d.expr.kind == BimoduleExpr::Kind::weyl_quotient) {
      b.weyl = WeylBimodule::quotient;
    } else {
      const auto& ring = rings_.at(d.expr.ring);
      if (d.expr.kind == BimoduleExpr::Kind::regular) {
        if (ring.finite) b.finite = FiniteBimodule::regular(*ring.finite);
        else b.weyl_ring = ring.weyl;
      } else {
        if (!ring.finite) throw EvaluationError("ZmodBimodule needs a finite ring, got " + ring.descriptor());
        b.finite = FiniteBimodule::zmod_quotient(*ring.finite, d.expr.m);
      }
    }
    bimodules_[d.name] = std::move(b);
  }

  void exec(const ModuleDecl& d, RunResult&) {
    const auto& s = rings_.at(d.ring);
    const auto& n = bimodules_.at(d.bimodule);
    if (s.finite) {
      if (!n.finite) throw EvaluationError("bimodule '" + d.bimodule + "' is symbolic but " + d.ring + " is finite");
      modules_.insert_or_assign(d.name, Instance(FiniteMorita(*s.finite, *n.finite)));
      return;
    }
    if (n.finite) throw EvaluationError("bimodule '" + d.bimodule + "' is finite but " + d.ring + " is symbolic");
    if (n.weyl == WeylBimodule::regular && n.weyl_ring != s.weyl)
      throw EvaluationError("bimodule '" + d.bimodule + "' is not over " + s.descriptor());
    modules_.insert_or_assign(d.name, Instance(WeylMorita(s.weyl, n.weyl)));
  }

  CheckRecord timed(const std::string& check, const std::string& module, const Span& span) {
    const auto& inst = modules_.at(module);
    auto t0 = std::chrono::steady_clock::now();
    CheckRecord rec;
    rec.verdict = run_check(check, inst, cfg_);
    auto t1 = std::chrono::steady_clock::now();
    rec.millis = timing_ ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() : 0;
    rec.span = span;
    return rec;
  }

  void exec(const CheckStmt& c, RunResult& r) { r.checks.push_back(timed(c.check, c.module, c.span)); }

  void exec(const AssertStmt& a, RunResult& r) {
    auto rec = timed(a.check, a.module, a.span);
    rec.expected = a.expected;
    rec.passed = assertion_satisfied(a.expected, rec.verdict.decision);
    r.checks.push_back(std::move(rec));
  }

  Config cfg_;
  bool timing_;
  std::map<std::string, RingValue> rings_;
  std::map<std::string, BimoduleValue> bimodules_;
  std::map<std::string, Instance> modules_;
};

}  // namespace detail

/// Executes a resolved program in statement order.
inline RunResult evaluate(const Program& p, const Config& cfg = {}, bool timing = true) {
  return detail::Evaluator(cfg, timing).run(p);
}

}  // namespace qb::script
