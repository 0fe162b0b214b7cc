// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <optional>
#include <string>

#include "qb/retract.hpp"
#include "qb/script/element.hpp"
#include "qb/smash.hpp"

namespace qb {

/// Raised for checks that do not apply to an instance.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Verdict check_smash_structure(const FiniteMorita& inst, const Config& cfg = {}) {
  Verdict v;
  v.property = "smash_structure";
  v.target = inst.descriptor();
  v.notes.push_back("exhaustive");
  auto a = trivial_extension(inst.ring(), inst.bimodule());
  auto end = end_smash_verify(a, cfg);
  auto sm = structure_map_check(inst, cfg);
  v.certificates.push_back(end_smash_json(end));
  v.certificates.push_back(structure_map_json(sm));
  const bool ok = end.ok() && sm.bijective && sm.additive && sm.unit_to_unit &&
                  (sm.multiplicative() || sm.anti_multiplicative());
  v.decision = ok ? Decision::holds : Decision::fails;
  if (!ok)
    v.witness = json{{"kind", "smash_structure"},
                     {"end_smash_ok", end.ok()},
                     {"end_failure", end.failure},
                     {"structure_map_bijective", sm.bijective}};
  return v;
}

/// Runs a named check on an instance.
inline Verdict run_check(const std::string& name, const Instance& inst, const Config& cfg = {}) {
  return std::visit(
      [&](const auto& c) -> Verdict {
        using T = std::decay_t<decltype(c)>;
        if (name == "quasi_baer") return check_quasi_baer(c, cfg);
        if (name == "q_local_retractable") return check_q_local_retractable(c, cfg);
        if (name == "local_retractable") return check_local_retractable(c, cfg);
        if (name == "quasi_retractable") return check_quasi_retractable(c, cfg);
        if (name == "end_ring") return check_end_ring(c, cfg);
        if (name == "torsion_free") return check_torsion_free(c, cfg);
        if (name == "smash_structure") {
          if constexpr (std::is_same_v<T, FiniteMorita>) {
            return check_smash_structure(c, cfg);
          } else {
            throw EvaluationError("smash_structure needs a finite instance, got " + c.descriptor());
          }
        }
        throw EvaluationError("unknown check '" + name + "'");
      },
      inst);
}

// ---------------------------------------------------------------------------
// Replay from serialized evidence

inline std::optional<weyl::CollapseCertificate> collapse_from_json(const json& j) {
  try {
    weyl::CollapseCertificate c;
    c.source = script::parse_weyl_element(j.at("source").get<std::string>());
    c.x_shift = j.at("x_shift").get<std::int64_t>();
    c.input = script::parse_weyl_element(j.at("input").get<std::string>());
    c.ad_d_count = j.at("ad_d").get<std::uint32_t>();
    c.ad_x_count = j.at("ad_x").get<std::uint32_t>();
    c.final_scalar = Rational(j.at("scalar").get<std::string>());
    c.final_scalar.canonicalize();
    return c;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

namespace detail {

inline bool replay_finite(const FiniteMorita& inst, const Verdict& v, const Config& cfg) {
  const auto& w = v.witness;
  const auto& S = inst.ring();
  if (w.at("kind") == "torsion") {
    auto s = w.at("s").get<Element>(), n = w.at("n").get<Element>();
    return S.contains(s) && n < inst.bimodule().size() && s != S.zero() && n != inst.bimodule().zero() &&
           inst.bimodule().left(s, n) == inst.bimodule().zero();
  }
  if (w.at("kind") != "ideal") return false;
  const auto& ij = w.at("ideal");
  Side side = ij.at("sidedness") == "left" ? Side::left : ij.at("sidedness") == "right" ? Side::right : Side::two_sided;
  auto gens = ij.at("generators").get<std::vector<Element>>();
  for (auto g : gens)
    if (!S.contains(g)) return false;
  auto ideal = ideal_closure(S, gens, side, cfg.cap);
  if (ideal.elements != ij.at("elements").get<std::vector<Element>>()) return false;
  auto ann = ann_in_M(inst, ideal.elements, cfg.cap);
  if (v.property == "quasi_baer") return !is_direct_summand(inst.right_module(), ann, cfg.cap).has_value();
  auto rann = right_ann_S(S, ideal.elements);
  if (v.property == "quasi_retractable") return rann.is_zero() && ann.size() > 1;
  if (v.property == "q_local_retractable" || v.property == "local_retractable")
    return ann.elements != rann_times_M(inst, rann, cfg.cap).elements;
  return false;
}

inline bool replay_symbolic(const WeylMorita& inst, const Verdict& v) {
  const auto& w = v.witness;
  if (w.at("kind") != "torsion" || inst.bimodule() != WeylBimodule::quotient) return false;
  auto s = script::parse_weyl_element(w.at("s").get<std::string>());
  auto q = script::parse_weyl_element(w.at("q").get<std::string>());
  if (!weyl::torsion_witness_verify(s, q)) return false;
  // (q + D, 0) is a nonzero element of M killed by every generator of S s
  PairVec<WeylMorita> m{inst.reduce(q), weyl::WeylElement{}};
  return !m.n.is_zero() && ann_contains(inst, {s}, m) && right_ann_is_zero({s});
}

}  // namespace detail

/// Re-evaluates a `fails` witness; true when the violation reproduces.
inline bool replay_witness(const Instance& inst, const Verdict& v, const Config& cfg = {}) {
  if (v.decision != Decision::fails || v.witness.is_null()) return false;
  try {
    if (const auto* f = std::get_if<FiniteMorita>(&inst)) return detail::replay_finite(*f, v, cfg);
    return detail::replay_symbolic(std::get<WeylMorita>(inst), v);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace qb
