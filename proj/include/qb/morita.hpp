// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qb/config.hpp"
#include "qb/finite_ring.hpp"
#include "qb/modules.hpp"
#include "qb/weyl.hpp"

namespace qb {

/// A ring S with an S-S-bimodule N, enough to build [[S,N],[N,S]] and N+S.
template <class C>
concept MoritaContext = requires(const C& c, typename C::RingElement s, typename C::BimoduleElement n) {
  { c.ring_add(s, s) } -> std::same_as<typename C::RingElement>;
  { c.ring_mul(s, s) } -> std::same_as<typename C::RingElement>;
  { c.ring_zero() } -> std::same_as<typename C::RingElement>;
  { c.ring_one() } -> std::same_as<typename C::RingElement>;
  { c.bimod_add(n, n) } -> std::same_as<typename C::BimoduleElement>;
  { c.bimod_zero() } -> std::same_as<typename C::BimoduleElement>;
  { c.left(s, n) } -> std::same_as<typename C::BimoduleElement>;
  { c.right(n, s) } -> std::same_as<typename C::BimoduleElement>;
};

/// [[a, x], [y, b]] with a, b in S and x, y in N. There is no N*N term:
/// the zero pairing is structural.
template <class C>
struct GenMatrix {
  typename C::RingElement a;
  typename C::BimoduleElement x;
  typename C::BimoduleElement y;
  typename C::RingElement b;
  friend bool operator==(const GenMatrix&, const GenMatrix&) = default;
};

/// (n, s) in M = N + S.
template <class C>
struct PairVec {
  typename C::BimoduleElement n;
  typename C::RingElement s;
  friend bool operator==(const PairVec&, const PairVec&) = default;
};

template <MoritaContext C>
GenMatrix<C> genmatrix_identity(const C& c) {
  return {c.ring_one(), c.bimod_zero(), c.bimod_zero(), c.ring_one()};
}

template <MoritaContext C>
GenMatrix<C> genmatrix_add(const C& c, const GenMatrix<C>& u, const GenMatrix<C>& v) {
  return {c.ring_add(u.a, v.a), c.bimod_add(u.x, v.x), c.bimod_add(u.y, v.y), c.ring_add(u.b, v.b)};
}

/// (a,x,y,b)(a',x',y',b') = (aa', ax' + xb', ya' + by', bb').
template <MoritaContext C>
GenMatrix<C> genmatrix_mul(const C& c, const GenMatrix<C>& u, const GenMatrix<C>& v) {
  c.validate(u);
  c.validate(v);
  return {c.ring_mul(u.a, v.a), c.bimod_add(c.left(u.a, v.x), c.right(u.x, v.b)),
          c.bimod_add(c.right(u.y, v.a), c.left(u.b, v.y)), c.ring_mul(u.b, v.b)};
}

template <MoritaContext C>
PairVec<C> pair_add(const C& c, const PairVec<C>& m, const PairVec<C>& w) {
  return {c.bimod_add(m.n, w.n), c.ring_add(m.s, w.s)};
}

/// (n, s) . [[a,x],[y,b]] = (n a + s y, s b).
template <MoritaContext C>
PairVec<C> module_act(const C& c, const PairVec<C>& m, const GenMatrix<C>& u) {
  c.validate(m);
  c.validate(u);
  return {c.bimod_add(c.right(m.n, u.a), c.left(m.s, u.y)), c.ring_mul(m.s, u.b)};
}

/// lambda_t(n, s) = (t n, t s).
template <MoritaContext C>
PairVec<C> lambda_apply(const C& c, const typename C::RingElement& t, const PairVec<C>& m) {
  return {c.left(t, m.n), c.ring_mul(t, m.s)};
}

/// Context over a finite ring and finite bimodule; elements are carrier indices.
class FiniteMorita {
 public:
  using RingElement = Element;
  using BimoduleElement = Element;

  FiniteMorita(FiniteRing s, FiniteBimodule n) : s_(std::move(s)), n_(std::move(n)) {
    if (!(n_.ring() == s_)) throw PreconditionError("bimodule " + n_.descriptor() + " is not over " + s_.descriptor());
    m_layout_ = Layout::concat(n_.layout(), s_.layout());
  }

  const FiniteRing& ring() const { return s_; }
  const FiniteBimodule& bimodule() const { return n_; }
  std::string descriptor() const { return "Pair(" + s_.descriptor() + ", " + n_.descriptor() + ")"; }

  Element ring_add(Element a, Element b) const { return s_.add(a, b); }
  Element ring_mul(Element a, Element b) const { return s_.mul(a, b); }
  Element ring_zero() const { return s_.zero(); }
  Element ring_one() const { return s_.one(); }
  Element bimod_add(Element a, Element b) const { return n_.add(a, b); }
  Element bimod_zero() const { return n_.zero(); }
  Element left(Element s, Element n) const { return n_.left(s, n); }
  Element right(Element n, Element s) const { return n_.right(n, s); }

  void validate(const GenMatrix<FiniteMorita>& u) const {
    if (!s_.contains(u.a) || !s_.contains(u.b) || !n_.contains(u.x) || !n_.contains(u.y))
      throw PreconditionError("matrix entry outside the parent ring/bimodule");
  }
  void validate(const PairVec<FiniteMorita>& m) const {
    if (!s_.contains(m.s) || !n_.contains(m.n)) throw PreconditionError("pair entry outside the parent module");
  }

  /// Layout of M = N + S (N coordinates first).
  const Layout& module_layout() const { return m_layout_; }
  std::uint64_t module_size() const { return m_layout_.size(); }
  std::uint64_t matrix_ring_size() const {
    auto s = s_.size(), n = n_.size();
    long double total = static_cast<long double>(s) * s * n * n;
    return total >= static_cast<long double>(kSizeOverflow) ? kSizeOverflow : s * s * n * n;
  }

  PairVec<FiniteMorita> decode_pair(Index i) const { return {i / s_.size(), i % s_.size()}; }
  Index encode_pair(const PairVec<FiniteMorita>& m) const { return m.n * s_.size() + m.s; }
  PairVec<FiniteMorita> pair_from(const Coords& c) const { return decode_pair(m_layout_.encode(c)); }
  Coords coords_of(const PairVec<FiniteMorita>& m) const { return m_layout_.decode(encode_pair(m)); }

  GenMatrix<FiniteMorita> decode_matrix(Index i) const {
    const auto s = s_.size(), n = n_.size();
    GenMatrix<FiniteMorita> u;
    u.b = i % s;
    i /= s;
    u.y = i % n;
    i /= n;
    u.x = i % n;
    i /= n;
    u.a = i;
    return u;
  }

  /// Additive generators of R: unit coordinates in each of the four slots.
  std::vector<GenMatrix<FiniteMorita>> matrix_generators() const {
    std::vector<GenMatrix<FiniteMorita>> g;
    for (auto e : s_.additive_generators()) g.push_back({e, 0, 0, 0});
    for (auto e : n_.additive_generators()) g.push_back({0, e, 0, 0});
    for (auto e : n_.additive_generators()) g.push_back({0, 0, e, 0});
    for (auto e : s_.additive_generators()) g.push_back({0, 0, 0, e});
    return g;
  }

  /// M as a right R-module: one operator per additive generator of R.
  OperatorModule right_module() const {
    OperatorModule m;
    m.layout = m_layout_;
    for (const auto& u : matrix_generators())
      m.operators.push_back(linear_map_from(m_layout_, [&](const Coords& v) {
        return coords_of(module_act(*this, pair_from(v), u));
      }));
    return m;
  }

  LinearMap lambda_map(Element t) const {
    return linear_map_from(m_layout_, [&](const Coords& v) { return coords_of(lambda_apply(*this, t, pair_from(v))); });
  }

  std::string format_pair(const PairVec<FiniteMorita>& m) const {
    return "(" + n_.format(m.n) + ", " + s_.format(m.s) + ")";
  }
  std::string format_pair(Index i) const { return format_pair(decode_pair(i)); }

 private:
  FiniteRing s_;
  FiniteBimodule n_;
  Layout m_layout_;
};

enum class WeylRing { weyl, weyl_loc };
enum class WeylBimodule { regular, quotient };

inline std::string to_string(WeylRing r) { return r == WeylRing::weyl ? "Weyl" : "WeylLoc"; }

/// Context over A1(Q) or A1[x^-1], with N the regular bimodule or A1[x^-1]/A1.
class WeylMorita {
 public:
  using RingElement = weyl::WeylElement;
  using BimoduleElement = weyl::WeylElement;

  WeylMorita(WeylRing ring, WeylBimodule bimodule) : ring_(ring), bimodule_(bimodule) {
    if (bimodule == WeylBimodule::quotient && ring != WeylRing::weyl)
      throw PreconditionError("WeylQuotient is a bimodule over Weyl only");
  }

  WeylRing ring() const { return ring_; }
  WeylBimodule bimodule() const { return bimodule_; }
  std::string ring_descriptor() const { return to_string(ring_); }
  std::string bimodule_descriptor() const {
    return bimodule_ == WeylBimodule::quotient ? "WeylQuotient" : "Regular(" + to_string(ring_) + ")";
  }
  std::string descriptor() const { return "Pair(" + ring_descriptor() + ", " + bimodule_descriptor() + ")"; }

  RingElement ring_add(const RingElement& a, const RingElement& b) const { return a + b; }
  RingElement ring_mul(const RingElement& a, const RingElement& b) const { return a * b; }
  RingElement ring_zero() const { return {}; }
  RingElement ring_one() const { return RingElement::one(); }
  BimoduleElement bimod_add(const BimoduleElement& a, const BimoduleElement& b) const { return reduce(a + b); }
  BimoduleElement bimod_zero() const { return {}; }
  BimoduleElement left(const RingElement& s, const BimoduleElement& n) const { return reduce(s * n); }
  BimoduleElement right(const BimoduleElement& n, const RingElement& s) const { return reduce(n * s); }

  BimoduleElement reduce(const BimoduleElement& n) const {
    return bimodule_ == WeylBimodule::quotient ? weyl::quotient_rep(n) : n;
  }

  bool ring_contains(const RingElement& a) const { return ring_ == WeylRing::weyl_loc || weyl::is_in_D(a); }

  void validate(const GenMatrix<WeylMorita>& u) const {
    if (!ring_contains(u.a) || !ring_contains(u.b)) throw PreconditionError("matrix entry outside the parent ring");
  }
  void validate(const PairVec<WeylMorita>& m) const {
    if (!ring_contains(m.s)) throw PreconditionError("pair entry outside the parent ring");
  }

  weyl::ElementBox ring_box() const {
    weyl::ElementBox b;
    if (ring_ == WeylRing::weyl_loc) b.x_min = -5;
    return b;
  }
  weyl::ElementBox bimodule_box() const {
    weyl::ElementBox b = ring_box();
    if (bimodule_ == WeylBimodule::quotient) {
      b.x_min = -5;
      b.x_max = -1;
    }
    return b;
  }

  template <class Rng>
  RingElement random_ring_element(Rng& rng) const {
    return weyl::random_element(rng, ring_box());
  }
  template <class Rng>
  BimoduleElement random_bimodule_element(Rng& rng) const {
    return reduce(weyl::random_element(rng, bimodule_box()));
  }
  template <class Rng>
  GenMatrix<WeylMorita> random_matrix(Rng& rng) const {
    return {random_ring_element(rng), random_bimodule_element(rng), random_bimodule_element(rng),
            random_ring_element(rng)};
  }
  template <class Rng>
  PairVec<WeylMorita> random_pair(Rng& rng) const {
    return {random_bimodule_element(rng), random_ring_element(rng)};
  }

 private:
  WeylRing ring_;
  WeylBimodule bimodule_;
};

/// Outcome of identifying End(M_R) with S through t -> lambda_t.
struct EndRingReport {
  std::uint64_t ring_size = 0;
  std::uint64_t end_size = 0;
  std::vector<std::pair<Element, LinearMap>> identification;  // t, lambda_t
  bool every_map_is_lambda = false;
  bool lambda_injective = false;
  bool additive = false;
  bool multiplicative = false;
  bool unital = false;
  bool lambda_linear = false;
  std::optional<bool> exhaustive_agrees;  // nullopt when the oracle was skipped
  std::uint64_t exhaustive_candidates = 0;
  std::string failure;

  bool ok() const {
    return every_map_is_lambda && lambda_injective && additive && multiplicative && unital && lambda_linear &&
           end_size == ring_size && exhaustive_agrees.value_or(true);
  }
};

/// Computes End(M_R) with the solver and checks that t -> lambda_t is a
/// ring isomorphism S -> End(M_R).
inline EndRingReport end_ring_verify(const FiniteMorita& inst, const Config& cfg = {}) {
  EndRingReport rep;
  const auto& S = inst.ring();
  const auto& L = inst.module_layout();
  if (S.size() > cfg.cap || inst.module_size() > cfg.cap)
    throw CapExceeded("instance " + inst.descriptor() + " exceeds cap " + std::to_string(cfg.cap));
  const auto mod = inst.right_module();
  auto homs = module_homs(mod, mod, cfg.cap);
  rep.ring_size = S.size();
  rep.end_size = homs.size();

  std::map<LinearMap, Element> by_map;
  std::vector<LinearMap> lambdas(S.size());
  rep.lambda_linear = true;
  for (Element t = 0; t < S.size(); ++t) {
    lambdas[t] = inst.lambda_map(t);
    by_map.emplace(lambdas[t], t);
    for (std::size_t k = 0; k < mod.operators.size() && rep.lambda_linear; ++k)
      for (std::size_t i = 0; i < L.rank() && rep.lambda_linear; ++i)
        rep.lambda_linear = lambdas[t].apply(L, mod.act(k, L.unit(i))) == mod.act(k, lambdas[t].images[i]);
  }
  rep.lambda_injective = by_map.size() == S.size();
  rep.every_map_is_lambda = true;
  for (const auto& f : homs) {
    auto it = by_map.find(f);
    if (it == by_map.end()) {
      rep.every_map_is_lambda = false;
      rep.failure = "endomorphism not of the form lambda_t";
      continue;
    }
    rep.identification.emplace_back(it->second, f);
  }
  std::sort(rep.identification.begin(), rep.identification.end());

  auto compose = [&](const LinearMap& f, const LinearMap& g) {  // f after g
    return linear_map_from(L, [&](const Coords& v) { return f.apply(L, g.apply(L, v)); });
  };
  auto sum = [&](const LinearMap& f, const LinearMap& g) {
    return linear_map_from(L, [&](const Coords& v) { return L.add(f.apply(L, v), g.apply(L, v)); });
  };
  rep.additive = rep.multiplicative = true;
  for (Element t = 0; t < S.size(); ++t)
    for (Element u = 0; u < S.size(); ++u) {
      if (!(lambdas[S.add(t, u)] == sum(lambdas[t], lambdas[u]))) rep.additive = false;
      if (!(lambdas[S.mul(t, u)] == compose(lambdas[t], lambdas[u]))) rep.multiplicative = false;
    }
  rep.unital = lambdas[S.one()] == linear_map_from(L, [](const Coords& v) { return v; });

  rep.exhaustive_candidates = additive_candidate_count(L, L, cfg.brute_force_limit + 1);
  if (rep.exhaustive_candidates <= cfg.brute_force_limit) {
    auto brute = module_homs_exhaustive(mod, mod, cfg.brute_force_limit);
    auto solver = homs;
    std::sort(solver.begin(), solver.end());
    rep.exhaustive_agrees = brute && *brute == solver;
  }
  return rep;
}

}  // namespace qb
