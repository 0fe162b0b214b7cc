// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qb/config.hpp"
#include "qb/scalar.hpp"

namespace qb::weyl {

/// x^x * d^d, all x-powers left of all d-powers.
struct Monomial {
  std::int64_t x = 0;
  std::uint32_t d = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Display order: descending d-degree, then descending x-exponent.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.d != b.d) return a.d > b.d;
    return a.x > b.x;
  }
};

/// Element of A1(Q)[x^-1] in normal form: a finite sum of c * x^i * d^j with
/// i in Z, j >= 0 and c a nonzero rational. The empty sum is zero.
class WeylElement {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  WeylElement() = default;

  static WeylElement scalar(const Rational& c) { return monomial(0, 0, c); }
  static WeylElement monomial(std::int64_t xexp, std::uint32_t dexp, const Rational& c = 1) {
    WeylElement e;
    e.accumulate({xexp, dexp}, c);
    return e;
  }
  static WeylElement x() { return monomial(1, 0); }
  static WeylElement x_inverse() { return monomial(-1, 0); }
  static WeylElement d() { return monomial(0, 1); }
  static WeylElement one() { return scalar(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * monomial, dropping the entry if it cancels.
  void accumulate(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t max_x() const {
    std::int64_t r = INT64_MIN;
    for (const auto& [m, c] : terms_) r = std::max(r, m.x);
    return r;
  }
  std::int64_t min_x() const {
    std::int64_t r = INT64_MAX;
    for (const auto& [m, c] : terms_) r = std::min(r, m.x);
    return r;
  }
  /// d-degree; zero element has degree -1 by convention.
  std::int64_t d_degree() const { return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.begin()->first.d); }

  /// Top d-layer as a Laurent polynomial: x-exponent -> coefficient.
  std::map<std::int64_t, Rational> leading_layer() const {
    std::map<std::int64_t, Rational> out;
    if (terms_.empty()) return out;
    auto top = terms_.begin()->first.d;
    for (const auto& [m, c] : terms_)
      if (m.d == top) out[m.x] = c;
    return out;
  }

  WeylElement operator-() const {
    WeylElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend WeylElement operator+(WeylElement a, const WeylElement& b) {
    for (const auto& [m, c] : b.terms_) a.accumulate(m, c);
    return a;
  }
  friend WeylElement operator-(const WeylElement& a, const WeylElement& b) { return a + (-b); }
  friend WeylElement operator*(const Rational& k, const WeylElement& a) {
    if (k == 0) return {};
    WeylElement r = a;
    for (auto& [m, c] : r.terms_) c *= k;
    return r;
  }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Falling factorial k(k-1)...(k-m+1); valid for negative k.
inline Integer falling_factorial(std::int64_t k, std::uint32_t m) {
  Integer r = 1;
  for (std::uint32_t i = 0; i < m; ++i) r *= Integer(static_cast<long>(k - static_cast<std::int64_t>(i)));
  return r;
}

inline Integer binomial(std::uint32_t n, std::uint32_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Product in normal form using d^j x^k = sum_m C(j,m) (k)_m x^(k-m) d^(j-m).
inline WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  WeylElement r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const Rational base = ca * cb;
      for (std::uint32_t m = 0; m <= ma.d; ++m) {
        Integer ff = falling_factorial(mb.x, m);
        if (ff == 0) break;
        Rational coeff = base * Rational(binomial(ma.d, m) * ff);
        r.accumulate({ma.x + mb.x - static_cast<std::int64_t>(m), ma.d - m + mb.d}, coeff);
      }
    }
  return r;
}

inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return weyl_mul(a, b); }

/// Membership in the polynomial Weyl algebra D = A1(Q).
inline bool is_in_D(const WeylElement& a) {
  return std::all_of(a.terms().begin(), a.terms().end(), [](const auto& t) { return t.first.x >= 0; });
}

/// Canonical representative of a + D in A1[x^-1]/A1: the negative-x part.
inline WeylElement quotient_rep(const WeylElement& a) {
  WeylElement r;
  for (const auto& [m, c] : a.terms())
    if (m.x < 0) r.accumulate(m, c);
  return r;
}

inline std::map<std::int64_t, Rational> laurent_mul(const std::map<std::int64_t, Rational>& p,
                                                   const std::map<std::int64_t, Rational>& q) {
  std::map<std::int64_t, Rational> r;
  for (const auto& [i, a] : p)
    for (const auto& [j, b] : q) r[i + j] += a * b;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

/// Degree additivity of the d-filtration on a nonzero pair: the product's
/// d-degree is the sum of degrees and its top layer is the Laurent product
/// of the top layers.
inline bool domain_degree_check(const WeylElement& a, const WeylElement& b) {
  if (a.is_zero() || b.is_zero()) throw PreconditionError("domain_degree_check needs nonzero arguments");
  auto p = a * b;
  if (p.d_degree() != a.d_degree() + b.d_degree()) return false;
  return p.leading_layer() == laurent_mul(a.leading_layer(), b.leading_layer());
}

/// ad_d(b) = d b - b d.
inline WeylElement ad_d(const WeylElement& b) { return WeylElement::d() * b - b * WeylElement::d(); }
/// ad_x(b) = b x - x b.
inline WeylElement ad_x(const WeylElement& b) { return b * WeylElement::x() - WeylElement::x() * b; }

/// Witness that the two-sided ideal generated by `source` is the whole ring:
/// input = x^x_shift * source lies in D, and ad_count_d applications of ad_d
/// followed by ad_count_x applications of ad_x send input to final_scalar * 1.
struct CollapseCertificate {
  WeylElement source;
  std::int64_t x_shift = 0;
  WeylElement input;
  std::uint32_t ad_d_count = 0;
  std::uint32_t ad_x_count = 0;
  Rational final_scalar;
};

/// Builds the collapse certificate. With allow_shift, elements outside D are
/// first moved into D by a left factor x^k (still inside the ideal).
inline CollapseCertificate ideal_collapse_certificate(const WeylElement& a, bool allow_shift = false) {
  if (a.is_zero()) throw PreconditionError("collapse certificate needs a nonzero element");
  CollapseCertificate cert;
  cert.source = a;
  if (!is_in_D(a)) {
    if (!allow_shift) throw PreconditionError("collapse certificate needs an element of D");
    cert.x_shift = -a.min_x();
    cert.input = WeylElement::monomial(cert.x_shift, 0) * a;
  } else {
    cert.input = a;
  }
  auto b = cert.input;
  const auto imax = b.max_x();
  for (std::int64_t i = 0; i < imax; ++i) b = ad_d(b);
  cert.ad_d_count = static_cast<std::uint32_t>(imax);
  const auto jmax = b.d_degree();
  for (std::int64_t j = 0; j < jmax; ++j) b = ad_x(b);
  cert.ad_x_count = static_cast<std::uint32_t>(jmax);
  if (b.terms().size() != 1 || b.terms().begin()->first != Monomial{0, 0})
    throw std::logic_error("collapse did not reach a scalar");
  cert.final_scalar = b.terms().begin()->second;
  return cert;
}

/// Re-runs the certificate from its recorded data.
inline bool replay(const CollapseCertificate& c) {
  if (c.final_scalar == 0 || !is_in_D(c.input)) return false;
  if (c.input != WeylElement::monomial(c.x_shift, 0) * c.source) return false;
  auto b = c.input;
  for (std::uint32_t i = 0; i < c.ad_d_count; ++i) b = ad_d(b);
  for (std::uint32_t j = 0; j < c.ad_x_count; ++j) b = ad_x(b);
  return b == WeylElement::scalar(c.final_scalar);
}

/// (s, q) witnesses torsion of A1[x^-1]/A1 as a left D-module:
/// s is a nonzero element of D, q + D is nonzero and s q lies in D.
inline bool torsion_witness_verify(const WeylElement& s, const WeylElement& q) {
  return !s.is_zero() && is_in_D(s) && !is_in_D(q) && is_in_D(s * q);
}

/// Exponent box for random elements.
struct ElementBox {
  std::int64_t x_min = 0;
  std::int64_t x_max = 5;
  std::uint32_t d_max = 5;
  int max_terms = 4;
  int coeff_bound = 3;  // coefficients in [-bound, bound]
};

template <class Rng>
WeylElement random_element(Rng& rng, const ElementBox& box) {
  std::uniform_int_distribution<int> nterms(1, box.max_terms);
  std::uniform_int_distribution<std::int64_t> xd(box.x_min, box.x_max);
  std::uniform_int_distribution<std::uint32_t> dd(0, box.d_max);
  std::uniform_int_distribution<int> cd(-box.coeff_bound, box.coeff_bound);
  WeylElement e;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) e.accumulate({xd(rng), dd(rng)}, Rational(cd(rng)));
  return e;
}

template <class Rng>
WeylElement random_nonzero_element(Rng& rng, const ElementBox& box) {
  for (;;) {
    auto e = random_element(rng, box);
    if (!e.is_zero()) return e;
  }
}

/// Text form: terms `c*x^i*d^j` joined by ` + ` / ` - `.
inline std::string to_string(const WeylElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Rational mag = c;
    bool negative = mag < 0;
    if (negative) mag = -mag;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::vector<std::string> factors;
    bool unit_monomial = m.x == 0 && m.d == 0;
    if (mag != 1 || unit_monomial) factors.push_back(mag.get_str());
    if (m.x == 1) factors.push_back("x");
    else if (m.x != 0) factors.push_back("x^" + std::to_string(m.x));
    if (m.d == 1) factors.push_back("d");
    else if (m.d != 0) factors.push_back("d^" + std::to_string(m.d));
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }
  return out;
}

}  // namespace qb::weyl
