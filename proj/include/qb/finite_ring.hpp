// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qb/config.hpp"
#include "qb/layout.hpp"
#include "qb/scalar.hpp"

namespace qb {

using Element = Index;

/// Finite ring given by a structural descriptor: Zmod(n) or MatRing(k, base).
///
/// Elements are carrier indices. For Zmod(n) the index is the residue; for
/// MatRing(k, base) it is the row-major mixed-radix encoding of the k*k
/// base entries, entry (0,0) most significant.
class FiniteRing {
 public:
  static FiniteRing zmod(std::uint64_t n) {
    if (n < 2) throw PreconditionError("Zmod modulus must be >= 2");
    FiniteRing r;
    r.n_ = n;
    r.layout_ = Layout({n});
    r.build_tables();
    return r;
  }

  static FiniteRing matrix(unsigned k, const FiniteRing& base) {
    if (k < 1) throw PreconditionError("MatRing dimension must be >= 1");
    FiniteRing r;
    r.k_ = k;
    r.base_ = std::make_shared<const FiniteRing>(base);
    auto layout = Layout();
    for (unsigned i = 0; i < k * k; ++i) layout = Layout::concat(layout, base.layout());
    r.layout_ = std::move(layout);
    if (r.layout_.size() >= kSizeOverflow) throw CapExceeded("MatRing carrier too large to index");
    r.build_tables();
    return r;
  }

  bool is_zmod() const { return k_ == 0; }
  std::uint64_t modulus() const { return n_; }
  unsigned dimension() const { return k_; }
  const FiniteRing& base() const { return *base_; }

  std::string descriptor() const {
    if (is_zmod()) return "Zmod(" + std::to_string(n_) + ")";
    return "MatRing(" + std::to_string(k_) + ", " + base_->descriptor() + ")";
  }

  const Layout& layout() const { return layout_; }
  std::uint64_t size() const { return layout_.size(); }

  Element zero() const { return 0; }
  Element one() const { return one_; }

  bool contains(Element a) const { return a < size(); }

  Element add(Element a, Element b) const {
    if (add_table_) return (*add_table_)[a * size() + b];
    return layout_.encode(layout_.add(layout_.decode(a), layout_.decode(b)));
  }
  Element neg(Element a) const { return layout_.encode(layout_.neg(layout_.decode(a))); }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (mul_table_) return (*mul_table_)[a * size() + b];
    return mul_structural(a, b);
  }

  /// Z-multiple k*a.
  Element times(Element a, std::int64_t k) const { return layout_.encode(layout_.scale(layout_.decode(a), k)); }

  /// Unit coordinate vectors; they generate the additive group.
  std::vector<Element> additive_generators() const {
    std::vector<Element> g;
    for (std::size_t i = 0; i < layout_.rank(); ++i) g.push_back(layout_.encode(layout_.unit(i)));
    return g;
  }

  std::string format(Element a) const {
    if (is_zmod()) return std::to_string(a);
    auto entries = split(a);
    std::string s = "[";
    for (unsigned r = 0; r < k_; ++r) {
      s += r ? ",[" : "[";
      for (unsigned c = 0; c < k_; ++c) {
        if (c) s += ",";
        s += base_->format(entries[r * k_ + c]);
      }
      s += "]";
    }
    return s + "]";
  }

  /// Split a matrix element into its k*k base entries (row-major).
  std::vector<Element> split(Element a) const {
    std::vector<Element> e(static_cast<std::size_t>(k_) * k_);
    auto bs = base_->size();
    for (std::size_t i = e.size(); i-- > 0;) {
      e[i] = a % bs;
      a /= bs;
    }
    return e;
  }

  Element join(const std::vector<Element>& entries) const {
    Element a = 0;
    for (auto e : entries) a = a * base_->size() + e;
    return a;
  }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) { return a.descriptor() == b.descriptor(); }

 private:
  FiniteRing() = default;

  Element mul_structural(Element a, Element b) const {
    if (is_zmod()) return mulmod(a, b, n_);
    auto x = split(a), y = split(b);
    std::vector<Element> z(x.size(), base_->zero());
    for (unsigned r = 0; r < k_; ++r)
      for (unsigned c = 0; c < k_; ++c)
        for (unsigned m = 0; m < k_; ++m)
          z[r * k_ + c] = base_->add(z[r * k_ + c], base_->mul(x[r * k_ + m], y[m * k_ + c]));
    return join(z);
  }

  void build_tables() {
    if (is_zmod()) {
      one_ = 1 % n_;
    } else {
      std::vector<Element> id(static_cast<std::size_t>(k_) * k_, base_->zero());
      for (unsigned i = 0; i < k_; ++i) id[i * k_ + i] = base_->one();
      one_ = join(id);
    }
    constexpr std::uint64_t kTableLimit = 256;
    if (size() > kTableLimit) return;
    auto s = size();
    std::vector<Element> at(s * s), mt(s * s);
    for (Element a = 0; a < s; ++a)
      for (Element b = 0; b < s; ++b) {
        at[a * s + b] = layout_.encode(layout_.add(layout_.decode(a), layout_.decode(b)));
        mt[a * s + b] = mul_structural(a, b);
      }
    add_table_ = std::make_shared<const std::vector<Element>>(std::move(at));
    mul_table_ = std::make_shared<const std::vector<Element>>(std::move(mt));
  }

  std::uint64_t n_ = 0;
  unsigned k_ = 0;
  std::shared_ptr<const FiniteRing> base_;
  Layout layout_;
  Element one_ = 0;
  std::shared_ptr<const std::vector<Element>> add_table_;
  std::shared_ptr<const std::vector<Element>> mul_table_;
};

/// Anything with a finite carrier 0..size()-1 and ring operations on indices.
template <class R>
concept FiniteRingLike = requires(const R& r, Element a) {
  { r.size() } -> std::convertible_to<std::uint64_t>;
  { r.add(a, a) } -> std::convertible_to<Element>;
  { r.mul(a, a) } -> std::convertible_to<Element>;
  { r.neg(a) } -> std::convertible_to<Element>;
  { r.zero() } -> std::convertible_to<Element>;
  { r.one() } -> std::convertible_to<Element>;
};

struct AxiomReport {
  bool ok = true;
  std::string law;                       // first violated law
  std::array<Element, 3> witness{0, 0, 0};
};

/// Exhaustive check of the ring axioms on the full carrier.
template <FiniteRingLike R>
AxiomReport ring_axioms_check(const R& ring, std::uint64_t cap = 4096) {
  const auto n = static_cast<Element>(ring.size());
  if (n > cap) throw CapExceeded("too large for exhaustive check: carrier " + std::to_string(n) + " > cap " +
                                 std::to_string(cap));
  auto fail = [](std::string law, Element a, Element b, Element c) {
    return AxiomReport{false, std::move(law), {a, b, c}};
  };
  const auto z = ring.zero(), e = ring.one();
  for (Element a = 0; a < n; ++a) {
    if (ring.add(a, z) != a) return fail("additive identity", a, z, 0);
    if (ring.add(a, ring.neg(a)) != z) return fail("additive inverse", a, 0, 0);
    if (ring.mul(e, a) != a || ring.mul(a, e) != a) return fail("multiplicative unit", a, e, 0);
    for (Element b = 0; b < n; ++b) {
      if (ring.add(a, b) != ring.add(b, a)) return fail("additive commutativity", a, b, 0);
      for (Element c = 0; c < n; ++c) {
        if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) return fail("additive associativity", a, b, c);
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) return fail("associativity", a, b, c);
        if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)))
          return fail("left distributivity", a, b, c);
        if (ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)))
          return fail("right distributivity", a, b, c);
      }
    }
  }
  return {};
}

/// A finite S-S-bimodule over a finite ring: the regular bimodule S, or
/// Z/m over Z/n (m | n) with both actions through reduction mod m.
class FiniteBimodule {
 public:
  enum class Kind { regular, zmod_quotient };

  static FiniteBimodule regular(const FiniteRing& s) {
    FiniteBimodule b(s);
    b.kind_ = Kind::regular;
    b.layout_ = s.layout();
    return b;
  }

  static FiniteBimodule zmod_quotient(const FiniteRing& s, std::uint64_t m) {
    if (!s.is_zmod()) throw PreconditionError("ZmodBimodule requires a Zmod ring");
    if (m == 0 || s.modulus() % m != 0)
      throw PreconditionError("ZmodBimodule(" + s.descriptor() + ", " + std::to_string(m) +
                              "): m must divide the ring modulus");
    FiniteBimodule b(s);
    b.kind_ = Kind::zmod_quotient;
    b.m_ = m;
    b.layout_ = m == 1 ? Layout() : Layout({m});
    return b;
  }

  Kind kind() const { return kind_; }
  const FiniteRing& ring() const { return *ring_; }
  const Layout& layout() const { return layout_; }
  std::uint64_t size() const { return layout_.size(); }

  std::string descriptor() const {
    if (kind_ == Kind::regular) return "Regular(" + ring_->descriptor() + ")";
    return "ZmodBimodule(" + ring_->descriptor() + ", " + std::to_string(m_) + ")";
  }

  Element zero() const { return 0; }
  bool contains(Element a) const { return a < size(); }
  Element add(Element a, Element b) const {
    if (kind_ == Kind::regular) return ring_->add(a, b);
    return (a + b) % m_;
  }
  Element neg(Element a) const {
    if (kind_ == Kind::regular) return ring_->neg(a);
    return (m_ - a) % m_;
  }
  Element left(Element s, Element n) const {
    if (kind_ == Kind::regular) return ring_->mul(s, n);
    return mulmod(s % m_, n, m_);
  }
  Element right(Element n, Element s) const {
    if (kind_ == Kind::regular) return ring_->mul(n, s);
    return mulmod(n, s % m_, m_);
  }

  std::vector<Element> additive_generators() const {
    std::vector<Element> g;
    for (std::size_t i = 0; i < layout_.rank(); ++i) g.push_back(layout_.encode(layout_.unit(i)));
    return g;
  }

  std::string format(Element a) const {
    if (kind_ == Kind::regular) return ring_->format(a);
    return std::to_string(a);
  }

  friend bool operator==(const FiniteBimodule& a, const FiniteBimodule& b) {
    return a.descriptor() == b.descriptor();
  }

 private:
  explicit FiniteBimodule(const FiniteRing& s) : ring_(std::make_shared<const FiniteRing>(s)) {}

  std::shared_ptr<const FiniteRing> ring_;
  Kind kind_ = Kind::regular;
  std::uint64_t m_ = 0;
  Layout layout_;
};

/// Exhaustive check of the bimodule laws. Witness order: (s, n, s').
inline AxiomReport bimodule_axioms_check(const FiniteBimodule& bm, std::uint64_t cap = 4096) {
  const auto& s = bm.ring();
  if (s.size() > cap || bm.size() > cap) throw CapExceeded("too large for exhaustive check");
  auto fail = [](std::string law, Element a, Element b, Element c) {
    return AxiomReport{false, std::move(law), {a, b, c}};
  };
  for (Element n = 0; n < bm.size(); ++n) {
    if (bm.left(s.one(), n) != n || bm.right(n, s.one()) != n) return fail("unit action", s.one(), n, s.one());
    for (Element a = 0; a < s.size(); ++a) {
      for (Element n2 = 0; n2 < bm.size(); ++n2) {
        if (bm.left(a, bm.add(n, n2)) != bm.add(bm.left(a, n), bm.left(a, n2)))
          return fail("left action additivity", a, n, n2);
        if (bm.right(bm.add(n, n2), a) != bm.add(bm.right(n, a), bm.right(n2, a)))
          return fail("right action additivity", a, n, n2);
      }
      for (Element b = 0; b < s.size(); ++b) {
        if (bm.right(bm.left(a, n), b) != bm.left(a, bm.right(n, b))) return fail("bimodule associativity", a, n, b);
        if (bm.left(s.mul(a, b), n) != bm.left(a, bm.left(b, n))) return fail("left module law", a, n, b);
        if (bm.right(n, s.mul(a, b)) != bm.right(bm.right(n, a), b)) return fail("right module law", a, n, b);
        if (bm.left(s.add(a, b), n) != bm.add(bm.left(a, n), bm.left(b, n)))
          return fail("left distributivity", a, n, b);
        if (bm.right(n, s.add(a, b)) != bm.add(bm.right(n, a), bm.right(n, b)))
          return fail("right distributivity", a, n, b);
      }
    }
  }
  return {};
}

}  // namespace qb
