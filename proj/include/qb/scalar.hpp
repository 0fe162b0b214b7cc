// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <variant>

#include "qb/config.hpp"

namespace qb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced fraction num/den with positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

/// Element of Z/n stored in [0, n).
class Residue {
 public:
  Residue(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw PreconditionError("residue modulus must be >= 2");
    auto m = static_cast<std::int64_t>(modulus);
    value_ = static_cast<std::uint64_t>(((value % m) + m) % m);
  }

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  friend Residue operator+(const Residue& a, const Residue& b) {
    check(a, b);
    return Residue::raw((a.value_ + b.value_) % a.modulus_, a.modulus_);
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    check(a, b);
    return Residue::raw((a.value_ + a.modulus_ - b.value_) % a.modulus_, a.modulus_);
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    check(a, b);
    return Residue::raw(mulmod(a.value_, b.value_, a.modulus_), a.modulus_);
  }
  Residue operator-() const { return Residue::raw((modulus_ - value_) % modulus_, modulus_); }
  friend bool operator==(const Residue&, const Residue&) = default;

  std::string str() const { return std::to_string(value_) + " mod " + std::to_string(modulus_); }

 private:
  static Residue raw(std::uint64_t v, std::uint64_t n) {
    Residue r(0, n);
    r.value_ = v;
    return r;
  }
  static void check(const Residue& a, const Residue& b) {
    if (a.modulus_ != b.modulus_) throw PreconditionError("residue moduli differ");
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 2;
};

/// Exact scalar: integer, rational, or residue.
class Scalar {
 public:
  enum class Kind { integer, rational, residue };

  Scalar(Integer v) : value_(std::move(v)) {}
  Scalar(Rational v) : value_(canonical(std::move(v))) {}
  Scalar(Residue v) : value_(v) {}

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  const auto& value() const { return value_; }

  std::string str() const {
    return std::visit(
        [](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Residue>) {
            return v.str();
          } else {
            return v.get_str();
          }
        },
        value_);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  static Rational canonical(Rational q) {
    q.canonicalize();
    return q;
  }
  std::variant<Integer, Rational, Residue> value_;
};

}  // namespace qb
