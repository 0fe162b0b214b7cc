// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qb/config.hpp"

namespace qb {

using Index = std::uint64_t;
using Coords = std::vector<std::uint64_t>;

inline constexpr std::uint64_t kSizeOverflow = std::uint64_t{1} << 62;

/// A finite abelian group presented as Z/d_0 + ... + Z/d_{r-1}.
///
/// Elements are coordinate vectors; carrier indices are the mixed-radix
/// encoding with the first coordinate most significant, so enumeration
/// order is lexicographic in the coordinates.
class Layout {
 public:
  Layout() = default;
  explicit Layout(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {
    size_ = 1;
    for (auto d : orders_) {
      if (d < 2) throw PreconditionError("layout coordinate order must be >= 2");
      if (size_ > kSizeOverflow / d) {
        size_ = kSizeOverflow;
      } else {
        size_ *= d;
      }
    }
  }

  static Layout concat(const Layout& a, const Layout& b) {
    auto o = a.orders_;
    o.insert(o.end(), b.orders_.begin(), b.orders_.end());
    return Layout(std::move(o));
  }

  const std::vector<std::uint64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  /// Carrier size, saturated at kSizeOverflow.
  std::uint64_t size() const { return size_; }
  bool enumerable(std::uint64_t cap) const { return size_ <= cap; }

  std::uint64_t exponent() const {
    std::uint64_t e = 1;
    for (auto d : orders_) e = std::lcm(e, d);
    return e;
  }

  Coords zero() const { return Coords(orders_.size(), 0); }

  Coords unit(std::size_t i) const {
    auto c = zero();
    c[i] = 1;
    return c;
  }

  Coords add(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const {
    Coords r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % orders_[i];
    return r;
  }

  Coords neg(std::span<const std::uint64_t> a) const {
    Coords r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (orders_[i] - a[i]) % orders_[i];
    return r;
  }

  Coords scale(std::span<const std::uint64_t> a, std::int64_t k) const {
    Coords r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto d = static_cast<std::int64_t>(orders_[i]);
      auto km = ((k % d) + d) % d;
      r[i] = static_cast<std::uint64_t>((static_cast<__int128>(km) * a[i]) % d);
    }
    return r;
  }

  /// Reduce an arbitrary integer vector into canonical coordinates.
  Coords reduce(std::span<const std::uint64_t> a) const {
    Coords r(orders_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] % orders_[i];
    return r;
  }

  bool is_zero(std::span<const std::uint64_t> a) const {
    for (auto v : a)
      if (v != 0) return false;
    return true;
  }

  Index encode(std::span<const std::uint64_t> c) const {
    Index idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + c[i];
    return idx;
  }

  Coords decode(Index idx) const {
    Coords c(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
      c[i] = idx % orders_[i];
      idx /= orders_[i];
    }
    return c;
  }

  /// Additive order of an element.
  std::uint64_t order_of(std::span<const std::uint64_t> a) const {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (a[i] == 0) continue;
      ord = std::lcm(ord, orders_[i] / std::gcd(orders_[i], a[i]));
    }
    return ord;
  }

  friend bool operator==(const Layout& a, const Layout& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<std::uint64_t> orders_;
  std::uint64_t size_ = 1;
};

/// Additive map between coordinate spaces, stored as the images of the
/// source unit vectors.
struct LinearMap {
  std::vector<Coords> images;

  Coords apply(const Layout& dst, std::span<const std::uint64_t> v) const {
    auto r = dst.zero();
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (v[i] == 0) continue;
      r = dst.add(r, dst.scale(images[i], static_cast<std::int64_t>(v[i])));
    }
    return r;
  }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;
  friend auto operator<=>(const LinearMap&, const LinearMap&) = default;
};

inline LinearMap linear_map_from(const Layout& src, auto&& fn) {
  LinearMap m;
  m.images.reserve(src.rank());
  for (std::size_t i = 0; i < src.rank(); ++i) m.images.push_back(fn(src.unit(i)));
  return m;
}

}  // namespace qb
