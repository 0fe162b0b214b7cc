// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qb/config.hpp"
#include "qb/scalar.hpp"

namespace qb {

using Row = std::vector<std::uint64_t>;
using Matrix = std::vector<Row>;

/// A x = b over Z/modulus.
struct LinearSystem {
  std::uint64_t modulus = 2;
  Matrix coefficients;                // one row per equation
  std::vector<std::uint64_t> rhs;     // empty means homogeneous
  std::size_t unknowns = 0;
  std::vector<std::string> labels;    // optional, one per unknown
};

struct LinearSolution {
  bool consistent = false;
  Row particular;
  Matrix homogeneous;  // generators of the solution module of A x = 0
};

namespace detail {

inline std::tuple<std::int64_t, std::int64_t, std::int64_t> xgcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    auto q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

inline std::uint64_t reduce_signed(__int128 v, std::uint64_t n) {
  auto m = static_cast<__int128>(n);
  return static_cast<std::uint64_t>(((v % m) + m) % m);
}

// row_a <- s*row_a + t*row_b ; row_b <- u*row_a + v*row_b (simultaneously)
inline void combine(Row& ra, Row& rb, std::int64_t s, std::int64_t t, std::int64_t u, std::int64_t v,
                    std::uint64_t n) {
  for (std::size_t j = 0; j < ra.size(); ++j) {
    __int128 a = ra[j], b = rb[j];
    ra[j] = reduce_signed(s * a + t * b, n);
    rb[j] = reduce_signed(u * a + v * b, n);
  }
}

// Unit w with w*a == gcd(a, n) (mod n).
inline std::uint64_t normalizing_unit(std::uint64_t a, std::uint64_t n) {
  auto g = std::gcd(a, n);
  auto ng = n / g;
  auto [gg, inv, unused] = xgcd(static_cast<std::int64_t>((a / g) % ng), static_cast<std::int64_t>(ng));
  (void)gg;
  (void)unused;
  auto w = reduce_signed(inv, ng);
  while (std::gcd(w, n) != 1) w += ng;
  return w % n;
}

}  // namespace detail

/// Howell normal form of the row span of `rows` over Z/n.
///
/// Rows are returned in echelon order with pivots normalized to divisors
/// of n, entries above each pivot reduced below it, and zero rows removed.
/// The Howell property holds: for every k, the rows whose first k entries
/// vanish span the subgroup of the row span with that property.
inline Matrix howell_form(Matrix rows, std::size_t ncols, std::uint64_t n) {
  for (auto& r : rows) {
    r.resize(ncols, 0);
    for (auto& v : r) v %= n;
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols; ++col) {
    if (pivot_row >= rows.size()) break;
    for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (rows[pivot_row][col] == 0) {
        std::swap(rows[pivot_row], rows[i]);
        continue;
      }
      auto a = static_cast<std::int64_t>(rows[pivot_row][col]);
      auto b = static_cast<std::int64_t>(rows[i][col]);
      auto [g, s, t] = detail::xgcd(a, b);
      detail::combine(rows[pivot_row], rows[i], s, t, -(b / g), a / g, n);
    }
    auto p = rows[pivot_row][col];
    if (p == 0) continue;
    auto w = detail::normalizing_unit(p, n);
    for (auto& v : rows[pivot_row]) v = mulmod(v, w, n);
    p = rows[pivot_row][col];
    for (std::size_t i = 0; i < pivot_row; ++i) {
      auto q = rows[i][col] / p;
      if (q == 0) continue;
      for (std::size_t j = 0; j < ncols; ++j)
        rows[i][j] = detail::reduce_signed(static_cast<__int128>(rows[i][j]) -
                                               static_cast<__int128>(q) * rows[pivot_row][j],
                                           n);
    }
    if (p != 1) {
      Row ann(ncols);
      auto k = n / p;
      for (std::size_t j = 0; j < ncols; ++j) ann[j] = mulmod(rows[pivot_row][j], k, n);
      if (std::any_of(ann.begin(), ann.end(), [](auto v) { return v != 0; })) rows.push_back(std::move(ann));
    }
    ++pivot_row;
  }
  rows.resize(std::min(rows.size(), pivot_row));
  std::erase_if(rows, [](const Row& r) { return std::all_of(r.begin(), r.end(), [](auto v) { return v == 0; }); });
  return rows;
}

/// Solve A x = b over Z/n via the Howell form of the augmented lattice
/// { (A x - c b, c, x) }.
inline LinearSolution solve_linear(const LinearSystem& sys) {
  const auto n = sys.modulus;
  if (n < 2) throw PreconditionError("linear system modulus must be >= 2");
  const std::size_t m = sys.coefficients.size();
  const std::size_t v = sys.unknowns;
  for (const auto& row : sys.coefficients)
    if (row.size() != v) throw PreconditionError("coefficient row length does not match unknown count");
  if (!sys.rhs.empty() && sys.rhs.size() != m) throw PreconditionError("rhs length does not match equation count");

  const std::size_t ncols = m + 1 + v;
  Matrix rows;
  rows.reserve(v + 1);
  for (std::size_t j = 0; j < v; ++j) {
    Row r(ncols, 0);
    for (std::size_t i = 0; i < m; ++i) r[i] = sys.coefficients[i][j] % n;
    r[m + 1 + j] = 1;
    rows.push_back(std::move(r));
  }
  {
    Row r(ncols, 0);
    for (std::size_t i = 0; i < m && !sys.rhs.empty(); ++i) r[i] = (n - sys.rhs[i] % n) % n;
    r[m] = 1;
    rows.push_back(std::move(r));
  }
  auto h = howell_form(std::move(rows), ncols, n);

  LinearSolution sol;
  for (const auto& r : h) {
    auto lead = std::find_if(r.begin(), r.end(), [](auto x) { return x != 0; }) - r.begin();
    if (static_cast<std::size_t>(lead) < m) continue;
    Row x(r.begin() + static_cast<std::ptrdiff_t>(m + 1), r.end());
    if (static_cast<std::size_t>(lead) == m) {
      if (r[m] == 1) {
        sol.consistent = true;
        sol.particular = std::move(x);
      }
    } else {
      sol.homogeneous.push_back(std::move(x));
    }
  }
  if (!sol.consistent) sol.particular.clear();
  return sol;
}

/// All solutions described by `sol`, reduced coordinatewise by `reducer`.
/// `reducer` maps a raw Z/n vector to a canonical representative; the
/// closure is taken over canonical forms.
template <class Reducer>
std::set<Row> enumerate_solutions(const LinearSolution& sol, std::uint64_t n, std::uint64_t cap, Reducer reducer) {
  std::set<Row> out;
  if (!sol.consistent) return out;
  auto add = [n](const Row& a, const Row& b) {
    Row r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % n;
    return r;
  };
  std::vector<Row> frontier{reducer(sol.particular)};
  out.insert(frontier.front());
  while (!frontier.empty()) {
    auto cur = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : sol.homogeneous) {
      auto nxt = reducer(add(cur, g));
      if (out.insert(nxt).second) {
        if (out.size() > cap) throw CapExceeded("solution set exceeds cap " + std::to_string(cap));
        frontier.push_back(std::move(nxt));
      }
    }
  }
  return out;
}

inline std::set<Row> enumerate_solutions(const LinearSolution& sol, std::uint64_t n, std::uint64_t cap) {
  return enumerate_solutions(sol, n, cap, [](const Row& r) { return r; });
}

}  // namespace qb
