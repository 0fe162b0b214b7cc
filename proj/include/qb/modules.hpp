// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qb/config.hpp"
#include "qb/ideals.hpp"
#include "qb/layout.hpp"
#include "qb/linear.hpp"

namespace qb {

/// A finite module presented by its additive group and the action of a
/// family of operators (one per additive generator of the acting ring).
/// A map between two such modules over the same operator family is
/// module-linear iff it is additive and commutes with every operator.
struct OperatorModule {
  Layout layout;
  std::vector<LinearMap> operators;

  Coords act(std::size_t k, const Coords& v) const { return operators[k].apply(layout, v); }
};

/// Additive subgroup closed under all operators; elements are sorted carrier indices.
struct Submodule {
  std::vector<Coords> generators;
  std::vector<Index> elements;

  bool contains(Index i) const { return std::binary_search(elements.begin(), elements.end(), i); }
  std::size_t size() const { return elements.size(); }
};

/// Additive span of `gens` inside `layout` (sorted carrier indices).
inline std::vector<Index> additive_span(const Layout& layout, const std::vector<Coords>& gens, std::uint64_t cap) {
  if (layout.size() > cap) throw CapExceeded("module carrier exceeds cap " + std::to_string(cap));
  std::vector<char> member(layout.size(), 0);
  std::vector<Index> members{0};
  member[0] = 1;
  auto add = [&](Index a, Index b) { return layout.encode(layout.add(layout.decode(a), layout.decode(b))); };
  for (const auto& g : gens) extend_subgroup(member, members, layout.encode(layout.reduce(g)), add);
  std::sort(members.begin(), members.end());
  return members;
}

/// Smallest submodule containing `gens`.
inline Submodule submodule_closure(const OperatorModule& m, std::vector<Coords> gens, std::uint64_t cap) {
  if (m.layout.size() > cap) throw CapExceeded("module carrier exceeds cap " + std::to_string(cap));
  const auto& L = m.layout;
  std::vector<char> member(L.size(), 0);
  std::vector<Index> members{0};
  member[0] = 1;
  auto add = [&](Index a, Index b) { return L.encode(L.add(L.decode(a), L.decode(b))); };
  std::vector<Index> queue;
  for (const auto& g : gens) extend_subgroup(member, members, L.encode(L.reduce(g)), add, &queue);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto v = L.decode(queue[q]);
    for (std::size_t k = 0; k < m.operators.size(); ++k) extend_subgroup(member, members, L.encode(m.act(k, v)), add, &queue);
  }
  Submodule s;
  s.generators = std::move(gens);
  std::sort(members.begin(), members.end());
  s.elements = std::move(members);
  return s;
}

inline bool is_submodule(const OperatorModule& m, const std::vector<Index>& elements) {
  const auto& L = m.layout;
  auto in = [&](Index i) { return std::binary_search(elements.begin(), elements.end(), i); };
  if (!in(0)) return false;
  for (auto a : elements) {
    auto va = L.decode(a);
    for (std::size_t k = 0; k < m.operators.size(); ++k)
      if (!in(L.encode(m.act(k, va)))) return false;
    for (auto b : elements)
      if (!in(L.encode(L.add(va, L.decode(b))))) return false;
  }
  return true;
}

/// Result of a hom computation: every map as images of the source unit vectors.
struct HomSet {
  std::vector<LinearMap> maps;
  LinearSolution solution;  // raw solver output in parameter space
};

/// Solve for module maps src -> dst whose image lies in the subgroup of dst
/// spanned by `target` (all of dst when `target` lists its unit vectors),
/// optionally subject to prescribed values f(v) = w.
///
/// Unknowns c[i][l] give f(e_i) = sum_l c[i][l] * target[l]. Each equation
/// modulo a coordinate order d_t is lifted to the exponent e by the factor
/// e/d_t, so the whole system lives over Z/e.
inline HomSet solve_homs(const OperatorModule& src, const OperatorModule& dst, const std::vector<Coords>& target,
                         const std::vector<std::pair<Coords, Coords>>& fixed, std::uint64_t cap) {
  if (src.operators.size() != dst.operators.size())
    throw PreconditionError("modules are not over the same operator family");
  const auto& S = src.layout;
  const auto& D = dst.layout;
  const std::size_t rs = S.rank(), rd = D.rank(), nt = target.size();
  std::uint64_t e = std::lcm(S.exponent(), D.exponent());
  HomSet out;
  if (rs == 0 || rd == 0 || nt == 0) {
    // the only candidate is the zero map; it must still satisfy the fixed values
    bool ok = std::all_of(fixed.begin(), fixed.end(), [&](const auto& fv) { return D.is_zero(D.reduce(fv.second)); });
    if (ok) out.maps.push_back(LinearMap{std::vector<Coords>(rs, D.zero())});
    out.solution.consistent = ok;
    return out;
  }
  if (e < 2) e = 2;
  const std::size_t nu = rs * nt;
  auto var = [nt](std::size_t i, std::size_t l) { return i * nt + l; };

  LinearSystem sys;
  sys.modulus = e;
  sys.unknowns = nu;
  auto push = [&](Row coeffs, std::uint64_t rhs, std::uint64_t dt) {
    const auto lift = e / dt;
    for (auto& c : coeffs) c = mulmod(c % dt, lift, e);
    sys.coefficients.push_back(std::move(coeffs));
    sys.rhs.push_back(mulmod(rhs % dt, lift, e));
  };

  for (std::size_t i = 0; i < rs; ++i) {
    const auto di = S.orders()[i];
    for (std::size_t t = 0; t < rd; ++t) {
      const auto dt = D.orders()[t];
      Row eq(nu, 0);
      for (std::size_t l = 0; l < nt; ++l) eq[var(i, l)] = mulmod(di % dt, target[l][t], dt);
      push(std::move(eq), 0, dt);
    }
  }
  for (std::size_t k = 0; k < src.operators.size(); ++k) {
    for (std::size_t i = 0; i < rs; ++i) {
      const auto w = src.act(k, S.unit(i));
      for (std::size_t t = 0; t < rd; ++t) {
        const auto dt = D.orders()[t];
        Row eq(nu, 0);
        for (std::size_t j = 0; j < rs; ++j) {
          if (w[j] == 0) continue;
          for (std::size_t l = 0; l < nt; ++l)
            eq[var(j, l)] = (eq[var(j, l)] + mulmod(w[j] % dt, target[l][t], dt)) % dt;
        }
        for (std::size_t l = 0; l < nt; ++l) {
          std::uint64_t acc = 0;
          for (std::size_t tp = 0; tp < rd; ++tp)
            acc = (acc + mulmod(target[l][tp], dst.operators[k].images[tp][t], dt)) % dt;
          eq[var(i, l)] = (eq[var(i, l)] + dt - acc) % dt;
        }
        push(std::move(eq), 0, dt);
      }
    }
  }
  for (const auto& [v, w] : fixed) {
    for (std::size_t t = 0; t < rd; ++t) {
      const auto dt = D.orders()[t];
      Row eq(nu, 0);
      for (std::size_t j = 0; j < rs; ++j)
        for (std::size_t l = 0; l < nt; ++l)
          eq[var(j, l)] = (eq[var(j, l)] + mulmod(v[j] % dt, target[l][t], dt)) % dt;
      push(std::move(eq), w[t], dt);
    }
  }

  out.solution = solve_linear(sys);
  auto to_map = [&](const Row& c) {
    LinearMap f;
    f.images.resize(rs);
    for (std::size_t i = 0; i < rs; ++i) {
      Coords img(rd, 0);
      for (std::size_t t = 0; t < rd; ++t) {
        const auto dt = D.orders()[t];
        std::uint64_t acc = 0;
        for (std::size_t l = 0; l < nt; ++l) acc = (acc + mulmod(c[var(i, l)] % dt, target[l][t], dt)) % dt;
        img[t] = acc;
      }
      f.images[i] = std::move(img);
    }
    return f;
  };
  // Enumerate distinct maps: closure of particular + span(homogeneous) in map space.
  if (!out.solution.consistent) return out;
  std::set<LinearMap> seen;
  std::vector<LinearMap> frontier{to_map(out.solution.particular)};
  seen.insert(frontier.front());
  std::vector<LinearMap> steps;
  for (const auto& h : out.solution.homogeneous) steps.push_back(to_map(h));
  auto add_maps = [&](const LinearMap& a, const LinearMap& b) {
    LinearMap r;
    r.images.resize(rs);
    for (std::size_t i = 0; i < rs; ++i) r.images[i] = D.add(a.images[i], b.images[i]);
    return r;
  };
  while (!frontier.empty()) {
    auto cur = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& s : steps) {
      auto nxt = add_maps(cur, s);
      if (seen.insert(nxt).second) {
        if (seen.size() > cap) throw CapExceeded("hom set exceeds cap " + std::to_string(cap));
        frontier.push_back(std::move(nxt));
      }
    }
  }
  out.maps.assign(seen.begin(), seen.end());
  return out;
}

inline std::vector<Coords> unit_vectors(const Layout& l) {
  std::vector<Coords> u;
  for (std::size_t i = 0; i < l.rank(); ++i) u.push_back(l.unit(i));
  return u;
}

/// All module maps src -> dst, via the linear solver.
inline std::vector<LinearMap> module_homs(const OperatorModule& src, const OperatorModule& dst, std::uint64_t cap = 4096) {
  return solve_homs(src, dst, unit_vectors(dst.layout), {}, cap).maps;
}

/// All module maps src -> dst by exhaustive search over additive maps, or
/// nullopt when the candidate count exceeds `limit`.
inline std::optional<std::vector<LinearMap>> module_homs_exhaustive(const OperatorModule& src, const OperatorModule& dst,
                                                                    std::uint64_t limit = 4096) {
  const auto& S = src.layout;
  const auto& D = dst.layout;
  if (D.size() > limit) return std::nullopt;
  // admissible images per generator: elements whose order divides d_i
  std::vector<std::vector<Coords>> choices(S.rank());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < S.rank(); ++i) {
    for (Index x = 0; x < D.size(); ++x) {
      auto c = D.decode(x);
      if (S.orders()[i] % D.order_of(c) == 0) choices[i].push_back(std::move(c));
    }
    total *= choices[i].size();
    if (total > limit) return std::nullopt;
  }
  std::vector<LinearMap> out;
  std::vector<std::size_t> pick(S.rank(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    LinearMap f;
    for (std::size_t i = 0; i < S.rank(); ++i) f.images.push_back(choices[i][pick[i]]);
    bool ok = true;
    for (std::size_t k = 0; k < src.operators.size() && ok; ++k)
      for (std::size_t i = 0; i < S.rank() && ok; ++i)
        ok = f.apply(D, src.act(k, S.unit(i))) == dst.act(k, f.images[i]);
    if (ok) out.push_back(std::move(f));
    for (std::size_t i = S.rank(); i-- > 0;) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of candidate additive maps src -> dst the exhaustive oracle would scan.
inline std::uint64_t additive_candidate_count(const Layout& S, const Layout& D, std::uint64_t saturate = kSizeOverflow) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < S.rank(); ++i) {
    std::uint64_t cnt = 0;
    if (D.size() > saturate) return saturate;
    for (Index x = 0; x < D.size(); ++x)
      if (S.orders()[i] % D.order_of(D.decode(x)) == 0) ++cnt;
    if (cnt && total > saturate / cnt) return saturate;
    total *= cnt;
  }
  return total;
}

/// An R-linear retraction pi: M -> K with pi|_K = id, if K is a direct summand.
inline std::optional<LinearMap> is_direct_summand(const OperatorModule& m, const Submodule& k, std::uint64_t cap = 4096) {
  if (!is_submodule(m, k.elements)) throw PreconditionError("submodule is not stable under the module action");
  // a small additive generating set of K keeps the system compact
  std::vector<Coords> basis;
  {
    std::vector<char> member(m.layout.size(), 0);
    std::vector<Index> members{0};
    member[0] = 1;
    std::vector<Index> added;
    auto add = [&](Index a, Index b) { return m.layout.encode(m.layout.add(m.layout.decode(a), m.layout.decode(b))); };
    for (auto idx : k.elements) extend_subgroup(member, members, idx, add, &added);
    for (auto idx : added) basis.push_back(m.layout.decode(idx));
  }
  std::vector<std::pair<Coords, Coords>> fixed;
  for (const auto& b : basis) fixed.emplace_back(b, b);
  auto homs = solve_homs(m, m, basis.empty() ? std::vector<Coords>{} : basis, fixed, cap);
  if (homs.maps.empty()) return std::nullopt;
  return homs.maps.front();
}

}  // namespace qb
