// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qb/config.hpp"
#include "qb/finite_ring.hpp"

namespace qb {

enum class Side { left, right, two_sided };

inline std::string to_string(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two-sided";
  }
  return "?";
}

/// A finitely generated ideal of a finite ring together with its closed
/// element set (sorted carrier indices).
struct IdealHandle {
  Side side = Side::two_sided;
  std::vector<Element> generators;
  std::vector<Element> elements;

  bool contains(Element a) const { return std::binary_search(elements.begin(), elements.end(), a); }
  std::size_t size() const { return elements.size(); }
  bool is_zero() const { return elements.size() == 1; }
};

/// Closure of `seeds` under addition inside a carrier of size `n`, given the
/// group's add operation. Returns membership flags; `basis` collects the
/// elements that actually enlarged the subgroup.
template <class Add>
void extend_subgroup(std::vector<char>& member, std::vector<Element>& members, Element g, Add add,
                     std::vector<Element>* basis = nullptr) {
  if (member[g]) return;
  if (basis) basis->push_back(g);
  // subgroup + <g> is the union of cosets subgroup + k*g
  std::vector<Element> base = members;
  Element step = g;
  while (!member[step]) {
    for (auto h : base) {
      auto x = add(h, step);
      if (!member[x]) {
        member[x] = 1;
        members.push_back(x);
      }
    }
    step = add(step, g);
  }
}

/// Smallest ideal of the given sidedness containing `gens`.
inline IdealHandle ideal_closure(const FiniteRing& ring, std::span<const Element> gens, Side side,
                                 std::uint64_t cap = 4096) {
  if (ring.size() > cap) throw CapExceeded("ring too large for ideal closure: " + ring.descriptor());
  for (auto g : gens)
    if (!ring.contains(g)) throw PreconditionError("ideal generator outside the carrier");
  std::vector<char> member(ring.size(), 0);
  std::vector<Element> members{ring.zero()};
  member[ring.zero()] = 1;
  std::vector<Element> queue;
  auto add = [&](Element a, Element b) { return ring.add(a, b); };
  for (auto g : gens) extend_subgroup(member, members, g, add, &queue);
  const auto mult = ring.additive_generators();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto x = queue[q];
    for (auto r : mult) {
      if (side != Side::right) extend_subgroup(member, members, ring.mul(r, x), add, &queue);
      if (side != Side::left) extend_subgroup(member, members, ring.mul(x, r), add, &queue);
    }
  }
  IdealHandle h;
  h.side = side;
  h.generators.assign(gens.begin(), gens.end());
  std::sort(members.begin(), members.end());
  h.elements = std::move(members);
  return h;
}

/// True iff `elements` is an additive subgroup closed under the side's
/// multiplications (exhaustive).
inline bool is_ideal(const FiniteRing& ring, const std::vector<Element>& elements, Side side) {
  auto in = [&](Element a) { return std::binary_search(elements.begin(), elements.end(), a); };
  if (!in(ring.zero())) return false;
  for (auto a : elements) {
    if (!in(ring.neg(a))) return false;
    for (auto b : elements)
      if (!in(ring.add(a, b))) return false;
    for (Element r = 0; r < ring.size(); ++r) {
      if (side != Side::right && !in(ring.mul(r, a))) return false;
      if (side != Side::left && !in(ring.mul(a, r))) return false;
    }
  }
  return true;
}

/// All ideals of the given sidedness, ordered by size then by element list.
///
/// Principal ideals are closed under pairwise sums to a fixed point; every
/// ideal of a finite ring is a finite sum of principal ones.
inline std::vector<IdealHandle> enumerate_ideals(const FiniteRing& ring, Side side, const Config& cfg = {}) {
  if (ring.size() > cfg.cap)
    throw CapExceeded("ring " + ring.descriptor() + " has " + std::to_string(ring.size()) +
                      " elements, above the exhaustive cap " + std::to_string(cfg.cap) +
                      "; use a structural (witness-mode) check instead");
  std::set<std::vector<Element>> seen;
  std::vector<IdealHandle> ideals;
  auto admit = [&](IdealHandle h) {
    if (!seen.insert(h.elements).second) return false;
    if (ideals.size() >= cfg.ideal_count_cap)
      throw CapExceeded("more than " + std::to_string(cfg.ideal_count_cap) + " " + to_string(side) + " ideals");
    ideals.push_back(std::move(h));
    return true;
  };
  for (Element a = 0; a < ring.size(); ++a) {
    Element g[] = {a};
    admit(ideal_closure(ring, g, side, cfg.cap));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const auto count = ideals.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        auto gens = ideals[i].generators;
        gens.insert(gens.end(), ideals[j].generators.begin(), ideals[j].generators.end());
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        grew |= admit(ideal_closure(ring, gens, side, cfg.cap));
      }
  }
  std::sort(ideals.begin(), ideals.end(), [](const IdealHandle& a, const IdealHandle& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return ideals;
}

}  // namespace qb
