// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include <random>

#include "qb/smash.hpp"

using namespace qb;

namespace {

FiniteMorita z4z2() {
  auto z4 = FiniteRing::zmod(4);
  return FiniteMorita(z4, FiniteBimodule::zmod_quotient(z4, 2));
}
FiniteMorita f2f2() {
  auto f2 = FiniteRing::zmod(2);
  return FiniteMorita(f2, FiniteBimodule::regular(f2));
}
GradedAlgebra ext(const FiniteMorita& c) { return trivial_extension(c.ring(), c.bimodule()); }

Index pair(const GradedAlgebra& a, Index s, Index n) { return a.join({s, n}); }

std::vector<GradedAlgebra> algebras() {
  auto z = z4z2(), f = f2f2();
  return {ext(f), ext(z), group_algebra(3, 3), group_algebra(2, 2)};
}

}  // namespace

TEST(Group, CyclicTables) {
  auto g = FiniteGroup::cyclic(5);
  EXPECT_FALSE(g.axioms_violation());
  EXPECT_EQ(g.mul(3, 4), 2u);
  EXPECT_EQ(g.inv(2), 3u);
  EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}, 0, "bad"), PreconditionError);
}

TEST(TrivialExtension, Products) {
  auto a = ext(z4z2());
  EXPECT_EQ(a.size(), 8u);
  EXPECT_EQ(a.mul(pair(a, 2, 1), pair(a, 3, 1)), pair(a, 2, 1));
  EXPECT_EQ(a.mul(pair(a, 0, 1), pair(a, 0, 1)), a.zero());
  for (Index b = 0; b < a.size(); ++b) EXPECT_EQ(a.mul(a.one(), b), b);
  EXPECT_TRUE(a.grading_respected());
  for (const auto& g : algebras()) EXPECT_TRUE(g.grading_respected()) << g.descriptor();
}

TEST(DualAction, Indicators) {
  auto a = ext(z4z2());
  const auto& G = a.group();
  auto b = pair(a, 3, 1);
  EXPECT_EQ(dual_action(a, DualFunction::epsilon(G), b), b);
  EXPECT_EQ(dual_action(a, DualFunction::indicator(G, 0), b), pair(a, 3, 0));
  EXPECT_EQ(dual_action(a, DualFunction::indicator(G, 1), b), pair(a, 0, 1));
}

TEST(SmashMul, Examples) {
  auto a = ext(z4z2());
  auto one = pair(a, 1, 0), n = pair(a, 0, 1);
  EXPECT_EQ(smash_mul(a, smash_basic(a, one, 1), smash_basic(a, n, 0)), smash_basic(a, n, 0));
  auto zero = SmashElement{{0, 0}};
  EXPECT_EQ(smash_mul(a, smash_basic(a, n, 0), smash_basic(a, n, 1)), zero);
  for (Index i = 0; i < smash_size(a); ++i) {
    auto u = smash_decode(a, i);
    EXPECT_EQ(smash_mul(a, smash_unit(a), u), u);
    EXPECT_EQ(smash_mul(a, u, smash_unit(a)), u);
  }
}

TEST(SmashMul, AssociativityAndModuleLaw) {
  std::mt19937_64 rng(7);
  for (const auto& a : algebras()) {
    const auto n = smash_size(a);
    auto check = [&](Index i, Index j, Index k) {
      auto u = smash_decode(a, i), v = smash_decode(a, j), w = smash_decode(a, k);
      EXPECT_EQ(smash_mul(a, smash_mul(a, u, v), w), smash_mul(a, u, smash_mul(a, v, w))) << a.descriptor();
      for (Index b = 0; b < a.size(); ++b)
        EXPECT_EQ(smash_act(a, smash_mul(a, u, v), b), smash_act(a, u, smash_act(a, v, b))) << a.descriptor();
    };
    if (n <= 64) {
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) check(i, j, (i * 7 + j) % n);
    } else {
      std::uniform_int_distribution<Index> d(0, n - 1);
      for (int t = 0; t < 500; ++t) check(d(rng), d(rng), d(rng));
    }
  }
}

TEST(SmashAct, Examples) {
  auto a = ext(z4z2());
  auto b = pair(a, 3, 1);
  EXPECT_EQ(smash_act(a, smash_unit(a), b), b);
  EXPECT_EQ(smash_act(a, smash_basic(a, pair(a, 2, 0), 0), b), pair(a, 2, 0));
  EXPECT_EQ(smash_act(a, smash_basic(a, pair(a, 0, 1), 1), b), a.zero());
}

TEST(Rho, ExamplesAndPrecondition) {
  auto a = ext(z4z2());
  const auto& L = a.layout();
  EXPECT_EQ(rho_map(a, a.one()), linear_map_from(L, [](const Coords& v) { return v; }));
  EXPECT_EQ(rho_map(a, a.zero()), linear_map_from(L, [&](const Coords&) { return L.zero(); }));
  auto r2 = rho_map(a, pair(a, 2, 0));
  for (Index s = 0; s < 4; ++s)
    for (Index n = 0; n < 2; ++n)
      EXPECT_EQ(L.encode(r2.apply(L, L.decode(pair(a, s, n)))), pair(a, (2 * s) % 4, 0));
  EXPECT_THROW(rho_map(a, pair(a, 0, 1)), PreconditionError);
}

TEST(EndSmash, Counts) {
  auto f = end_smash_verify(ext(f2f2()));
  EXPECT_TRUE(f.ok()) << f.failure;
  EXPECT_EQ(f.end_size, 2u);
  EXPECT_EQ(f.exhaustive_agrees, std::optional<bool>(true));
  auto z = end_smash_verify(ext(z4z2()));
  EXPECT_TRUE(z.ok()) << z.failure;
  EXPECT_EQ(z.end_size, 4u);
  for (const auto& a : algebras()) EXPECT_TRUE(end_smash_verify(a).ok()) << a.descriptor();
}

TEST(StructureMap, CornerMapFindings) {
  for (const auto& c : {f2f2(), z4z2()}) {
    auto r = structure_map_check(c);
    EXPECT_TRUE(r.bijective);
    EXPECT_TRUE(r.additive);
    EXPECT_TRUE(r.unit_to_unit);
    EXPECT_EQ(r.pairs, smash_size(ext(c)) * smash_size(ext(c)));
    // recorded finding: the corner map respects products in the same order
    EXPECT_TRUE(r.multiplicative()) << c.descriptor();
    EXPECT_FALSE(r.anti_multiplicative()) << c.descriptor();
  }
  EXPECT_EQ(structure_map_check(f2f2()).pairs, 256u);
  EXPECT_EQ(structure_map_check(z4z2()).pairs, 4096u);
}
