// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include <qb/morita.hpp>

#include <random>

using namespace qb;
using FM = GenMatrix<FiniteMorita>;
using FP = PairVec<FiniteMorita>;

namespace {

FiniteMorita z4z2() {
  auto z4 = FiniteRing::zmod(4);
  return FiniteMorita(z4, FiniteBimodule::zmod_quotient(z4, 2));
}
FiniteMorita regular(const FiniteRing& s) { return FiniteMorita(s, FiniteBimodule::regular(s)); }

std::vector<FiniteMorita> bundled() {
  auto f2 = FiniteRing::zmod(2), f3 = FiniteRing::zmod(3);
  auto m2 = FiniteRing::matrix(2, f2);
  return {regular(f2), regular(f3), z4z2(), regular(m2), FiniteMorita(f2, FiniteBimodule::zmod_quotient(f2, 1))};
}

}  // namespace

TEST(GenMatrix, IdentityIsUnit) {
  auto c = z4z2();
  for (Index i = 0; i < c.matrix_ring_size(); ++i) {
    auto v = c.decode_matrix(i);
    EXPECT_EQ(genmatrix_mul(c, genmatrix_identity(c), v), v);
    EXPECT_EQ(genmatrix_mul(c, v, genmatrix_identity(c)), v);
  }
}

TEST(GenMatrix, HandEvaluatedProduct) {
  auto c = z4z2();
  FM u{1, 1, 1, 2}, v{3, 0, 1, 2};
  EXPECT_EQ(genmatrix_mul(c, u, v), (FM{3, 0, 1, 0}));
}

TEST(GenMatrix, OffDiagonalProductsVanish) {
  auto c = z4z2();
  for (Element x : {0, 1})
    for (Element y : {0, 1})
      for (Element x2 : {0, 1})
        for (Element y2 : {0, 1}) EXPECT_EQ(genmatrix_mul(c, FM{0, x, y, 0}, FM{0, x2, y2, 0}), (FM{0, 0, 0, 0}));
}

TEST(GenMatrix, ParentMismatchIsRejected) {
  auto c = z4z2();
  EXPECT_THROW(genmatrix_mul(c, FM{0, 2, 0, 0}, genmatrix_identity(c)), PreconditionError);
  EXPECT_THROW(FiniteMorita(FiniteRing::zmod(2), FiniteBimodule::regular(FiniteRing::zmod(3))), PreconditionError);
}

TEST(GenMatrix, AssociativeOnSmallInstances) {
  for (const auto& c : bundled()) {
    const auto n = c.matrix_ring_size();
    if (n > 4096) continue;
    // |R|^3 triples up to 81^3
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        auto uv = genmatrix_mul(c, c.decode_matrix(i), c.decode_matrix(j));
        for (Index k = 0; k < n; ++k) {
          auto w = c.decode_matrix(k);
          ASSERT_EQ(genmatrix_mul(c, uv, w), genmatrix_mul(c, c.decode_matrix(i), genmatrix_mul(c, c.decode_matrix(j), w)))
              << c.descriptor();
        }
      }
  }
}

TEST(ModuleAct, Examples) {
  auto c = z4z2();
  EXPECT_EQ(module_act(c, FP{1, 1}, FM{1, 0, 1, 2}), (FP{0, 2}));
  for (Index m = 0; m < c.module_size(); ++m)
    EXPECT_EQ(module_act(c, c.decode_pair(m), genmatrix_identity(c)), c.decode_pair(m));
  EXPECT_EQ(module_act(c, FP{0, 0}, FM{3, 1, 1, 3}), (FP{0, 0}));
}

TEST(ModuleAct, RightModuleLaw) {
  for (const auto& c : bundled()) {
    const auto n = c.matrix_ring_size();
    if (n > 4096) continue;
    for (Index m = 0; m < c.module_size(); ++m)
      for (Index i = 0; i < n; ++i) {
        auto mu = module_act(c, c.decode_pair(m), c.decode_matrix(i));
        for (Index j = 0; j < n; ++j) {
          auto v = c.decode_matrix(j);
          ASSERT_EQ(module_act(c, c.decode_pair(m), genmatrix_mul(c, c.decode_matrix(i), v)), module_act(c, mu, v));
        }
      }
  }
}

TEST(Lambda, Examples) {
  auto c = z4z2();
  EXPECT_EQ(lambda_apply(c, Element{2}, FP{1, 1}), (FP{0, 2}));
  for (Index m = 0; m < c.module_size(); ++m) {
    EXPECT_EQ(lambda_apply(c, Element{1}, c.decode_pair(m)), c.decode_pair(m));
    EXPECT_EQ(lambda_apply(c, Element{0}, c.decode_pair(m)), (FP{0, 0}));
  }
}

TEST(Lambda, CompositionIsPointwiseProduct) {
  for (const auto& c : bundled()) {
    const auto& s = c.ring();
    for (Element t = 0; t < s.size(); ++t)
      for (Element u = 0; u < s.size(); ++u)
        for (Index m = 0; m < c.module_size(); ++m)
          ASSERT_EQ(lambda_apply(c, t, lambda_apply(c, u, c.decode_pair(m))), lambda_apply(c, s.mul(t, u), c.decode_pair(m)));
  }
}

TEST(EndRing, F2F2) {
  auto rep = end_ring_verify(regular(FiniteRing::zmod(2)));
  EXPECT_EQ(rep.end_size, 2u);
  EXPECT_TRUE(rep.ok()) << rep.failure;
  ASSERT_TRUE(rep.exhaustive_agrees.has_value());
}

TEST(EndRing, Z4Z2) {
  auto rep = end_ring_verify(z4z2());
  EXPECT_EQ(rep.end_size, 4u);
  EXPECT_TRUE(rep.ok()) << rep.failure;
  ASSERT_TRUE(rep.exhaustive_agrees.has_value());
  EXPECT_EQ(rep.identification.size(), 4u);
}

TEST(EndRing, ZeroBimodule) {
  auto f2 = FiniteRing::zmod(2);
  auto rep = end_ring_verify(FiniteMorita(f2, FiniteBimodule::zmod_quotient(f2, 1)));
  EXPECT_EQ(rep.end_size, 2u);
  EXPECT_TRUE(rep.ok());
}

TEST(EndRing, AllBundledInstances) {
  for (const auto& c : bundled()) {
    auto rep = end_ring_verify(c);
    EXPECT_EQ(rep.end_size, c.ring().size()) << c.descriptor();
    EXPECT_TRUE(rep.ok()) << c.descriptor() << ": " << rep.failure;
  }
}

namespace {

template <class Ctx>
void symbolic_laws(const Ctx& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 500; ++i) {
    auto u = c.random_matrix(rng), v = c.random_matrix(rng), w = c.random_matrix(rng);
    ASSERT_EQ(genmatrix_mul(c, genmatrix_mul(c, u, v), w), genmatrix_mul(c, u, genmatrix_mul(c, v, w)));
    ASSERT_EQ(genmatrix_mul(c, genmatrix_identity(c), u), u);
    auto m = c.random_pair(rng);
    ASSERT_EQ(module_act(c, m, genmatrix_mul(c, u, v)), module_act(c, module_act(c, m, u), v));
    ASSERT_EQ(module_act(c, m, genmatrix_identity(c)), m);
    auto t = c.random_ring_element(rng);
    ASSERT_EQ(lambda_apply(c, t, module_act(c, m, u)), module_act(c, lambda_apply(c, t, m), u));
  }
}

}  // namespace

TEST(Symbolic, WeylQuotientLaws) { symbolic_laws(WeylMorita(WeylRing::weyl, WeylBimodule::quotient), 17); }
TEST(Symbolic, WeylLocRegularLaws) { symbolic_laws(WeylMorita(WeylRing::weyl_loc, WeylBimodule::regular), 18); }

TEST(Symbolic, QuotientNeedsPolynomialRing) {
  EXPECT_THROW(WeylMorita(WeylRing::weyl_loc, WeylBimodule::quotient), PreconditionError);
}
