// Copyright 2026 The qb authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <gtest/gtest.h>

#include <qb/weyl.hpp>

#include "oracles/weyl_rewrite.hpp"

#include <map>
#include <random>
#include <string>

using namespace qb;
using namespace qb::weyl;

namespace {

using qb_test::oracle_product;

const ElementBox kLaurentBox{-5, 5, 5, 4, 3};
const ElementBox kPolyBox{0, 5, 5, 4, 3};

}  // namespace

TEST(WeylMul, DefiningRelation) {
  auto x = WeylElement::x(), d = WeylElement::d();
  EXPECT_EQ(to_string(d * x), "x*d + 1");
  EXPECT_EQ(to_string(x * d), "x*d");
  EXPECT_EQ(d * x - x * d, WeylElement::one());
}

TEST(WeylMul, InverseRelation) {
  auto r = WeylElement::d() * WeylElement::x_inverse();
  EXPECT_EQ(r, WeylElement::monomial(-1, 1) - WeylElement::monomial(-2, 0));
  EXPECT_EQ(to_string(r), "x^-1*d - x^-2");
  EXPECT_EQ(WeylElement::x() * WeylElement::x_inverse(), WeylElement::one());
}

TEST(WeylMul, MatchesRewritingOracle) {
  std::mt19937_64 rng(314159);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_element(rng, kLaurentBox);
    auto b = random_element(rng, kLaurentBox);
    ASSERT_EQ(weyl_mul(a, b), oracle_product(a, b)) << to_string(a) << " * " << to_string(b);
  }
}

TEST(WeylMul, Associative) {
  std::mt19937_64 rng(271828);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_element(rng, kLaurentBox);
    auto b = random_element(rng, kLaurentBox);
    auto c = random_element(rng, kLaurentBox);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(WeylMul, Distributive) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    auto a = random_element(rng, kLaurentBox);
    auto b = random_element(rng, kLaurentBox);
    auto c = random_element(rng, kLaurentBox);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) * c, a * c + b * c);
  }
}

TEST(IsInD, Examples) {
  EXPECT_TRUE(is_in_D(WeylElement::monomial(1, 1) + WeylElement::one()));
  EXPECT_FALSE(is_in_D(WeylElement::x_inverse()));
  EXPECT_TRUE(is_in_D(WeylElement{}));
}

TEST(IsInD, DIsASubring) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    auto a = random_element(rng, kPolyBox);
    auto b = random_element(rng, kPolyBox);
    ASSERT_TRUE(is_in_D(a * b));
    ASSERT_TRUE(is_in_D(a + b));
  }
}

TEST(DomainDegree, Examples) {
  auto d = WeylElement::d(), xd = WeylElement::monomial(1, 1);
  EXPECT_EQ(d * xd, WeylElement::monomial(1, 2) + d);
  EXPECT_TRUE(domain_degree_check(d, xd));
  EXPECT_TRUE(domain_degree_check(WeylElement::x(), WeylElement::x_inverse()));
  EXPECT_TRUE(domain_degree_check(WeylElement::one(), WeylElement::monomial(3, 2, 5)));
  EXPECT_THROW(domain_degree_check(WeylElement{}, d), PreconditionError);
}

TEST(DomainDegree, RandomNonzeroPairs) {
  std::mt19937_64 rng(161803);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_nonzero_element(rng, kLaurentBox);
    auto b = random_nonzero_element(rng, kLaurentBox);
    ASSERT_TRUE(domain_degree_check(a, b)) << to_string(a) << " , " << to_string(b);
    ASSERT_FALSE((a * b).is_zero());
  }
}

TEST(Collapse, Examples) {
  auto c1 = ideal_collapse_certificate(WeylElement::one());
  EXPECT_EQ(c1.ad_d_count, 0u);
  EXPECT_EQ(c1.ad_x_count, 0u);
  EXPECT_EQ(c1.final_scalar, 1);

  auto c2 = ideal_collapse_certificate(WeylElement::monomial(1, 1));
  EXPECT_EQ(c2.ad_d_count, 1u);
  EXPECT_EQ(c2.ad_x_count, 1u);
  EXPECT_EQ(c2.final_scalar, 1);
  EXPECT_EQ(ad_d(WeylElement::monomial(1, 1)), WeylElement::d());

  auto c3 = ideal_collapse_certificate(WeylElement::monomial(2, 0));
  EXPECT_EQ(c3.ad_d_count, 2u);
  EXPECT_EQ(c3.ad_x_count, 0u);
  EXPECT_EQ(c3.final_scalar, 2);
}

TEST(Collapse, Preconditions) {
  EXPECT_THROW(ideal_collapse_certificate(WeylElement{}), PreconditionError);
  EXPECT_THROW(ideal_collapse_certificate(WeylElement::x_inverse()), PreconditionError);
  auto shifted = ideal_collapse_certificate(WeylElement::x_inverse() + WeylElement::d(), true);
  EXPECT_EQ(shifted.x_shift, 1);
  EXPECT_TRUE(replay(shifted));
}

TEST(Collapse, RandomCertificatesReplay) {
  std::mt19937_64 rng(577);
  for (int i = 0; i < 300; ++i) {
    auto a = random_nonzero_element(rng, kPolyBox);
    auto c = ideal_collapse_certificate(a);
    ASSERT_NE(c.final_scalar, 0);
    ASSERT_TRUE(replay(c));
    // any other scalar must fail replay
    auto tampered = c;
    tampered.final_scalar += 1;
    ASSERT_FALSE(replay(tampered));
  }
}

TEST(Torsion, Examples) {
  EXPECT_TRUE(torsion_witness_verify(WeylElement::x(), WeylElement::x_inverse()));
  EXPECT_FALSE(torsion_witness_verify(WeylElement::x(), WeylElement::x()));
  EXPECT_FALSE(torsion_witness_verify(WeylElement{}, WeylElement::x_inverse()));
  EXPECT_FALSE(torsion_witness_verify(WeylElement::monomial(1, 1), WeylElement::x_inverse()));
  EXPECT_TRUE(torsion_witness_verify(WeylElement::monomial(2, 0), WeylElement::x_inverse()));
}

TEST(Format, Examples) {
  EXPECT_EQ(to_string(WeylElement{}), "0");
  EXPECT_EQ(to_string(WeylElement::scalar(Rational(-3, 2))), "-3/2");
  EXPECT_EQ(to_string(WeylElement::monomial(2, 3, -1) + WeylElement::monomial(0, 0, 4)), "-x^2*d^3 + 4");
}
