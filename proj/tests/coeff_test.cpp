// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "taf/coeff.hpp"

namespace taf {
namespace {

TEST(Valuation, Examples) {
  EXPECT_EQ(p_valuation(Rational(49, 3), 7).value(), 2);
  EXPECT_TRUE(p_valuation(Rational(0), 13).is_infinite());
  EXPECT_EQ(p_valuation(Rational(-2147, 93312), 7).value(), 0);
  EXPECT_EQ(p_valuation(Rational(5, 343), 7).value(), -3);
}

TEST(Valuation, InfinityThrowsOnValue) { EXPECT_THROW(Valuation::infinity().value(), Error); }

TEST(ReduceModP, Examples) {
  EXPECT_EQ(reduce_mod_p(Rational(-1, 3), 7).residue(), 2u);
  EXPECT_EQ(reduce_mod_p(Rational(-162), 7).residue(), 6u);
  for (std::uint32_t p : {7u, 13u, 19u}) EXPECT_EQ(reduce_mod_p(Rational(1), p).residue(), 1u);
  // -2147/93312 = 1 mod 7.
  EXPECT_EQ(reduce_mod_p(Rational(-2147, 93312), 7).residue(), 1u);
}

TEST(ReduceModP, NonLocalThrows) { EXPECT_THROW(reduce_mod_p(Rational(1, 14), 7), NotPLocal); }

TEST(Fp, InverseAgainstBruteForce) {
  for (std::uint32_t p : {7u, 13u, 31u}) {
    for (std::uint32_t a = 1; a < p; ++a) {
      std::uint32_t brute = 0;
      for (std::uint32_t b = 1; b < p; ++b) {
        if (a * b % p == 1) brute = b;
      }
      EXPECT_EQ(Fp(a, p).inverse().residue(), brute);
    }
  }
}

TEST(Fp, ReductionIsARingMap) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 40);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(rng), den(rng) * 13 + 1);
    const Rational b(num(rng), den(rng) * 13 + 2);
    EXPECT_EQ(reduce_mod_p(a * b, 13), reduce_mod_p(a, 13) * reduce_mod_p(b, 13));
    EXPECT_EQ(reduce_mod_p(a + b, 13), reduce_mod_p(a, 13) + reduce_mod_p(b, 13));
  }
}

TEST(Fp, MixedModuliThrow) { EXPECT_THROW(Fp(1, 7) + Fp(1, 13), Error); }

TEST(ModPk, AgreesWithIntegerArithmetic) {
  const ModPk a(Rational(3, 2), 7, 3);
  // 2 * 515 = 1030 = 3 * 343 + 1.
  EXPECT_EQ(a.residue(), mpz_class(3 * 515 % 343));
  EXPECT_EQ((a + ModPk(Rational(1), 7, 3)).residue(), mpz_class((3 * 515 + 1) % 343));
}

TEST(Rational, ParseRoundTrip) {
  for (const char* text : {"0", "-5", "7/3", "-2147/93312", "123456789012345678901234567891/7"}) {
    EXPECT_EQ(Rational::parse(text).to_string(), text);
  }
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), DomainError); }

TEST(IsPrime, AgainstTrialDivision) {
  for (std::uint64_t n = 0; n < 3000; ++n) {
    bool brute = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && brute; ++d) brute = n % d != 0;
    EXPECT_EQ(is_prime(n), brute) << n;
  }
}

}  // namespace
}  // namespace taf
