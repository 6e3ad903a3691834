// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "taf/genus.hpp"
#include "taf/pseries.hpp"

namespace taf {
namespace {

QPoly Q(const std::string& text, const RegistryPtr& reg) { return parse_poly<Rational>(text, reg); }

PolySeries from_text(const std::vector<std::string>& coeffs, const RegistryPtr& reg, unsigned bound) {
  PolySeries s(QPoly(reg), bound);
  for (unsigned k = 0; k < coeffs.size() && k < bound; ++k) {
    if (!coeffs[k].empty()) s.set(k, Q(coeffs[k], reg));
  }
  return s;
}

TEST(FractionalPower, LegendreGeneratingFunction) {
  const auto kl = registries::kappa_lambda();
  const PolySeries base = from_text({"1", "", "", "-2*kappa", "", "", "lambda"}, kl, 10);
  const PolySeries p = fractional_power(base, Rational(-1, 2));
  EXPECT_EQ(p[0], Q("1", kl));
  EXPECT_EQ(p[3], Q("kappa", kl));
  EXPECT_EQ(p[6], Q("3/2*kappa^2 - 1/2*lambda", kl));
  EXPECT_EQ(p[9], legendre_poly(3));
}

TEST(FractionalPower, PicardBinomialOracle) {
  const auto pic = registries::picard();
  const PolySeries base = from_text({"1", "", "", "", "", "", "G2", "", "", "G3", "", "", "G4"}, pic, 13);
  const PolySeries p = fractional_power(base, Rational(-1, 3));
  EXPECT_EQ(p[6], Q("-1/3*G2", pic));
  EXPECT_EQ(p[9], Q("-1/3*G3", pic));
  EXPECT_EQ(p[12], Q("2/9*G2^2 - 1/3*G4", pic));
  // 13 times the u^12 coefficient divided by 13 reduces to 6 G2^2 + 4 G4.
  EXPECT_EQ(reduce_mod_p(p[12], 13), parse_poly<Fp>("6*G2^2 + 4*G4", pic, PrimeField(13)));
  EXPECT_EQ(p, fractional_power_binomial(base, Rational(-1, 3)));
}

TEST(FractionalPower, OfOneIsOne) {
  const QSeries one(std::vector<Rational>{Rational(1)}, Rational(0), 12);
  EXPECT_EQ(fractional_power(one, Rational(5, 7)), one);
}

TEST(FractionalPower, NeedsUnitConstantTerm) {
  const QSeries two(std::vector<Rational>{Rational(2)}, Rational(0), 5);
  EXPECT_THROW(fractional_power(two, Rational(1, 2)), DomainError);
}

TEST(Integrate, Examples) {
  const auto pic = registries::picard();
  const PolySeries lp = from_text({"1", "", "", "", "", "", "-1/3*G2"}, pic, 8);
  const PolySeries l = integrate(lp);
  EXPECT_EQ(l[1], Q("1", pic));
  EXPECT_EQ(l[7], Q("-1/21*G2", pic));
  EXPECT_EQ(Q("7", pic) * l[7], Q("-1/3*G2", pic));

  const QSeries one(std::vector<Rational>{Rational(1)}, Rational(0), 6);
  EXPECT_EQ(integrate(one), series_variable(Rational(0), 6));

  const auto kl = registries::kappa_lambda();
  const PolySeries k = integrate(from_text({"1", "", "", "kappa"}, kl, 6));
  EXPECT_EQ(k[4], Q("1/4*kappa", kl));
}

TEST(Revert, Examples) {
  EXPECT_EQ(revert(series_variable(Rational(0), 10)), series_variable(Rational(0), 10));
  const auto kl = registries::kappa_lambda();
  const PolySeries f = from_text({"", "1", "", "", "1/4*kappa"}, kl, 7);
  const PolySeries g = revert(f);
  EXPECT_EQ(g[1], Q("1", kl));
  EXPECT_EQ(g[4], Q("-1/4*kappa", kl));
  for (unsigned k : {0u, 2u, 3u, 5u, 6u}) EXPECT_TRUE(g[k].is_zero()) << k;
}

TEST(Revert, LegendreExpOfLog) {
  const PolySeries log = genus_log(genus_spec(Family::Legendre), 14);
  const PolySeries exp = revert(log);
  EXPECT_EQ(compose(exp, log), series_variable(QPoly(registries::kappa_lambda()), 14));
}

// Newton iteration g <- g - (f(g) - u) / f'(g) as an independent reversion.
TEST(Revert, AgainstNewtonIteration) {
  const QSeries f(std::vector<Rational>{Rational(0), Rational(1), Rational(2, 3), Rational(-1), Rational(5, 2),
                                        Rational(0), Rational(7)},
                  Rational(0), 16);
  const QSeries u = series_variable(Rational(0), 16);
  QSeries g = u;
  for (int i = 0; i < 6; ++i) g = g - (compose(f, g) - u) * inverse(compose(derivative(f), g));
  EXPECT_EQ(revert(f), g);
}

TEST(Isolated, Examples) {
  const GenusSpec& picard = genus_spec(Family::Picard);
  EXPECT_EQ(isolated_coeff_fractional_power(picard.table, picard.exponent, 6, picard.zero()),
            Q("-1/3*G2", picard.registry));
  EXPECT_TRUE(isolated_coeff_fractional_power(picard.table, picard.exponent, 7, picard.zero()).is_zero());
}

TEST(Isolated, SupersingularValuation) {
  const GenusSpec& ss = genus_spec(Family::Supersingular);
  const QPoly c = isolated_coeff_fractional_power(ss.table, ss.exponent, 342, ss.zero());
  ASSERT_TRUE(c.is_constant());
  // prod_{j<38} (1/3 + j) / 38!
  Rational oracle(1);
  for (long j = 0; j < 38; ++j) oracle = oracle * (Rational(1, 3) + Rational(j)) * Rational(1, j + 1);
  EXPECT_EQ(c.constant_term(), oracle);
  EXPECT_EQ(p_valuation(oracle, 7).value(), 2);
}

TEST(Isolated, MatchesFullSeries) {
  for (Family f : {Family::Legendre, Family::Picard, Family::Shiga}) {
    const GenusSpec& spec = genus_spec(f);
    const PolySeries full = fractional_power(series_from_table(spec.table, spec.zero(), 60), spec.exponent);
    for (unsigned k = 0; k < 60; ++k) {
      EXPECT_EQ(isolated_coeff_fractional_power(spec.table, spec.exponent, k, spec.zero()), full[k])
          << family_id(f) << " u^" << k;
    }
  }
}

TEST(Binomial, AgainstFallingFactorial) {
  EXPECT_EQ(binomial(Rational(-1, 3), 0), Rational(1));
  EXPECT_EQ(binomial(Rational(-1, 3), 2), Rational(2, 9));
  EXPECT_EQ(binomial(Rational(5), 2), Rational(10));
  EXPECT_EQ(binomial(Rational(5), 7), Rational(0));
}

TEST(Series, OutOfRangeAccessThrows) {
  const QSeries s(Rational(0), 4);
  EXPECT_THROW(s[4], DomainError);
}

}  // namespace
}  // namespace taf
