// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "taf/genus.hpp"

namespace taf {
namespace {

QPoly Q(const std::string& text, const RegistryPtr& reg) { return parse_poly<Rational>(text, reg); }

Rational at_kappa_square(const QPoly& f, const Rational& kappa2, const Rational& lambda) {
  const QPoly g = kappa_square_substitution(f);
  const auto& reg = g.registry();
  std::vector<Rational> point(reg->size());
  point[reg->require("lambda")] = lambda;
  point[reg->require("Delta6")] = (lambda - kappa2) * Rational(1, 108);
  return evaluate(g, point);
}

TEST(Families, ParseAndName) {
  for (Family f : {Family::Legendre, Family::Picard, Family::Shiga, Family::Supersingular}) {
    EXPECT_EQ(parse_family(family_id(f)), f);
  }
  EXPECT_THROW(parse_family("weierstrass"), DomainError);
}

TEST(Legendre, LowDegrees) {
  const auto kl = registries::kappa_lambda();
  EXPECT_EQ(legendre_poly(0), Q("1", kl));
  EXPECT_EQ(legendre_poly(1), Q("kappa", kl));
  EXPECT_EQ(legendre_poly(2), Q("3/2*kappa^2 - 1/2*lambda", kl));
}

TEST(Legendre, SixteenAtTheZeroOfP2) {
  EXPECT_TRUE(at_kappa_square(legendre_poly(2), Rational(1, 3), Rational(1)).is_zero());
  EXPECT_EQ(at_kappa_square(legendre_poly(16), Rational(1, 3), Rational(1)), Rational(-7 * 19 * 113, 128 * 729));
}

TEST(Legendre, AgreesWithGeneratingFunction) {
  const GenusSpec& spec = genus_spec(Family::Legendre);
  for (unsigned k = 0; k < 25; ++k) EXPECT_EQ(genus_log_coeff(spec, 3 * k), legendre_poly(k)) << k;
}

TEST(LogCoeff, Examples) {
  EXPECT_TRUE(genus_log_coeff(genus_spec(Family::Picard), 7).is_zero());
  const auto sigma = registries::sigma();
  EXPECT_EQ(genus_log_coeff(genus_spec(Family::Shiga), 6), Q("2/9*sigma1^2 - 1/3*sigma2", sigma));
}

TEST(LogCoeff, ShigaThroughXiAgrees) {
  const GenusSpec& spec = genus_spec(Family::Shiga);
  for (unsigned k = 0; k <= 36; k += 3) EXPECT_EQ(shiga_log_coeff_via_xi(k), genus_log_coeff(spec, k)) << k;
}

TEST(GenusV, Examples) {
  const auto pic = registries::picard();
  const HazewinkelImages p13 = genus_v(genus_spec(Family::Picard), 13, 1);
  EXPECT_EQ(p13.v[0], Q("2/9*G2^2 - 1/3*G4", pic));
  EXPECT_EQ(reduce_mod_p(p13.v[0], 13), parse_poly<Fp>("6*G2^2 + 4*G4", pic, PrimeField(13)));

  const HazewinkelImages ss = genus_v(genus_spec(Family::Supersingular), 7, 2);
  EXPECT_TRUE(ss.v[0].is_zero());
  EXPECT_TRUE(ss.v[1].is_zero());
}

TEST(GenusV, LegendreModSeven) {
  const HazewinkelImages l = genus_v(genus_spec(Family::Legendre), 7, 1);
  EXPECT_EQ(reduce_mod_p(kappa_square_substitution(l.v[0]), 7),
            parse_poly<Fp>("lambda - Delta6", registries::lambda_delta6(), PrimeField(7)));
}

TEST(GenusV, RejectsBadPrimes) {
  EXPECT_THROW(genus_v(genus_spec(Family::Picard), 5, 1), DomainError);
  EXPECT_THROW(genus_v(genus_spec(Family::Picard), 49, 1), DomainError);
  EXPECT_THROW(genus_v(genus_spec(Family::Picard), 7, 4), DomainError);
}

TEST(Hazewinkel, ReportsNonIntegralImages) {
  const auto pic = registries::picard();
  const HazewinkelImages h = hazewinkel_images({Q("1/49*G2", pic)}, 7);
  EXPECT_FALSE(h.integral());
  EXPECT_EQ(h.valuations[0].value(), -1);
}

TEST(KappaSquare, RejectsOddPowers) {
  EXPECT_THROW(kappa_square_substitution(Q("kappa*lambda", registries::kappa_lambda())), DomainError);
}

TEST(CertificateRing, Maps) {
  EXPECT_EQ(to_certificate_ring(Family::Legendre, legendre_poly(2)),
            Q("lambda - 162*Delta6", registries::lambda_delta6()));
  EXPECT_EQ(to_certificate_ring(Family::Picard, Q("G2", registries::picard())), Q("G2", registries::picard()));
}

}  // namespace
}  // namespace taf
