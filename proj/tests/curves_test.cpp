// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "taf/congruences.hpp"
#include "taf/curves.hpp"
#include "taf/genus.hpp"
#include "taf/suite.hpp"

namespace taf {
namespace {

QPoly Q(const std::string& text, const RegistryPtr& reg) { return parse_poly<Rational>(text, reg); }

TEST(Identities, AllButTheSexticClosedForm) {
  for (const auto& id : curve_identity_ids()) {
    const IdentityVerdict v = check_curve_identity(id);
    if (id == "disc-sextic") continue;
    EXPECT_TRUE(v.pass) << id << ": " << v.witness;
  }
  EXPECT_THROW(check_curve_identity("disc-octic"), DomainError);
}

// Squared root differences of x^6 - 2 kappa x^3 + lambda from complex roots.
double sextic_disc_numeric(double kappa, double lambda) {
  const std::complex<double> s = std::sqrt(std::complex<double>(kappa * kappa - lambda));
  std::vector<std::complex<double>> roots;
  for (auto w : {kappa + s, kappa - s}) {
    const std::complex<double> r = std::pow(w, 1.0 / 3.0);
    for (int k = 0; k < 3; ++k) roots.push_back(r * std::polar(1.0, 2.0 * M_PI * k / 3.0));
  }
  std::complex<double> d = 1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) d *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
  }
  return d.real();
}

TEST(SexticDiscriminant, ClosedFormAgainstRoots) {
  const QPoly d = sextic_discriminant();
  EXPECT_EQ(d, Q("46656*lambda^2*(kappa^2 - lambda)^3", registries::kappa_lambda()));
  for (auto [k, l] : std::vector<std::pair<long, long>>{{2, 3}, {1, 5}, {3, -2}, {-1, 7}}) {
    const double exact = evaluate(d, {Rational(k), Rational(l)}).value().get_d();
    EXPECT_NEAR(sextic_disc_numeric(k, l) / exact, 1.0, 1e-9) << k << ", " << l;
  }
}

TEST(Degeneration211, Witness) {
  const Degeneration211 d = degenerate_211();
  EXPECT_TRUE(d.membership);
  EXPECT_TRUE(d.differential);
  const auto& reg = d.registry;
  const QPoly x = Q("(s + t^3 + xi0 - 2*xi1)/2", reg);
  EXPECT_EQ(d.cofactor, (x * x).scaled(Rational(-1, 4)));
}

TEST(Degeneration211, NumericExample) {
  const auto [two_kappa, lambda] = degenerate_211_at(Rational(3), Rational(1));
  // s^2 = t^6 - (2 kappa') t^3 + lambda' = t^6 + 2 t^3 + 9.
  EXPECT_EQ(two_kappa, Rational(-2));
  EXPECT_EQ(lambda, Rational(9));
}

// With xi1 = xi2 the Shiga quartic acquires the (2,1,1) shape, and the
// sextic discriminant of the resulting genus-two curve vanishes exactly on
// the further collisions xi0 = 0, xi1 = 0 and xi0 = xi1.
TEST(Degeneration211, DiscriminantConsistency) {
  const Degeneration211 d = degenerate_211();
  const auto& reg = d.registry;
  const QPoly kappa = d.two_kappa.scaled(Rational(1, 2));
  const QPoly disc = substitute(sextic_discriminant(), {{"kappa", kappa}, {"lambda", d.lambda}}, reg);
  EXPECT_EQ(disc, Q("46656*64*xi0^4*xi1^3*(xi1 - xi0)^3", reg));
}

TEST(Degeneration22, MembershipAndSamples) {
  const DegenerationCheck c = degenerate_22_check();
  EXPECT_TRUE(c.pass) << c.detail;
  EXPECT_TRUE(degenerate_22_check(99).pass);
}

TEST(Degeneration31, Relations) {
  const DegenerationCheck c = degenerate_31_check();
  EXPECT_TRUE(c.pass) << c.detail;
  // The listed generator y^3 - x^2 (x - xi0)^2 is off by xi0 u^3 (u^3 - xi0)^2.
  EXPECT_NE(c.detail.find("-xi0^3*u^3 + 2*xi0^2*u^6 - xi0*u^9"), std::string::npos);
}

TEST(Restriction, Images) {
  const auto kl = registries::kappa_lambda();
  const auto pic = registries::picard();
  EXPECT_EQ(restrict(Q("G2", pic)), Q("-1/8*kappa^2 - 1/4*lambda", kl));
  EXPECT_EQ(restrict(Q("G3", pic)), Q("1/8*kappa*lambda", kl));
  EXPECT_EQ(restrict(Q("G4", pic)), Q("1/256*kappa^4 - 1/64*kappa^2*lambda", kl));
  EXPECT_TRUE(restrict(family_discriminant(Family::Picard)).is_zero());
  EXPECT_THROW(restrict(Q("kappa", kl)), RegistryMismatch);
}

TEST(Restriction, HomomorphismOnRandomPairs) {
  std::mt19937_64 rng(41);
  const auto pic = registries::picard();
  for (int i = 0; i < 40; ++i) {
    const QPoly f = random_poly(pic, rng, 6, 4);
    const QPoly g = random_poly(pic, rng, 6, 4);
    EXPECT_EQ(restrict(f * g), restrict(f) * restrict(g));
    EXPECT_EQ(restrict(f - g), restrict(f) - restrict(g));
    for (long degree : {36L, 48L, 72L}) {
      const QPoly h = restrict(random_homogeneous(pic, rng, degree, 3));
      if (h.is_zero()) continue;
      EXPECT_TRUE(is_homogeneous(h));
      EXPECT_EQ(weighted_degree(h).degree, degree);
    }
  }
}

TEST(RestrictedModel, Passes) {
  const RestrictedModelReport r = restricted_model_check();
  EXPECT_TRUE(r.root_sum.is_zero());
  EXPECT_TRUE(r.factor_residual.is_zero());
  EXPECT_TRUE(r.kappa_residual.is_zero());
  EXPECT_TRUE(r.lambda_residual.is_zero());
}

TEST(Iso, SevenAndThirteen) {
  for (std::uint32_t p : {7u, 13u}) {
    const IsoReport r = fgl_iso_integrality(p);
    EXPECT_TRUE(r.asserted);
    EXPECT_TRUE(r.pass()) << p;
    EXPECT_EQ(r.order, 40u);
  }
}

TEST(Iso, FiveIsInformational) {
  const IsoReport r = fgl_iso_integrality(5, 20);
  EXPECT_FALSE(r.asserted);
  EXPECT_THROW(fgl_iso_integrality(6, 20), DomainError);
}

TEST(Supersingular, HeightThree) {
  for (std::uint32_t p : {7u, 13u}) {
    const SupersingularReport s = supersingular_height(p);
    EXPECT_TRUE(s.v1_zero);
    EXPECT_TRUE(s.v2_zero);
    EXPECT_TRUE(s.oracle_agrees);
    EXPECT_EQ(s.valuation, 2);
    EXPECT_EQ(s.verdict, "height 3");
  }
  EXPECT_EQ(supersingular_height(7).exponent, 342u);
  EXPECT_THROW(supersingular_height(19), DomainError);
  EXPECT_THROW(supersingular_height(5), DomainError);
}

TEST(Supersingular, OracleMatchesBinomial) {
  for (unsigned long m : {0ul, 1ul, 5ul, 38ul}) {
    const Rational sign = m % 2 ? Rational(-1) : Rational(1);
    EXPECT_EQ(supersingular_coefficient_oracle(m), sign * binomial(Rational(-1, 3), m)) << m;
  }
}

}  // namespace
}  // namespace taf
