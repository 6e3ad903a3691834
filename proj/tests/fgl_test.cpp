// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <json.hpp>

#include "taf/fgl.hpp"
#include "taf/genus.hpp"

namespace taf {
namespace {

QPoly Q(const std::string& text, const RegistryPtr& reg) { return parse_poly<Rational>(text, reg); }

TEST(Law, AdditiveFromIdentityLog) {
  const auto kl = registries::kappa_lambda();
  const FormalGroupLaw f = fgl_from_log(series_variable(QPoly(kl), 10));
  EXPECT_EQ(f.law, Q("x + y", f.law_registry));
}

TEST(Law, LegendreLowOrder) {
  const FormalGroupLaw f = fgl_from_log(genus_log(genus_spec(Family::Legendre), 7));
  EXPECT_EQ(f.law, Q("x + y - kappa*(x^3*y + 3/2*x^2*y^2 + x*y^3)", f.law_registry));
}

TEST(Law, SupersingularHasNoLowMixedTerms) {
  const FormalGroupLaw f = fgl_from_log(genus_log(genus_spec(Family::Supersingular), 10));
  EXPECT_EQ(f.law, Q("x + y", f.law_registry));
}

TEST(Law, LogIdentityAndAxioms) {
  for (Family fam : {Family::Legendre, Family::Picard, Family::Shiga}) {
    const FormalGroupLaw f = fgl_from_log(genus_log(genus_spec(fam), 14));
    EXPECT_TRUE(check_log_identity(f)) << family_id(fam);
    EXPECT_TRUE(check_unit(f));
    EXPECT_TRUE(check_commutative(f));
    EXPECT_TRUE(check_associative(f));
  }
}

TEST(Law, RejectsNonStrictLog) {
  PolySeries log(QPoly(registries::constants()), 6);
  log.set(1, QPoly::integer(registries::constants(), 2));
  EXPECT_THROW(fgl_from_log(log), DomainError);
}

TEST(NSeries, Examples) {
  const FormalGroupLaw legendre = fgl_from_log(genus_log(genus_spec(Family::Legendre), 12));
  const PolySeries u = series_variable(QPoly(registries::kappa_lambda()), 12);
  EXPECT_EQ(n_series(legendre, 1), u);
  EXPECT_TRUE(apply_law(legendre, u, n_series(legendre, -1)) == PolySeries(QPoly(registries::kappa_lambda()), 12));
  // [2](u) = F(u, u).
  EXPECT_EQ(n_series(legendre, 2), apply_law(legendre, u, u));

  const FormalGroupLaw additive = fgl_from_log(series_variable(QPoly(registries::constants()), 8));
  PolySeries five(QPoly(registries::constants()), 8);
  five.set(1, QPoly::integer(registries::constants(), 5));
  EXPECT_EQ(n_series(additive, 5), five);
}

// p l_n = sum_{i<n} l_i v_{n-i}^(p^i), with l_0 = 1.
TEST(Hazewinkel, RecursionOracle) {
  const GenusSpec& spec = genus_spec(Family::Picard);
  const std::uint32_t p = 7;
  const HazewinkelImages h = genus_v(spec, p, 2);
  const QPoly l1 = genus_log_coeff(spec, p - 1).scaled(Rational(1, static_cast<long>(p)));
  const QPoly l2 = genus_log_coeff(spec, p * p - 1).scaled(Rational(1, static_cast<long>(p * p)));
  EXPECT_EQ(h.v[0], l1.scaled(Rational(p)));
  EXPECT_EQ(h.v[1], l2.scaled(Rational(p)) - l1 * pow(h.v[0], p));
}

TEST(Hazewinkel, Examples) {
  const HazewinkelImages l = genus_v(genus_spec(Family::Legendre), 7, 2);
  EXPECT_EQ(l.v[0], legendre_poly(2));
  EXPECT_EQ(l.v[1], (legendre_poly(16) - pow(legendre_poly(2), 8)).scaled(Rational(1, 7)));
  EXPECT_TRUE(l.integral());
  EXPECT_EQ(genus_v(genus_spec(Family::Picard), 7, 1).v[0], Q("-1/3*G2", registries::picard()));
}

TEST(StrictIso, IdentityWhenLawsAgree) {
  const FormalGroupLaw f = fgl_from_log(genus_log(genus_spec(Family::Legendre), 16), 8);
  const StrictIso iso = strict_iso(f, f, 7);
  EXPECT_EQ(iso.theta, series_variable(QPoly(registries::kappa_lambda()), 16));
  EXPECT_TRUE(iso.p_local);
  EXPECT_TRUE(iso.log_identity);
  EXPECT_TRUE(iso.bivariate_identity);
}

TEST(Json, Shape) {
  const FormalGroupLaw f = fgl_from_log(genus_log(genus_spec(Family::Legendre), 5));
  const auto j = nlohmann::json::parse(to_json(f));
  EXPECT_EQ(j.at("truncation"), 5);
  EXPECT_TRUE(j.at("law").is_array());
  EXPECT_FALSE(j.at("law").empty());
}

}  // namespace
}  // namespace taf
