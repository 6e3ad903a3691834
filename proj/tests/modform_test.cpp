// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "taf/modform.hpp"

namespace taf {
namespace {

TEST(Eisenstein, LowCoefficients) {
  const QExpansion e1 = eisenstein(Eisenstein::E1, 10);
  EXPECT_EQ(e1[0], Rational(1));
  EXPECT_EQ(e1[1], Rational(6));
  EXPECT_EQ(e1[2], Rational(0));
  EXPECT_EQ(e1[3], Rational(6));
  EXPECT_EQ(e1[7], Rational(12));
  EXPECT_EQ(eisenstein(Eisenstein::E3, 5)[1], Rational(-9));
  EXPECT_EQ(eisenstein(Eisenstein::E4, 5)[1], Rational(240));
  EXPECT_EQ(eisenstein(Eisenstein::E4, 5)[2], Rational(240 * 9));
}

// Brute-force divisor sums as an oracle for the sieve.
TEST(Eisenstein, AgainstDivisorSums) {
  const unsigned n = 120;
  const QExpansion e3 = eisenstein(Eisenstein::E3, n);
  for (unsigned m = 1; m < n; ++m) {
    long s = 0;
    for (long d = 1; d <= static_cast<long>(m); ++d) {
      if (m % d != 0) continue;
      const long chi = d % 3 == 1 ? 1 : d % 3 == 2 ? -1 : 0;
      s += chi * d * d;
    }
    EXPECT_EQ(e3[m], Rational(-9 * s)) << m;
  }
}

TEST(Theta, LowCoefficients) {
  const QExpansion t = theta_a2(20);
  EXPECT_EQ(t[0], Rational(1));
  EXPECT_EQ(t[1], Rational(6));
  EXPECT_EQ(t[2], Rational(0));
  EXPECT_EQ(t[3], Rational(6));
  EXPECT_EQ(t[4], Rational(6));
}

TEST(Derived, LeadingTerms) {
  const DerivedForms d = derived_forms(20);
  EXPECT_EQ(d.delta6[0], Rational(0));
  EXPECT_EQ(d.delta6[1], Rational(1));
  EXPECT_TRUE(d.delta6.is_integral());
  EXPECT_EQ(d.lambda[0], Rational(1));
  EXPECT_EQ(d.lambda[1], Rational(36));
  EXPECT_EQ(d.jG[0], Rational(1, 4));
  EXPECT_EQ(d.kappa.weight, 3);
  EXPECT_EQ(d.delta6.weight, 6);
}

TEST(Identities, AllPassAtDefaultOrder) {
  for (const auto& id : modform_identity_ids()) {
    const IdentityVerdict v = check_modform_identity(id);
    EXPECT_TRUE(v.pass) << id << ": " << v.witness;
  }
}

TEST(Identities, UnknownIdThrows) { EXPECT_THROW(check_modform_identity("e6-eisenstein", 20), DomainError); }

TEST(Basis, SmallCases) {
  const BasisCheck k0 = integral_basis_check(0, 20);
  EXPECT_TRUE(k0.pass);
  ASSERT_EQ(k0.matrix.size(), 1u);
  EXPECT_EQ(k0.matrix[0][0], Rational(1));

  const BasisCheck k1 = integral_basis_check(1, 20);
  EXPECT_TRUE(k1.pass);
  EXPECT_EQ(k1.matrix[0], (std::vector<Rational>{Rational(1), Rational(36)}));
  EXPECT_EQ(k1.matrix[1], (std::vector<Rational>{Rational(0), Rational(1)}));
}

TEST(Basis, UpToTen) {
  for (unsigned k = 0; k <= 10; ++k) EXPECT_TRUE(integral_basis_check(k, 60).pass) << k;
}

TEST(Forms, TextAndNames) {
  EXPECT_EQ(form_by_name("Delta6", 5).to_text(), "0, 1, -6, 9, 4");
  EXPECT_EQ(form_by_name("E1", 4).to_text(), "1, 6, 0, 6");
  EXPECT_EQ(form_names().size(), 8u);
  EXPECT_THROW(form_by_name("E2", 5), DomainError);
  EXPECT_THROW(eisenstein(Eisenstein::E1, 0), DomainError);
}

}  // namespace
}  // namespace taf
