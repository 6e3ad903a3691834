// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "taf/discriminant.hpp"
#include "taf/division.hpp"
#include "taf/genus.hpp"
#include "taf/mpoly.hpp"
#include "taf/suite.hpp"
#include "taf/symmetric.hpp"

namespace taf {
namespace {

QPoly Q(const std::string& text, const RegistryPtr& reg) { return parse_poly<Rational>(text, reg); }
FpPoly F(const std::string& text, const RegistryPtr& reg, std::uint32_t p) {
  return parse_poly<Fp>(text, reg, PrimeField(p));
}

TEST(Multiply, Examples) {
  const auto kl = registries::kappa_lambda();
  EXPECT_EQ(Q("kappa", kl) * Q("kappa", kl), Q("kappa^2", kl));
  EXPECT_EQ(Q("lambda - kappa^2", kl) * Q("lambda - kappa^2", kl), Q("lambda^2 - 2*kappa^2*lambda + kappa^4", kl));
}

// Dense convolution over exponent tuples, independent of the sparse kernels.
std::map<std::vector<int>, long> convolve(const FpPoly& f, const FpPoly& g, long p) {
  std::map<std::vector<int>, long> out;
  const std::size_t n = f.registry()->size();
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      std::vector<int> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = a.mono[i] + b.mono[i];
      long& c = out[e];
      c = (c + static_cast<long>(a.coeff.residue()) * b.coeff.residue()) % p;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TEST(Multiply, PrimeFieldExampleAgainstConvolution) {
  const auto reg = registries::picard();
  const FpPoly f = F("G4^4 - 2*G3^4*G4", reg, 7);
  const FpPoly g = F("G4", reg, 7);
  const FpPoly h = f * g;
  EXPECT_EQ(h, F("G4^5 - 2*G3^4*G4^2", reg, 7));
  const auto oracle = convolve(f, g, 7);
  ASSERT_EQ(oracle.size(), h.size());
  for (const auto& t : h.terms()) {
    std::vector<int> e(reg->size());
    for (std::size_t i = 0; i < reg->size(); ++i) e[i] = t.mono[i];
    EXPECT_EQ(oracle.at(e), static_cast<long>(t.coeff.residue()));
  }
}

TEST(Multiply, RandomAgainstConvolution) {
  std::mt19937_64 rng(5);
  const auto reg = registries::picard();
  for (int i = 0; i < 20; ++i) {
    const FpPoly f = reduce_mod_p(random_poly(reg, rng, 30, 8), 13);
    const FpPoly g = reduce_mod_p(random_poly(reg, rng, 30, 8), 13);
    EXPECT_EQ((f * g).size(), convolve(f, g, 13).size());
  }
}

TEST(WeightedDegree, Examples) {
  const auto pic = registries::picard();
  const QPoly disc = Q("16*G2^4*G4 - 4*G2^3*G3^2 - 128*G2^2*G4^2 + 144*G2*G3^2*G4 - 27*G3^4 + 256*G4^3", pic);
  EXPECT_EQ(weighted_degree(disc).degree, 72);
  EXPECT_TRUE(weighted_degree(disc).homogeneous);
  EXPECT_EQ(weighted_degree(legendre_poly(2)).degree, 12);
  EXPECT_EQ(weighted_degree(QPoly::integer(pic, 1)).degree, 0);
  EXPECT_FALSE(is_homogeneous(Q("G2 + G3", pic)));
  EXPECT_THROW(weighted_degree(QPoly(pic)), DomainError);
}

TEST(Substitute, Examples) {
  const auto kl = registries::kappa_lambda();
  EXPECT_EQ(substitute(Q("kappa^2", kl), {{"kappa", Q("kappa", kl)}}, kl), Q("kappa^2", kl));
  const QPoly g3 = substitute(Q("G3", registries::picard()),
                              {{"G2", Q("-1/4*lambda - 1/8*kappa^2", kl)},
                               {"G3", Q("1/8*kappa*lambda", kl)},
                               {"G4", Q("1/256*kappa^4 - 1/64*kappa^2*lambda", kl)}},
                              kl);
  EXPECT_EQ(g3, Q("1/8*kappa*lambda", kl));
}

TEST(Substitute, MissingImageThrows) {
  EXPECT_THROW(substitute(Q("G2", registries::picard()), {}, registries::kappa_lambda()), DomainError);
}

TEST(Substitute, LegendreP4ModThirteen) {
  const QPoly v1 = kappa_square_substitution(legendre_poly(4));
  const auto ld = registries::lambda_delta6();
  EXPECT_EQ(reduce_mod_p(v1, 13), F("(lambda + Delta6)*(lambda + 5*Delta6)", ld, 13));
}

TEST(Parse, RoundTripRandom) {
  std::mt19937_64 rng(17);
  for (const auto& reg : {registries::picard(), registries::kappa_lambda(), registries::sigma()}) {
    for (int i = 0; i < 30; ++i) {
      const QPoly f = random_poly(reg, rng, 8, 5);
      EXPECT_EQ(Q(to_string(f), reg), f);
    }
  }
}

TEST(Parse, Errors) {
  const auto reg = registries::picard();
  EXPECT_THROW(Q("G2 +", reg), ParseError);
  EXPECT_THROW(Q("G5", reg), Error);
  EXPECT_THROW(Q("(G2", reg), ParseError);
}

TEST(Divide, MembershipExample) {
  const auto reg = registries::picard();
  const auto res = divide(F("G2*G3", reg, 7), {F("G2", reg, 7)}, MonomialOrder::lex(reg));
  EXPECT_TRUE(res.remainder.is_zero());
}

TEST(Divide, OneStepExample) {
  const auto reg = registries::picard();
  const FpPoly f = F("G4^5", reg, 7);
  const FpPoly d = F("G4^4 - 2*G3^4*G4", reg, 7);
  const MonomialOrder order = MonomialOrder::lex(reg, {reg->require("G4"), reg->require("G3")});
  const auto res = divide(f, {d}, order);
  EXPECT_EQ(res.remainder, F("2*G3^4*G4^2", reg, 7));
  EXPECT_EQ(res.remainder, f - F("G4", reg, 7) * d);
}

TEST(Divide, SharedLeadVariablesRejected) {
  const auto reg = registries::picard();
  const MonomialOrder lex = MonomialOrder::lex(reg);
  EXPECT_THROW(divide(Q("G2^3", reg), {Q("G2^2 + G3", reg), Q("G2*G4 + 1", reg)}, lex), UniquenessNotGuaranteed);
}

TEST(Discriminant, PicardQuartic) {
  const auto reg = registries::picard()->extended({{"x", 6}});
  const QPoly d = discriminant(as_univariate(Q("x^4 + G2*x^2 + G3*x + G4", reg), "x"));
  EXPECT_EQ(d, Q("16*G2^4*G4 - 4*G2^3*G3^2 - 128*G2^2*G4^2 + 144*G2*G3^2*G4 - 27*G3^4 + 256*G4^3", reg));
}

TEST(Discriminant, SexticRepeatedRootsAndSign) {
  const auto reg = registries::kappa_lambda()->extended({{"x", 2}});
  const QPoly d = discriminant(as_univariate(Q("x^6 - 2*kappa*x^3 + lambda", reg), "x"));
  EXPECT_TRUE(evaluate(d, {Rational(1), Rational(1), Rational(0)}).is_zero());
  // x^6 + 1 has discriminant -6^6.
  EXPECT_EQ(evaluate(d, {Rational(0), Rational(1), Rational(0)}), Rational(-46656));
}

// Product of squared root differences for a polynomial given by its roots.
TEST(Discriminant, AgainstRootProduct) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> root(-9, 9);
  const auto reg = make_registry({{"x", 2}});
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 2 + trial % 4;
    std::vector<long> roots;
    QPoly f = QPoly::integer(reg, 1);
    for (unsigned i = 0; i < n; ++i) {
      roots.push_back(root(rng));
      f *= QPoly::variable(reg, "x") - QPoly::integer(reg, roots.back());
    }
    Rational expected(1);
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) expected = expected * Rational((roots[i] - roots[j]) * (roots[i] - roots[j]));
    }
    EXPECT_EQ(discriminant(as_univariate(f, "x")).constant_term(), expected);
  }
}

TEST(Resultant, VanishesOnCommonRoot) {
  const auto reg = make_registry({{"a", 2}, {"x", 2}});
  const QPoly f = Q("(x - a)*(x + 3)", reg);
  const QPoly g = Q("(x - a)*(x^2 + 1)", reg);
  EXPECT_TRUE(resultant(as_univariate(f, "x"), as_univariate(g, "x")).is_zero());
  EXPECT_EQ(resultant(as_univariate(Q("x - 2", reg), "x"), as_univariate(Q("x - 5", reg), "x")).constant_term(),
            Rational(-3));
}

TEST(Elementary, Examples) {
  const auto xi = registries::xi();
  const auto sigma = registries::sigma();
  EXPECT_EQ(express_in_elementary(Q("xi0 + xi1 + xi2", xi), sigma), Q("sigma1", sigma));
  EXPECT_EQ(express_in_elementary(Q("(xi0*xi1*xi2)^2", xi), sigma), Q("sigma3^2", sigma));
  EXPECT_EQ(express_in_elementary(Q("(xi0*xi1*xi2*(xi0 - xi1)*(xi1 - xi2)*(xi2 - xi0))^2", xi), sigma),
            Q("sigma3^2*(sigma2^2*sigma1^2 - 4*sigma2^3 - 4*sigma3*sigma1^3 + 18*sigma3*sigma2*sigma1 - 27*sigma3^2)",
              sigma));
}

TEST(Elementary, RejectsNonSymmetric) {
  EXPECT_THROW(express_in_elementary(Q("xi0^2 + xi1", registries::xi()), registries::sigma()), NotSymmetric);
}

TEST(Elementary, RoundTripRandom) {
  std::mt19937_64 rng(29);
  const auto sigma = registries::sigma();
  const auto images = elementary_images(registries::xi(), sigma);
  for (int i = 0; i < 15; ++i) {
    const QPoly s = random_poly(sigma, rng, 5, 4);
    EXPECT_EQ(express_in_elementary(substitute(s, images, registries::xi()), sigma), s);
  }
}

}  // namespace
}  // namespace taf
