// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "taf/congruences.hpp"
#include "taf/genus.hpp"
#include "taf/landweber.hpp"

namespace taf {
namespace {

FpPoly F(const std::string& text, const RegistryPtr& reg, std::uint32_t p) {
  return parse_poly<Fp>(text, reg, PrimeField(p));
}

TEST(Plan, SolvesLinearGenerators) {
  const auto pic = registries::picard();
  const TriangularIdeal i7 = build_plan(7, {F("2*G2", pic, 7)});
  ASSERT_EQ(i7.steps.size(), 1u);
  EXPECT_EQ(i7.steps[0].kind, PlanStep::Kind::Solve);
  EXPECT_EQ(i7.steps[0].var, pic->require("G2"));

  const TriangularIdeal i13 = build_plan(13, {F("6*G2^2 + 4*G4", pic, 13)});
  EXPECT_EQ(i13.steps[0].var, pic->require("G4"));
  EXPECT_TRUE(reduce_mod_ideal(F("G4 - 5*G2^2", pic, 13), i13).is_zero());

  const auto sigma = registries::sigma();
  const TriangularIdeal s7 = build_plan(7, {F("sigma1^2 + 2*sigma2", sigma, 7)});
  EXPECT_EQ(s7.steps[0].var, sigma->require("sigma2"));
  EXPECT_TRUE(reduce_mod_ideal(F("sigma2 - 3*sigma1^2", sigma, 7), s7).is_zero());
  EXPECT_TRUE(s7.quotient_is_polynomial_ring());
}

TEST(Plan, RejectsDependentGenerators) {
  const auto pic = registries::picard();
  EXPECT_THROW(build_plan(7, {F("G2", pic, 7), F("3*G2", pic, 7)}), NotTriangularizable);
}

TEST(Reduce, PicardSevenExamples) {
  const auto pic = registries::picard();
  const TriangularIdeal ideal = build_plan(7, {F("2*G2", pic, 7)});
  const QPoly v2 = genus_v(genus_spec(Family::Picard), 7, 2).v[1];
  EXPECT_EQ(reduce_mod_ideal(reduce_mod_p(v2, 7), ideal), F("G4^4 - 2*G3^4*G4", pic, 7));
  EXPECT_EQ(reduce_mod_ideal(reduce_mod_p(family_discriminant(Family::Picard), 7), ideal), F("G3^4 + 4*G4^3", pic, 7));
  EXPECT_TRUE(reduce_mod_ideal(F("2*G2", pic, 7), ideal).is_zero());
}

TEST(Reduce, WitnessVerifies) {
  const auto pic = registries::picard();
  const TriangularIdeal ideal = build_plan(7, {F("2*G2", pic, 7), F("G4^4 - 2*G3^4*G4", pic, 7)});
  const FpPoly f = F("G4^9 + G2*G3^5 + 3*G3^2*G4^6", pic, 7);
  const NormalForm nf = reduce_with_witness(f, ideal);
  EXPECT_TRUE(verify_witness(f, nf, ideal));
  EXPECT_EQ(power_mod_ideal(f, 5, ideal), reduce_mod_ideal(pow(nf.remainder, 5), ideal));
}

TEST(Regular, Families) {
  for (auto [f, p] : std::vector<std::pair<Family, std::uint32_t>>{
           {Family::Picard, 7}, {Family::Legendre, 7}, {Family::Shiga, 7}, {Family::Legendre, 13}}) {
    for (const auto& step : check_regular(f, p, default_height(f))) {
      EXPECT_TRUE(step.pass) << family_id(f) << " p=" << p << " step " << step.index << ": " << step.detail;
    }
  }
}

TEST(Regular, ZeroIsNotRegular) {
  const auto pic = registries::picard();
  const auto steps = check_regular(7, {F("2*G2", pic, 7), FpPoly(pic, PrimeField(7))});
  EXPECT_FALSE(steps.back().pass);
}

TEST(Unit, Relations) {
  struct Case {
    Family f;
    std::uint32_t p;
    const char* d;
    unsigned a;
    std::uint32_t c;
    unsigned long e;
  };
  for (const Case& k : {Case{Family::Picard, 7, "Delta_C", 2, 1, 19}, Case{Family::Picard, 7, "G3", 3, 6, 114},
                        Case{Family::Shiga, 7, "sigma3", 3, 6, 114}, Case{Family::Legendre, 7, "Delta6", 1, 1, 8},
                        Case{Family::Legendre, 13, "Delta6", 1, 1, 28}}) {
    const LandweberCertificate cert = certify(k.f, k.p, default_height(k.f), k.d);
    ASSERT_TRUE(cert.relation.has_value()) << k.d;
    EXPECT_EQ(cert.relation->a, k.a) << family_id(k.f) << " " << k.d;
    EXPECT_EQ(cert.relation->c.residue(), k.c);
    EXPECT_EQ(cert.relation->e, k.e);
    EXPECT_TRUE(cert.passed());
  }
}

TEST(Certificate, PicardThirteen) {
  const LandweberCertificate cert = certify(Family::Picard, 13, 3, "Delta_C");
  EXPECT_TRUE(cert.passed());
  ASSERT_TRUE(cert.relation.has_value());
  EXPECT_EQ(cert.relation->a, 6u);
  EXPECT_EQ(cert.relation->c.residue(), 12u);
  EXPECT_EQ(cert.relation->e, 366u);
  EXPECT_EQ(cert.v[0], "6*G2^2 + 4*G4");
  // Computed here and confirmed against v3^6 = -Delta_C^366 and v3^18 = -G3^4392.
  EXPECT_EQ(cert.v[2],
            "2*G2^27*G3^226 + 6*G2^24*G3^228 + 8*G2^21*G3^230 + 8*G2^18*G3^232 + 11*G2^15*G3^234 + "
            "9*G2^12*G3^236 + 5*G2^9*G3^238 + 2*G2^6*G3^240 + 10*G2^3*G3^242 + 8*G3^244");
  std::vector<std::string> disagreeing;
  for (const auto& c : cert.checks) {
    if (!c.pass) disagreeing.push_back(c.name);
  }
  EXPECT_EQ(disagreeing, std::vector<std::string>{"v3 mod (13, v1, v2)"});
  EXPECT_FALSE(cert.printed_agree());
}

TEST(Certificate, PicardThirteenThroughG3) {
  const LandweberCertificate cert = certify(Family::Picard, 13, 3, "G3");
  ASSERT_TRUE(cert.relation.has_value());
  EXPECT_EQ(cert.relation->a, 9u);
  EXPECT_EQ(cert.relation->c.residue(), 8u);
  EXPECT_EQ(cert.relation->e, 2196u);
}

TEST(Certificate, RejectsBadInput) {
  EXPECT_THROW(certify(Family::Picard, 5, 3, "Delta_C"), DomainError);
  EXPECT_THROW(certify(Family::Picard, 7, 4, "Delta_C"), DomainError);
  EXPECT_THROW(certify(Family::Supersingular, 7, 3, "Delta_C"), Error);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Certificate, JsonMatchesGolden) {
  for (auto [f, p, name] : std::vector<std::tuple<Family, std::uint32_t, std::string>>{
           {Family::Legendre, 7, "legendre-p7"},
           {Family::Legendre, 13, "legendre-p13"},
           {Family::Picard, 7, "picard-p7"},
           {Family::Shiga, 7, "shiga-p7"}}) {
    const std::string json = certify(f, p, default_height(f), default_inverted(f)).to_json();
    EXPECT_EQ(json + "\n", read_file(std::string(TAF_GOLDEN_DIR) + "/" + name + ".json")) << name;
  }
}

TEST(Certificate, JsonSchema) {
  const LandweberCertificate cert = certify(Family::Picard, 7, 3, "Delta_C");
  EXPECT_EQ(cert.to_json(), cert.to_json());
  const auto j = nlohmann::json::parse(cert.to_json());
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("family"), "picard");
  EXPECT_EQ(j.at("prime"), 7);
  EXPECT_EQ(j.at("relation").at("e"), 19);
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_FALSE(j.contains("timings_ms"));
  EXPECT_TRUE(nlohmann::json::parse(cert.to_json(true)).contains("timings_ms"));
}

}  // namespace
}  // namespace taf
