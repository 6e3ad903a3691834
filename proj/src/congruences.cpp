// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/congruences.hpp"

#include "taf/division.hpp"

namespace taf {

namespace {

const char* const kPicardDisc =
    "16*G2^4*G4 - 4*G2^3*G3^2 - 128*G2^2*G4^2 + 144*G2*G3^2*G4 - 27*G3^4 + 256*G4^3";
const char* const kShigaQ =
    "sigma2^2*sigma1^2 - 4*sigma2^3 - 4*sigma3*sigma1^3 + 18*sigma3*sigma2*sigma1 - 27*sigma3^2";

const char* const kPicard13V2 =
    "12*G2^28 + 4*G2^25*G3^2 + 10*G2^22*G3^4 + 4*G2^19*G3^6 + 7*G2^16*G3^8 + 10*G2^13*G3^10"
    " + 4*G2^10*G3^12 + 6*G2^7*G3^14 + 3*G2^4*G3^16 + 8*G2*G3^18";
const char* const kPicard13V3 =
    "2*G2^27*G3^226 + 6*G2^24*G3^228 + 11*G2^21*G3^230 + 3*G2^18*G3^232 + 9*G2^15*G3^234"
    " + 2*G2^12*G3^236 + 3*G2^9*G3^238 + 9*G2^6*G3^240 + 9*G2^3*G3^242 + 8*G3^244";

const char* const kShiga7V2 =
    "2*sigma1^16 + 2*sigma1^13*sigma3 + 4*sigma1^10*sigma3^2 + 6*sigma1^7*sigma3^3"
    " + 3*sigma1^4*sigma3^4 + 4*sigma1*sigma3^5";
const char* const kShiga7V3 = "2*sigma1^12*sigma3^34 + 4*sigma1^9*sigma3^35 + sigma1^6*sigma3^36 + 6*sigma3^38";
const char* const kShiga7V3Sq = "4*sigma1^12*sigma3^72 + sigma1^9*sigma3^73 + 2*sigma1^6*sigma3^74 + sigma3^76";

}  // namespace

std::vector<PrintedCongruence> printed_congruences(Family f, std::uint32_t p) {
  switch (f) {
    case Family::Legendre:
      if (p == 7) {
        return {
            {"v1 = P_2", -1, true, "v1", "3/2*kappa^2 - 1/2*lambda"},
            {"v1 = lambda - Delta6 mod 7", 0, false, "v1", "lambda - Delta6"},
            {"v2 = Delta6^8 mod (7, v1)", 1, false, "v2", "Delta6^8"},
        };
      }
      if (p == 13) {
        return {
            {"v1 mod 13", 0, true, "v1", "6*kappa^4 + 6*kappa^2*lambda + 2*lambda^2"},
            {"v2 = lambda^28 mod (13, v1)", 1, false, "v2", "lambda^28"},
            {"v2 = Delta6^28 mod (13, v1)", 1, false, "v2", "Delta6^28"},
        };
      }
      return {};
    case Family::Picard:
      if (p == 7) {
        return {
            {"v1 = -G2/3", -1, true, "v1", "-1/3*G2"},
            {"v1 = 2 G2 mod 7", 0, false, "v1", "2*G2"},
            {"v2 mod (7, v1)", 1, false, "v2", "G4^4 - 2*G3^4*G4"},
            {"Delta_C mod (7, v1)", 1, false, "Delta_C", "G3^4 + 4*G4^3"},
            {"v3^2 as a square mod (7, v1, v2)", 2, false, "v3^2", "(G3^34*(6*G3^4 + 2*G4^3))^2"},
            {"v3^2 mod (7, v1, v2)", 2, false, "v3^2", "G3^76 + 4*G3^72*G4^3"},
            {"Delta_C^19 mod (7, v1, v2)", 2, false, "Delta_C^19", "G3^76 + 4*G3^72*G4^3"},
            {"Delta_C^57 = G3^228 mod (7, v1, v2)", 2, false, "Delta_C^57", "G3^228"},
        };
      }
      if (p == 13) {
        return {
            {"v1 mod 13", 0, false, "v1", "6*G2^2 + 4*G4"},
            {"v2 mod (13, v1)", 1, false, "v2", kPicard13V2},
            {"v3 mod (13, v1, v2)", 2, false, "v3", kPicard13V3},
            {"Delta_C^366 = -v3^6 mod (13, v1, v2)", 2, false, "Delta_C^366", "-v3^6"},
            {"v3^18 = -G3^4392 mod (13, v1, v2)", 2, false, "v3^18", "-G3^4392"},
        };
      }
      return {};
    case Family::Shiga:
      if (p == 7) {
        return {
            {"v1 exact", -1, true, "v1", "2/9*sigma1^2 - 1/3*sigma2"},
            {"v1 mod 7", 0, false, "v1", "sigma1^2 + 2*sigma2"},
            {"v2 mod (7, v1)", 1, false, "v2", kShiga7V2},
            {"v3 mod (7, v1, v2)", 2, false, "v3", kShiga7V3},
            {"v3^2 mod (7, v1, v2)", 2, false, "v3^2", kShiga7V3Sq},
            {"Delta_C^19 mod (7, v1, v2)", 2, false, "Delta_C^19", kShiga7V3Sq},
            {"v3^3 = -sigma3^114 mod (7, v1, v2)", 2, false, "v3^3", "-sigma3^114"},
            {"v3^6 = Delta_C^57 mod (7, v1, v2)", 2, false, "v3^6", "Delta_C^57"},
            {"v3^3 = -Q^57 mod (7, v1, v2)", 2, false, "v3^3", "-Q^57"},
        };
      }
      return {};
    case Family::Supersingular:
      return {};
  }
  return {};
}

QPoly family_discriminant(Family f) {
  switch (f) {
    case Family::Picard:
      return parse_poly<Rational>(kPicardDisc, registries::picard());
    case Family::Shiga:
      return parse_poly<Rational>(std::string("sigma3^2*(") + kShigaQ + ")", registries::sigma());
    case Family::Legendre:
      // 2^6 3^6 lambda^2 (lambda - kappa^2)^2 with lambda - kappa^2 = 108 Delta6.
      return parse_poly<Rational>("2^10*3^12*lambda^2*Delta6^2", registries::lambda_delta6());
    case Family::Supersingular:
      break;
  }
  throw DomainError("family " + family_id(f) + " has no discriminant in this library");
}

QPoly named_element(Family f, const std::string& name) {
  if (name == "Delta_C") return family_discriminant(f);
  if (name == "Q") {
    if (f != Family::Shiga) throw DomainError("Q is defined for the shiga family only");
    return parse_poly<Rational>(kShigaQ, registries::sigma());
  }
  return parse_poly<Rational>(name, certificate_ring(f));
}

}  // namespace taf
