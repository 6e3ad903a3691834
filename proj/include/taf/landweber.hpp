// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// Regularity and unit checks for (p, v_1, ..., v_h) over F_p, driven by a
// triangular elimination plan instead of a Groebner basis.

#ifndef TAF_LANDWEBER_HPP
#define TAF_LANDWEBER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taf/division.hpp"
#include "taf/genus.hpp"

namespace taf {

class NotTriangularizable : public Error {
 public:
  using Error::Error;
};

class NoRelationFound : public Error {
 public:
  using Error::Error;
};

struct PlanStep {
  enum class Kind { Solve, Principal };
  Kind kind;
  std::size_t var;       // solved variable, or the leading variable of a principal divisor
  FpPoly divisor;        // the generator reduced by the earlier steps
  std::vector<FpPoly> membership;  // generator - divisor = sum membership[j] * divisor_j (j < this step)
};

/// Generators over F_p with an elimination plan: linear solves first, then
/// principal divisors with pairwise coprime leading monomials.
struct TriangularIdeal {
  std::uint32_t p = 0;
  RegistryPtr registry;
  std::vector<FpPoly> generators;
  std::vector<PlanStep> steps;

  /// Lex order used to divide by the principal divisors.
  MonomialOrder principal_order() const;
  /// Variables not eliminated by a Solve step.
  std::vector<std::size_t> free_variables() const;
  bool quotient_is_polynomial_ring() const;
};

TriangularIdeal build_plan(std::uint32_t p, const std::vector<FpPoly>& generators);

struct NormalForm {
  FpPoly remainder;
  std::vector<FpPoly> cofactors;  // f - remainder = sum cofactors[i] * steps[i].divisor
};

NormalForm reduce_with_witness(const FpPoly& f, const TriangularIdeal& ideal);
FpPoly reduce_mod_ideal(const FpPoly& f, const TriangularIdeal& ideal);
/// Re-checks the cofactor identities of a normal form and of the plan itself.
bool verify_witness(const FpPoly& f, const NormalForm& nf, const TriangularIdeal& ideal);

/// f^n reduced after every product.
FpPoly power_mod_ideal(const FpPoly& f, unsigned long n, const TriangularIdeal& ideal);

struct StepVerdict {
  unsigned index;       // 0 for p itself
  bool pass;
  std::string detail;
};

/// Step 0 records p; step i checks that v_i is a non-zero-divisor modulo the
/// earlier generators. Past a principal divisor d this is decided by Res(d, v_i).
std::vector<StepVerdict> check_regular(std::uint32_t p, const std::vector<FpPoly>& vs);
/// Same for v_1..v_h of a family over its certificate ring.
std::vector<StepVerdict> check_regular(Family f, std::uint32_t p, unsigned height);

struct UnitRelation {
  unsigned a = 0;
  Fp c;
  unsigned long e = 0;
};

inline constexpr unsigned kMaxUnitPower = 24;

/// Smallest a <= kMaxUnitPower with v^a = c D^e modulo the ideal, where e is
/// forced by degrees. Throws NoRelationFound.
UnitRelation check_unit_power(const FpPoly& v, const FpPoly& d, const TriangularIdeal& ideal, long degree_v);

struct CertificateCheck {
  std::string name;
  bool pass = false;
  /// Replays a published congruence rather than deciding exactness.
  bool printed = false;
  std::string lhs;
  std::string rhs;
  std::string witness;  // residual normal form, "0" on success
};

struct LandweberCertificate {
  Family family;
  std::uint32_t p = 0;
  unsigned height = 0;
  std::string inverted;
  std::vector<std::string> v;  // v_i reduced modulo (p, v_1, ..., v_{i-1})
  std::vector<CertificateCheck> checks;
  std::optional<UnitRelation> relation;
  std::map<std::string, double> timings_ms;

  /// Regularity and the unit relation; printed congruences do not count.
  bool passed() const;
  bool printed_agree() const;
  /// Deterministic unless `with_timings`.
  std::string to_json(bool with_timings = false) const;
};

unsigned default_height(Family f);
std::string default_inverted(Family f);

/// Full run: genus images, regularity, unit relation, printed congruences.
LandweberCertificate certify(Family f, std::uint32_t p, unsigned height, const std::string& inverted);

}  // namespace taf

#endif  // TAF_LANDWEBER_HPP
