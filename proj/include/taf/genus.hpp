// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// The four genera: log' = (1 + sum c_d u^d)^e over their coefficient rings.

#ifndef TAF_GENUS_HPP
#define TAF_GENUS_HPP

#include <cstdint>
#include <string>

#include "taf/fgl.hpp"

namespace taf {

enum class Family { Legendre, Picard, Shiga, Supersingular };

/// "legendre", "picard", "shiga", "supersingular"; throws DomainError otherwise.
Family parse_family(const std::string& id);
std::string family_id(Family f);

struct GenusSpec {
  Family family;
  RegistryPtr registry;  // ring of the log coefficients
  ExponentTable table;
  Rational exponent;

  QPoly zero() const { return QPoly(registry); }
};

const GenusSpec& genus_spec(Family f);

/// The vanishing genus: any p-local coefficient failed to be p-local.
class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

/// Homogeneous Legendre polynomial P_k(kappa, lambda) by the three-term recurrence.
QPoly legendre_poly(unsigned k);

/// Coefficient of u^exponent in log'.
QPoly genus_log_coeff(const GenusSpec& spec, unsigned exponent);

/// log' and log as series to the given truncation.
PolySeries genus_log_derivative(const GenusSpec& spec, unsigned bound);
PolySeries genus_log(const GenusSpec& spec, unsigned bound);

/// Shiga log' coefficient computed from the product (1 - xi0 u^3)(1 - xi1 u^3)(1 - xi2 u^3)
/// over the xi ring, then rewritten in sigma1, sigma2, sigma3.
QPoly shiga_log_coeff_via_xi(unsigned exponent);

/// v_1, ..., v_n for p = 1 mod 3 and n <= 3. Throws IntegralityViolation
/// if some v_i is not p-local.
HazewinkelImages genus_v(const GenusSpec& spec, std::uint32_t p, unsigned n);

/// kappa^2 -> lambda - 108 Delta6 for f over (kappa, lambda) with only even
/// kappa powers; the result lives over (lambda, Delta6).
QPoly kappa_square_substitution(const QPoly& f);

/// Registry of the ring a family is certified over, and the map into it.
RegistryPtr certificate_ring(Family f);
QPoly to_certificate_ring(Family f, const QPoly& v);

}  // namespace taf

#endif  // TAF_GENUS_HPP
