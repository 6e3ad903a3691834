// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// Published congruences per (family, prime), replayed by the certifier.

#ifndef TAF_CONGRUENCES_HPP
#define TAF_CONGRUENCES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "taf/genus.hpp"

namespace taf {

struct PrintedCongruence {
  std::string name;
  /// -1: exact over Q; k >= 0: modulo (p, v_1, ..., v_k).
  int level;
  /// Compare in the ring of the genus itself rather than the certificate ring.
  bool native_ring;
  /// Polynomial in the ring variables, v1..v3, Delta_C and Q.
  std::string lhs;
  std::string rhs;
};

std::vector<PrintedCongruence> printed_congruences(Family f, std::uint32_t p);

/// Discriminant of the family's curve over its certificate ring.
QPoly family_discriminant(Family f);

/// "Delta_C", "Q" (Delta_C / sigma3^2 for shiga) or any polynomial text
/// over the certificate ring.
QPoly named_element(Family f, const std::string& name);

}  // namespace taf

#endif  // TAF_CONGRUENCES_HPP
