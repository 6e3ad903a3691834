// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// q-expansions of the level-3 forms E1, E3, E4 and the forms built from them.

#ifndef TAF_MODFORM_HPP
#define TAF_MODFORM_HPP

#include <string>
#include <vector>

#include "taf/pseries.hpp"
#include "taf/verdict.hpp"

namespace taf {

inline constexpr unsigned kDefaultQOrder = 200;

struct QExpansion {
  QSeries series;  // in q, truncated at O(q^N)
  int weight = 0;  // modular weight; the topological degree is twice this

  unsigned order() const { return series.bound(); }
  const Rational& operator[](unsigned k) const { return series[k]; }
  bool is_integral() const;
  /// "a0, a1, ..., a_{N-1}".
  std::string to_text() const;
};

enum class Eisenstein { E1, E3, E4 };

/// Divisor-sum expansion to O(q^n).
QExpansion eisenstein(Eisenstein id, unsigned n);

/// Theta series of the A2 lattice, sum over m^2 + mn + n^2 < N.
QExpansion theta_a2(unsigned n);

struct DerivedForms {
  QExpansion kappa;   // 2 E3 - E1^3
  QExpansion lambda;  // E1^6
  QExpansion delta6;  // E3 (E1^3 - E3) / 27
  QExpansion e4;      // 9 E4(3 tau) - E4(tau)
  QExpansion jG;      // lambda / (-2 kappa)^2
};

DerivedForms derived_forms(unsigned n);

/// One of E1, E3, E4, e4, kappa, lambda, Delta6, jG; throws DomainError otherwise.
QExpansion form_by_name(const std::string& id, unsigned n);
const std::vector<std::string>& form_names();

/// e4-eisenstein, kappa-square, theta-a2, delta6-integral, lambda-leading, j-at-cusp.
const std::vector<std::string>& modform_identity_ids();
IdentityVerdict check_modform_identity(const std::string& id, unsigned n = kDefaultQOrder);

struct BasisCheck {
  bool pass = false;
  /// rows b = 0..k: leading q-coefficients q^0..q^k of lambda^(k-b) Delta6^b.
  std::vector<std::vector<Rational>> matrix;
};

/// Triangularity with unit diagonal of the weight-6k products of lambda and Delta6.
BasisCheck integral_basis_check(unsigned k, unsigned n = kDefaultQOrder);

}  // namespace taf

#endif  // TAF_MODFORM_HPP
