// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// One-dimensional formal group laws built from their logarithms.

#ifndef TAF_FGL_HPP
#define TAF_FGL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "taf/pseries.hpp"

namespace taf {

/// F(x, y) as a flat polynomial over the coefficient ring extended by x, y
/// (weight -2 each), holding every term of total (x, y)-degree below
/// `law_order`. The logarithm and exponential run to `truncation`.
struct FormalGroupLaw {
  unsigned truncation = 0;
  unsigned law_order = 0;
  PolySeries log;
  PolySeries exp;
  RegistryPtr law_registry;
  QPoly law;

  /// Coefficient of x^i y^j over the ring registry.
  QPoly coefficient(unsigned i, unsigned j) const;
  const RegistryPtr& ring() const { return log.zero().registry(); }
};

/// Requires log = u + O(u^2) with truncation >= 2. A law_order of 0 means
/// the truncation of log; larger values are clamped to it.
FormalGroupLaw fgl_from_log(const PolySeries& log, unsigned law_order = 0);

/// F(a(u), b(u)) for series without constant terms.
PolySeries apply_law(const FormalGroupLaw& f, const PolySeries& a, const PolySeries& b);

/// [n](u); negative n uses the formal inverse.
PolySeries n_series(const FormalGroupLaw& f, long n);

bool check_unit(const FormalGroupLaw& f);
bool check_commutative(const FormalGroupLaw& f);
/// F(F(x, y), z) = F(x, F(y, z)) below the law order.
bool check_associative(const FormalGroupLaw& f);
/// log(F(x, y)) = log(x) + log(y) below the law order.
bool check_log_identity(const FormalGroupLaw& f);

/// JSON: {truncation, log, law: [{i, j, coeff}]}.
std::string to_json(const FormalGroupLaw& f);

struct HazewinkelImages {
  std::uint32_t p = 0;
  std::vector<QPoly> v;               // v_1, ..., v_n
  std::vector<Valuation> valuations;  // minimum p-valuation of each v_i
  bool integral() const;
};

/// ell[k-1] is the coefficient of u^(p^k) in the logarithm.
HazewinkelImages hazewinkel_images(const std::vector<QPoly>& ell, std::uint32_t p);

struct StrictIso {
  PolySeries theta;
  std::vector<Valuation> valuations;  // per coefficient of theta
  bool p_local = false;
  bool log_identity = false;          // log_2(theta) = log_1
  unsigned bivariate_order = 0;
  bool bivariate_identity = false;    // theta(F1(x, y)) = F2(theta x, theta y)
};

/// theta = exp_2 o log_1 with an integrality report at p. The bivariate
/// identity is checked below the smaller law order of the two laws.
StrictIso strict_iso(const FormalGroupLaw& f1, const FormalGroupLaw& f2, std::uint32_t p);

}  // namespace taf

#endif  // TAF_FGL_HPP
