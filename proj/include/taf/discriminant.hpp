// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// Resultants and discriminants of univariate polynomials whose
// coefficients are multivariate polynomials.

#ifndef TAF_DISCRIMINANT_HPP
#define TAF_DISCRIMINANT_HPP

#include <string>
#include <vector>

#include "taf/mpoly.hpp"

namespace taf {

/// Coefficients low degree first; all share one registry and domain.
template <class C>
struct UniPoly {
  std::vector<MultiPoly<C>> coeffs;

  int degree() const;
  const MultiPoly<C>& leading() const { return coeffs.at(static_cast<std::size_t>(degree())); }
  UniPoly derivative() const;
};

/// Splits f by powers of `var`; the coefficients keep f's registry.
template <class C>
UniPoly<C> as_univariate(const MultiPoly<C>& f, const std::string& var);

/// Determinant of the Sylvester matrix, by fraction-free elimination.
template <class C>
MultiPoly<C> resultant(const UniPoly<C>& f, const UniPoly<C>& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
template <class C>
MultiPoly<C> discriminant(const UniPoly<C>& f);

/// Determinant of a square matrix of polynomials (Bareiss).
template <class C>
MultiPoly<C> determinant(std::vector<std::vector<MultiPoly<C>>> m);

}  // namespace taf

#endif  // TAF_DISCRIMINANT_HPP
