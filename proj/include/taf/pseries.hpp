// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// Truncated univariate power series over Q or over a polynomial ring.

#ifndef TAF_PSERIES_HPP
#define TAF_PSERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "taf/mpoly.hpp"

namespace taf {

/// Uniform access to the coefficient rings a series may use.
template <class R>
struct RingOps;

template <>
struct RingOps<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static Rational scale(const Rational& x, const Rational& r) { return x * r; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static std::string to_string(const Rational& x) { return x.to_string(); }
  /// Inverse of a unit; throws DomainError otherwise.
  static Rational unit_inverse(const Rational& x);
  static bool scalar_invertible(const Rational&, const Rational& r) { return !r.is_zero(); }
};

template <class C>
struct RingOps<MultiPoly<C>> {
  using P = MultiPoly<C>;
  static P zero_like(const P& x) { return x.zero_like(); }
  static P one_like(const P& x) { return x.one_like(); }
  static P scale(const P& x, const Rational& r) { return x.scaled_rational(r); }
  static bool is_zero(const P& x) { return x.is_zero(); }
  static std::string to_string(const P& x) { return taf::to_string(x); }
  static P unit_inverse(const P& x);
  /// Whether r is defined and nonzero in the coefficient domain of x.
  static bool scalar_invertible(const P& x, const Rational& r);
};

template <class R>
class TruncatedSeries {
 public:
  /// Empty placeholder with bound 0.
  TruncatedSeries() = default;
  /// Zero series; `zero` fixes the coefficient ring (registry and domain).
  TruncatedSeries(R zero, unsigned bound, std::string var = "u");
  /// Coefficients c_0, c_1, ...; those at or beyond `bound` are dropped.
  TruncatedSeries(std::vector<R> coeffs, R zero, unsigned bound, std::string var = "u");

  unsigned bound() const { return bound_; }
  const std::string& var() const { return var_; }
  const R& zero() const { return zero_; }
  /// Coefficient of var^k; throws DomainError unless k < bound.
  const R& operator[](unsigned k) const;
  void set(unsigned k, R value);
  const std::vector<R>& coeffs() const { return c_; }

  TruncatedSeries with_bound(unsigned bound) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return combine(a, b, false); }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return combine(a, b, true); }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return product(a, b); }
  TruncatedSeries scaled(const Rational& r) const;
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return equal(a, b); }

  std::string to_string() const;

 private:
  static TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, bool subtract);
  static TruncatedSeries product(const TruncatedSeries& a, const TruncatedSeries& b);
  static bool equal(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string var_ = "u";
  unsigned bound_ = 0;
  R zero_{};
  std::vector<R> c_;  // size == bound_
};

using QSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<QPoly>;
using FpPolySeries = TruncatedSeries<FpPoly>;

/// var itself.
template <class R>
TruncatedSeries<R> series_variable(const R& zero, unsigned bound, std::string var = "u");

/// f(g); requires g(0) = 0.
template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g);

/// 1/f; requires f(0) a unit.
template <class R>
TruncatedSeries<R> inverse(const TruncatedSeries<R>& f);

/// Compositional inverse of f = u + O(u^2), by Newton iteration.
template <class R>
TruncatedSeries<R> revert(const TruncatedSeries<R>& f);

/// f^e for f(0) = 1, by the power recurrence.
template <class R>
TruncatedSeries<R> fractional_power(const TruncatedSeries<R>& f, const Rational& e);

/// Same value as fractional_power by summing binomial(e, k) (f - 1)^k.
template <class R>
TruncatedSeries<R> fractional_power_binomial(const TruncatedSeries<R>& f, const Rational& e);

template <class R>
TruncatedSeries<R> integrate(const TruncatedSeries<R>& f);

template <class R>
TruncatedSeries<R> derivative(const TruncatedSeries<R>& f);

/// f^n for n >= 0.
template <class R>
TruncatedSeries<R> pow(const TruncatedSeries<R>& f, unsigned n);

/// Sparse description of 1 + sum_d c_d u^d.
using ExponentTable = std::map<unsigned, QPoly>;

/// 1 + sum c_d u^d as a series; `zero` is the coefficient ring's zero.
PolySeries series_from_table(const ExponentTable& table, const QPoly& zero, unsigned bound);

/// Coefficient of u^target in (1 + sum c_d u^d)^e, summed over compositions
/// sum n_d d = target without expanding the series.
QPoly isolated_coeff_fractional_power(const ExponentTable& table, const Rational& e, unsigned target,
                                      const QPoly& zero);
/// Serial reference for the parallel sum above.
QPoly isolated_coeff_fractional_power_serial(const ExponentTable& table, const Rational& e, unsigned target,
                                             const QPoly& zero);

/// Generalized binomial coefficient e(e-1)...(e-k+1)/k!.
Rational binomial(const Rational& e, unsigned k);

}  // namespace taf

#endif  // TAF_PSERIES_HPP
