// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/discriminant.hpp"

#include "taf/division.hpp"

namespace taf {

template <class C>
int UniPoly<C>::degree() const {
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
    if (!coeffs[static_cast<std::size_t>(d)].is_zero()) return d;
  }
  return -1;
}

template <class C>
UniPoly<C> UniPoly<C>::derivative() const {
  UniPoly out;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    const auto& c = coeffs[k];
    out.coeffs.push_back(c.scaled(c.domain().from_int(static_cast<long>(k))));
  }
  if (out.coeffs.empty() && !coeffs.empty()) out.coeffs.push_back(coeffs[0].zero_like());
  return out;
}

template <class C>
UniPoly<C> as_univariate(const MultiPoly<C>& f, const std::string& var) {
  const std::size_t v = f.registry()->require(var);
  UniPoly<C> out;
  const int d = degree_in(f, v);
  for (int k = 0; k <= std::max(d, 0); ++k) out.coeffs.push_back(coefficient_of(f, v, static_cast<unsigned>(k)));
  return out;
}

template <class C>
MultiPoly<C> determinant(std::vector<std::vector<MultiPoly<C>>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  }
  bool negate = false;
  MultiPoly<C> prev = m[0][0].one_like();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return m[0][0].zero_like();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly<C> num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(num, prev);
      }
      m[i][k] = m[i][k].zero_like();
    }
    prev = m[k][k];
  }
  MultiPoly<C> det = m[n - 1][n - 1];
  return negate ? -det : det;
}

template <class C>
MultiPoly<C> resultant(const UniPoly<C>& f, const UniPoly<C>& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 1 || n < 0) throw DomainError("resultant: degrees too small");
  const auto zero = f.leading().zero_like();
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MultiPoly<C>>> s(size, std::vector<MultiPoly<C>>(size, zero));
  // Rows: n shifted copies of f, then m shifted copies of g; highest degree first.
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - k)] = f.coeffs[static_cast<std::size_t>(k)];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - k)] = g.coeffs[static_cast<std::size_t>(k)];
  }
  return determinant(std::move(s));
}

template <class C>
MultiPoly<C> discriminant(const UniPoly<C>& f) {
  const int n = f.degree();
  if (n < 2) throw DomainError("discriminant needs degree >= 2");
  MultiPoly<C> res = exact_div(resultant(f, f.derivative()), f.leading());
  return (n * (n - 1) / 2) % 2 == 0 ? res : -res;
}

#define TAF_INSTANTIATE_DISC(C)                                                         \
  template struct UniPoly<C>;                                                           \
  template UniPoly<C> as_univariate(const MultiPoly<C>&, const std::string&);           \
  template MultiPoly<C> determinant(std::vector<std::vector<MultiPoly<C>>>);            \
  template MultiPoly<C> resultant(const UniPoly<C>&, const UniPoly<C>&);                \
  template MultiPoly<C> discriminant(const UniPoly<C>&);

TAF_INSTANTIATE_DISC(Rational)
TAF_INSTANTIATE_DISC(Fp)

#undef TAF_INSTANTIATE_DISC

}  // namespace taf
