// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/pseries.hpp"

#include <algorithm>
#include <sstream>

#include <omp.h>

#include "taf/kernels.hpp"

namespace taf {

Rational RingOps<Rational>::unit_inverse(const Rational& x) {
  if (x.is_zero()) throw DomainError("series: constant term is not a unit");
  return x.inverse();
}

template <class C>
MultiPoly<C> RingOps<MultiPoly<C>>::unit_inverse(const MultiPoly<C>& x) {
  if (x.is_zero() || !x.is_constant()) throw DomainError("series: constant term is not a unit");
  return MultiPoly<C>::constant(x.registry(), x.constant_term().inverse(), x.domain());
}

template <class C>
bool RingOps<MultiPoly<C>>::scalar_invertible(const MultiPoly<C>& x, const Rational& r) {
  if (r.is_zero()) return false;
  if constexpr (std::is_same_v<C, Fp>) {
    const auto p = x.domain().p;
    return p_valuation(r, p).value() == 0;
  } else {
    (void)x;
    return true;
  }
}

template <class R>
TruncatedSeries<R>::TruncatedSeries(R zero, unsigned bound, std::string var)
    : var_(std::move(var)), bound_(bound), zero_(RingOps<R>::zero_like(zero)), c_(bound, zero_) {}

template <class R>
TruncatedSeries<R>::TruncatedSeries(std::vector<R> coeffs, R zero, unsigned bound, std::string var)
    : TruncatedSeries(std::move(zero), bound, std::move(var)) {
  for (unsigned k = 0; k < bound && k < coeffs.size(); ++k) c_[k] = std::move(coeffs[k]);
}

template <class R>
const R& TruncatedSeries<R>::operator[](unsigned k) const {
  if (k >= bound_) throw DomainError("series: coefficient beyond truncation requested");
  return c_[k];
}

template <class R>
void TruncatedSeries<R>::set(unsigned k, R value) {
  if (k >= bound_) throw DomainError("series: coefficient beyond truncation assigned");
  c_[k] = std::move(value);
}

template <class R>
TruncatedSeries<R> TruncatedSeries<R>::with_bound(unsigned bound) const {
  if (bound > bound_) throw DomainError("series: cannot raise the truncation bound");
  return TruncatedSeries(std::vector<R>(c_.begin(), c_.begin() + bound), zero_, bound, var_);
}

template <class R>
TruncatedSeries<R> TruncatedSeries<R>::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

template <class R>
TruncatedSeries<R> TruncatedSeries<R>::combine(const TruncatedSeries& a, const TruncatedSeries& b, bool subtract) {
  const unsigned n = std::min(a.bound_, b.bound_);
  TruncatedSeries r(a.zero_, n, a.var_);
  for (unsigned k = 0; k < n; ++k) r.c_[k] = subtract ? a.c_[k] - b.c_[k] : a.c_[k] + b.c_[k];
  return r;
}

template <class R>
TruncatedSeries<R> TruncatedSeries<R>::product(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned n = std::min(a.bound_, b.bound_);
  TruncatedSeries r(a.zero_, n, a.var_);
  for (unsigned i = 0; i < n; ++i) {
    if (RingOps<R>::is_zero(a.c_[i])) continue;
    for (unsigned j = 0; i + j < n; ++j) {
      if (RingOps<R>::is_zero(b.c_[j])) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

template <class R>
TruncatedSeries<R> TruncatedSeries<R>::scaled(const Rational& s) const {
  TruncatedSeries r = *this;
  for (auto& c : r.c_) c = RingOps<R>::scale(c, s);
  return r;
}

template <class R>
bool TruncatedSeries<R>::equal(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned n = std::min(a.bound_, b.bound_);
  for (unsigned k = 0; k < n; ++k) {
    if (!(a.c_[k] == b.c_[k])) return false;
  }
  return true;
}

template <class R>
std::string TruncatedSeries<R>::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned k = 0; k < bound_; ++k) {
    if (RingOps<R>::is_zero(c_[k])) continue;
    std::string c = RingOps<R>::to_string(c_[k]);
    const bool compound = c.find_first_of("+ ", 1) != std::string::npos;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (compound) {
      os << '(' << c << ")*";
    } else if (c == "-1") {
      os << '-';
    } else if (c != "1") {
      os << c << '*';
    }
    os << var_;
    if (k > 1) os << '^' << k;
  }
  if (!first) os << " + ";
  os << "O(" << var_ << '^' << bound_ << ')';
  return os.str();
}

template <class R>
TruncatedSeries<R> series_variable(const R& zero, unsigned bound, std::string var) {
  TruncatedSeries<R> r(zero, bound, std::move(var));
  if (bound > 1) r.set(1, RingOps<R>::one_like(zero));
  return r;
}

template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
  if (g.bound() > 0 && !RingOps<R>::is_zero(g[0])) throw DomainError("compose: inner series has a constant term");
  const unsigned n = std::min(f.bound(), g.bound());
  TruncatedSeries<R> result(f.zero(), n, f.var());
  if (n == 0) return result;
  // Accumulate f_k g^k, tracking the power of g; g^k vanishes below u^k.
  TruncatedSeries<R> gk(f.zero(), n, f.var());
  gk.set(0, RingOps<R>::one_like(f.zero()));
  const TruncatedSeries<R> gn = g.with_bound(n);
  for (unsigned k = 0; k < n; ++k) {
    if (k > 0) {
      TruncatedSeries<R> next(f.zero(), n, f.var());
      for (unsigned i = k - 1; i < n; ++i) {
        if (RingOps<R>::is_zero(gk[i])) continue;
        for (unsigned j = 1; i + j < n; ++j) {
          if (RingOps<R>::is_zero(gn[j])) continue;
          next.set(i + j, next[i + j] + gk[i] * gn[j]);
        }
      }
      gk = std::move(next);
    }
    if (RingOps<R>::is_zero(f[k])) continue;
    for (unsigned i = k; i < n; ++i) {
      if (!RingOps<R>::is_zero(gk[i])) result.set(i, result[i] + f[k] * gk[i]);
    }
  }
  return result;
}

template <class R>
TruncatedSeries<R> inverse(const TruncatedSeries<R>& f) {
  const unsigned n = f.bound();
  TruncatedSeries<R> b(f.zero(), n, f.var());
  if (n == 0) return b;
  const R a0inv = RingOps<R>::unit_inverse(f[0]);
  b.set(0, a0inv);
  for (unsigned k = 1; k < n; ++k) {
    R acc = RingOps<R>::zero_like(f.zero());
    for (unsigned j = 1; j <= k; ++j) {
      if (!RingOps<R>::is_zero(f[j]) && !RingOps<R>::is_zero(b[k - j])) acc += f[j] * b[k - j];
    }
    b.set(k, -(acc * a0inv));
  }
  return b;
}

template <class R>
TruncatedSeries<R> revert(const TruncatedSeries<R>& f) {
  const unsigned n = f.bound();
  if (n < 2) throw DomainError("revert: truncation too small");
  if (!RingOps<R>::is_zero(f[0])) throw DomainError("revert: nonzero constant term");
  const R f1inv = RingOps<R>::unit_inverse(f[1]);
  TruncatedSeries<R> g(f.zero(), 2, f.var());
  g.set(1, f1inv);
  unsigned k = 2;  // g is correct modulo u^k
  while (k < n) {
    const unsigned k2 = std::min(2 * k, n);
    const TruncatedSeries<R> fb = f.with_bound(k2);
    const TruncatedSeries<R> gb(g.coeffs(), f.zero(), k2, f.var());
    // h = f(g) - u vanishes below u^k; the correction needs 1/f'(g) only mod u^(k2-k).
    TruncatedSeries<R> h = compose(fb, gb) - series_variable(f.zero(), k2, f.var());
    const unsigned m = k2 - k;
    const TruncatedSeries<R> d = compose(derivative(fb).with_bound(m), gb.with_bound(m));
    const TruncatedSeries<R> dinv = inverse(d);
    TruncatedSeries<R> hs(f.zero(), m, f.var());
    for (unsigned i = 0; i < m; ++i) hs.set(i, h[k + i]);
    const TruncatedSeries<R> delta = hs * dinv;
    TruncatedSeries<R> next = gb;
    for (unsigned i = 0; i < m; ++i) next.set(k + i, gb[k + i] - delta[i]);
    g = std::move(next);
    k = k2;
  }
  return g;
}

template <class R>
TruncatedSeries<R> fractional_power(const TruncatedSeries<R>& f, const Rational& e) {
  const unsigned n = f.bound();
  TruncatedSeries<R> g(f.zero(), n, f.var());
  if (n == 0) return g;
  if (!(f[0] == RingOps<R>::one_like(f.zero()))) throw DomainError("fractional_power: constant term must be 1");
  if (!RingOps<R>::scalar_invertible(f.zero(), Rational(e.denominator()))) {
    throw DomainError("fractional_power: exponent denominator not invertible");
  }
  g.set(0, RingOps<R>::one_like(f.zero()));
  const Rational e1 = e + Rational(1);
  for (unsigned m = 1; m < n; ++m) {
    if (!RingOps<R>::scalar_invertible(f.zero(), Rational(m))) {
      throw DomainError("fractional_power: index not invertible in the coefficient domain");
    }
    R acc = RingOps<R>::zero_like(f.zero());
    for (unsigned k = 1; k <= m; ++k) {
      if (RingOps<R>::is_zero(f[k]) || RingOps<R>::is_zero(g[m - k])) continue;
      const Rational w = e1 * Rational(k) - Rational(m);
      if (w.is_zero()) continue;
      acc += RingOps<R>::scale(f[k] * g[m - k], w);
    }
    g.set(m, RingOps<R>::scale(acc, Rational(1, m)));
  }
  return g;
}

Rational binomial(const Rational& e, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r = r * (e - Rational(i)) / Rational(i + 1);
  return r;
}

template <class R>
TruncatedSeries<R> fractional_power_binomial(const TruncatedSeries<R>& f, const Rational& e) {
  const unsigned n = f.bound();
  TruncatedSeries<R> g(f.zero(), n, f.var());
  if (n == 0) return g;
  if (!(f[0] == RingOps<R>::one_like(f.zero()))) throw DomainError("fractional_power: constant term must be 1");
  TruncatedSeries<R> x = f;
  x.set(0, RingOps<R>::zero_like(f.zero()));
  TruncatedSeries<R> xk(f.zero(), n, f.var());
  xk.set(0, RingOps<R>::one_like(f.zero()));
  for (unsigned k = 0; k < n; ++k) {
    g = g + xk.scaled(binomial(e, k));
    xk = xk * x;
  }
  return g;
}

template <class R>
TruncatedSeries<R> integrate(const TruncatedSeries<R>& f) {
  const unsigned n = f.bound() + 1;
  TruncatedSeries<R> g(f.zero(), n, f.var());
  for (unsigned k = 0; k + 1 < n; ++k) {
    if (RingOps<R>::is_zero(f[k])) continue;
    if (!RingOps<R>::scalar_invertible(f.zero(), Rational(k + 1))) {
      throw DomainError("integrate: " + std::to_string(k + 1) + " is not invertible");
    }
    g.set(k + 1, RingOps<R>::scale(f[k], Rational(1, static_cast<long>(k + 1))));
  }
  return g;
}

template <class R>
TruncatedSeries<R> derivative(const TruncatedSeries<R>& f) {
  const unsigned n = f.bound() == 0 ? 0 : f.bound() - 1;
  TruncatedSeries<R> g(f.zero(), n, f.var());
  for (unsigned k = 0; k < n; ++k) g.set(k, RingOps<R>::scale(f[k + 1], Rational(k + 1)));
  return g;
}

template <class R>
TruncatedSeries<R> pow(const TruncatedSeries<R>& f, unsigned n) {
  TruncatedSeries<R> r(f.zero(), f.bound(), f.var());
  if (f.bound() == 0) return r;
  r.set(0, RingOps<R>::one_like(f.zero()));
  TruncatedSeries<R> base = f;
  while (n > 0) {
    if (n & 1U) r = r * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return r;
}

PolySeries series_from_table(const ExponentTable& table, const QPoly& zero, unsigned bound) {
  PolySeries s(zero, bound);
  if (bound == 0) return s;
  s.set(0, zero.one_like());
  for (const auto& [d, c] : table) {
    if (d == 0) throw DomainError("exponent table: degree 0 entry");
    if (d < bound) s.set(d, s[d] + c);
  }
  return s;
}

namespace {

struct CompositionPlan {
  std::vector<unsigned> degrees;
  std::vector<QPoly> coeffs;
  std::vector<std::vector<unsigned>> compositions;  // counts n_d per table entry
  std::vector<Rational> falling;                      // e(e-1)...(e-n+1)
  std::vector<mpz_class> factorial;
  bool monomial_coeffs = true;
};

void enumerate(const std::vector<unsigned>& degrees, std::size_t i, unsigned remaining, std::vector<unsigned>& counts,
               std::vector<std::vector<unsigned>>& out) {
  if (i + 1 == degrees.size()) {
    if (remaining % degrees[i] == 0) {
      counts[i] = remaining / degrees[i];
      out.push_back(counts);
    }
    return;
  }
  for (unsigned n = 0; n * degrees[i] <= remaining; ++n) {
    counts[i] = n;
    enumerate(degrees, i + 1, remaining - n * degrees[i], counts, out);
  }
}

CompositionPlan plan_compositions(const ExponentTable& table, const Rational& e, unsigned target) {
  CompositionPlan plan;
  for (const auto& [d, c] : table) {
    if (d == 0) throw DomainError("exponent table: degree 0 entry");
    if (c.is_zero()) continue;
    plan.degrees.push_back(d);
    plan.coeffs.push_back(c);
    if (c.size() != 1) plan.monomial_coeffs = false;
  }
  if (plan.degrees.empty()) return plan;
  std::vector<unsigned> counts(plan.degrees.size(), 0);
  enumerate(plan.degrees, 0, target, counts, plan.compositions);
  const unsigned nmax = target / *std::min_element(plan.degrees.begin(), plan.degrees.end());
  plan.falling.push_back(Rational(1));
  plan.factorial.emplace_back(1);
  for (unsigned n = 1; n <= nmax; ++n) {
    plan.falling.push_back(plan.falling.back() * (e - Rational(n - 1)));
    plan.factorial.push_back(plan.factorial.back() * n);
  }
  return plan;
}

PolyTerm<Rational> monomial_term(const CompositionPlan& plan, const std::vector<unsigned>& counts) {
  unsigned n = 0;
  mpz_class denom = 1;
  Monomial m;
  Rational c(1);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    n += counts[i];
    denom *= plan.factorial[counts[i]];
    const auto& t = plan.coeffs[i].terms().front();
    m = m * pow(t.mono, counts[i]);
    if (!t.coeff.is_one()) c *= pow(t.coeff, counts[i]);
  }
  return {m, plan.falling[n] * c / Rational(denom)};
}

QPoly general_term(const CompositionPlan& plan, const std::vector<unsigned>& counts, const QPoly& zero) {
  unsigned n = 0;
  mpz_class denom = 1;
  QPoly prod = zero.one_like();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    n += counts[i];
    denom *= plan.factorial[counts[i]];
    prod *= pow(plan.coeffs[i], counts[i]);
  }
  return prod.scaled(plan.falling[n] / Rational(denom));
}

QPoly isolated_coeff(const ExponentTable& table, const Rational& e, unsigned target, const QPoly& zero,
                     bool parallel) {
  for (const auto& [d, c] : table) {
    if (!same_registry(c.registry(), zero.registry())) throw RegistryMismatch("exponent table over wrong registry");
  }
  if (target == 0) return zero.one_like();
  const CompositionPlan plan = plan_compositions(table, e, target);
  const auto count = static_cast<long>(plan.compositions.size());
  const int nt = parallel ? kernels::threads() : 1;
  if (plan.monomial_coeffs) {
    std::vector<PolyTerm<Rational>> terms(plan.compositions.size());
#pragma omp parallel for num_threads(nt) schedule(dynamic, 64) if (nt > 1)
    for (long i = 0; i < count; ++i) {
      terms[static_cast<std::size_t>(i)] = monomial_term(plan, plan.compositions[static_cast<std::size_t>(i)]);
    }
    return QPoly::from_terms(zero.registry(), zero.domain(), std::move(terms));
  }
  std::vector<QPoly> parts(plan.compositions.size(), zero);
#pragma omp parallel for num_threads(nt) schedule(dynamic, 16) if (nt > 1)
  for (long i = 0; i < count; ++i) {
    parts[static_cast<std::size_t>(i)] = general_term(plan, plan.compositions[static_cast<std::size_t>(i)], zero);
  }
  QPoly sum = zero;
  for (const auto& p : parts) sum += p;
  return sum;
}

}  // namespace

QPoly isolated_coeff_fractional_power(const ExponentTable& table, const Rational& e, unsigned target,
                                      const QPoly& zero) {
  return isolated_coeff(table, e, target, zero, true);
}

QPoly isolated_coeff_fractional_power_serial(const ExponentTable& table, const Rational& e, unsigned target,
                                             const QPoly& zero) {
  return isolated_coeff(table, e, target, zero, false);
}

#define TAF_INSTANTIATE_SERIES(R)                                                         \
  template class TruncatedSeries<R>;                                                      \
  template TruncatedSeries<R> series_variable(const R&, unsigned, std::string);           \
  template TruncatedSeries<R> compose(const TruncatedSeries<R>&, const TruncatedSeries<R>&); \
  template TruncatedSeries<R> inverse(const TruncatedSeries<R>&);                         \
  template TruncatedSeries<R> revert(const TruncatedSeries<R>&);                          \
  template TruncatedSeries<R> fractional_power(const TruncatedSeries<R>&, const Rational&); \
  template TruncatedSeries<R> fractional_power_binomial(const TruncatedSeries<R>&, const Rational&); \
  template TruncatedSeries<R> integrate(const TruncatedSeries<R>&);                       \
  template TruncatedSeries<R> derivative(const TruncatedSeries<R>&);                      \
  template TruncatedSeries<R> pow(const TruncatedSeries<R>&, unsigned);

template struct RingOps<QPoly>;
template struct RingOps<FpPoly>;
TAF_INSTANTIATE_SERIES(Rational)
TAF_INSTANTIATE_SERIES(QPoly)
TAF_INSTANTIATE_SERIES(FpPoly)

#undef TAF_INSTANTIATE_SERIES

}  // namespace taf
