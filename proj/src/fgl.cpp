// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/fgl.hpp"

#include <algorithm>

#include <json.hpp>

namespace taf {

namespace {

constexpr const char* kX = "x";
constexpr const char* kY = "y";
constexpr const char* kZ = "z";

// sum_k s_k t^k over `reg`, with t one of the local variables.
QPoly series_in(const PolySeries& s, const RegistryPtr& reg, const std::string& t) {
  const std::size_t v = reg->require(t);
  QPoly out(reg);
  for (unsigned k = 0; k < s.bound(); ++k) {
    if (s[k].is_zero()) continue;
    out += embed(s[k], reg).times_monomial(Monomial::variable(v, k), Rational(1));
  }
  return out;
}

// sum_k s_k P^k truncated, with P a polynomial without constant term.
QPoly compose_poly(const PolySeries& s, const QPoly& inner, const RegistryPtr& reg, const Truncation& trunc) {
  QPoly out(reg);
  QPoly power = QPoly::constant(reg, Rational(1));
  for (unsigned k = 0; k < s.bound(); ++k) {
    if (k > 0) {
      power = QPoly::multiply(power, inner, &trunc);
      if (power.is_zero()) break;
    }
    if (!s[k].is_zero()) out += QPoly::multiply(embed(s[k], reg), power, &trunc);
  }
  return out;
}

Truncation local_truncation(const RegistryPtr& reg, std::initializer_list<const char*> vars, unsigned bound) {
  Truncation t;
  for (const char* v : vars) t.vars.push_back(reg->require(v));
  t.bound = bound;
  return t;
}

}  // namespace

QPoly FormalGroupLaw::coefficient(unsigned i, unsigned j) const {
  const std::size_t xi = law_registry->require(kX);
  const std::size_t yi = law_registry->require(kY);
  std::vector<PolyTerm<Rational>> terms;
  for (const auto& t : law.terms()) {
    if (t.mono[xi] != i || t.mono[yi] != j) continue;
    Monomial m;
    for (std::size_t k = 0; k < ring()->size(); ++k) m[k] = t.mono[k];
    terms.push_back({m, t.coeff});
  }
  return QPoly::from_terms(ring(), {}, std::move(terms));
}

FormalGroupLaw fgl_from_log(const PolySeries& log, unsigned law_order) {
  if (log.bound() < 2) throw DomainError("fgl_from_log: truncation too small");
  if (!log[0].is_zero() || !(log[1] == log[1].one_like())) throw DomainError("fgl_from_log: log must be u + O(u^2)");
  FormalGroupLaw f;
  f.truncation = log.bound();
  f.law_order = law_order == 0 ? f.truncation : std::min(law_order, f.truncation);
  f.log = log;
  f.exp = revert(log);
  const auto& ring = log.zero().registry();
  f.law_registry = ring->extended({{kX, -2}, {kY, -2}});
  const Truncation trunc = local_truncation(f.law_registry, {kX, kY}, f.law_order);
  const PolySeries lg = log.with_bound(f.law_order);
  const QPoly sum = series_in(lg, f.law_registry, kX) + series_in(lg, f.law_registry, kY);
  f.law = compose_poly(f.exp.with_bound(f.law_order), sum, f.law_registry, trunc);
  return f;
}

PolySeries apply_law(const FormalGroupLaw& f, const PolySeries& a, const PolySeries& b) {
  const unsigned n = std::min({a.bound(), b.bound(), f.law_order});
  const QPoly& zero = f.log.zero();
  std::vector<PolySeries> apow{PolySeries(zero, n, a.var())};
  std::vector<PolySeries> bpow{PolySeries(zero, n, a.var())};
  apow[0].set(0, zero.one_like());
  bpow[0].set(0, zero.one_like());
  const PolySeries an = a.with_bound(n);
  const PolySeries bn = b.with_bound(n);
  for (unsigned k = 1; k < n; ++k) {
    apow.push_back(apow.back() * an);
    bpow.push_back(bpow.back() * bn);
  }
  PolySeries out(zero, n, a.var());
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; i + j < n; ++j) {
      const QPoly c = f.coefficient(i, j);
      if (c.is_zero()) continue;
      const PolySeries term = apow[i] * bpow[j];
      for (unsigned k = 0; k < n; ++k) {
        if (!term[k].is_zero()) out.set(k, out[k] + c * term[k]);
      }
    }
  }
  return out;
}

PolySeries n_series(const FormalGroupLaw& f, long n) {
  const QPoly& zero = f.log.zero();
  const unsigned bound = f.law_order;
  const PolySeries u = series_variable(zero, bound);
  if (n == 0) return PolySeries(zero, bound);
  // [-1](u) = exp(-log u); F(u, [-1](u)) = 0 is checked by the tests.
  const PolySeries step = n > 0 ? u : compose(f.exp.with_bound(bound), -f.log.with_bound(bound));
  PolySeries acc = step;
  for (long k = 1; k < (n > 0 ? n : -n); ++k) acc = apply_law(f, step, acc);
  return acc;
}

bool check_unit(const FormalGroupLaw& f) {
  const std::size_t yi = f.law_registry->require(kY);
  const QPoly x = QPoly::variable(f.law_registry, kX);
  std::vector<PolyTerm<Rational>> terms;
  for (const auto& t : f.law.terms()) {
    if (t.mono[yi] == 0) terms.push_back(t);
  }
  return QPoly::from_terms(f.law_registry, {}, std::move(terms)) == truncate(x, local_truncation(f.law_registry, {kX, kY}, f.law_order));
}

bool check_commutative(const FormalGroupLaw& f) {
  const auto& reg = f.law_registry;
  const std::map<std::string, QPoly> swap{{kX, QPoly::variable(reg, kY)}, {kY, QPoly::variable(reg, kX)}};
  return substitute(f.law, swap, reg) == f.law;
}

bool check_associative(const FormalGroupLaw& f) {
  const auto reg3 = f.ring()->extended({{kX, -2}, {kY, -2}, {kZ, -2}});
  const Truncation trunc = local_truncation(reg3, {kX, kY, kZ}, f.law_order);
  const QPoly law3 = embed(f.law, reg3);
  const QPoly x = QPoly::variable(reg3, kX);
  const QPoly y = QPoly::variable(reg3, kY);
  const QPoly z = QPoly::variable(reg3, kZ);
  const QPoly fxy = law3;
  const QPoly fyz = substitute(law3, {{kX, y}, {kY, z}}, reg3, &trunc);
  const QPoly left = substitute(law3, {{kX, fxy}, {kY, z}}, reg3, &trunc);
  const QPoly right = substitute(law3, {{kX, x}, {kY, fyz}}, reg3, &trunc);
  return truncate(left, trunc) == truncate(right, trunc);
}

bool check_log_identity(const FormalGroupLaw& f) {
  const Truncation trunc = local_truncation(f.law_registry, {kX, kY}, f.law_order);
  const PolySeries lg = f.log.with_bound(f.law_order);
  const QPoly lhs = compose_poly(lg, f.law, f.law_registry, trunc);
  const QPoly rhs = series_in(lg, f.law_registry, kX) + series_in(lg, f.law_registry, kY);
  return lhs == rhs;
}

std::string to_json(const FormalGroupLaw& f) {
  nlohmann::ordered_json j;
  j["truncation"] = f.truncation;
  j["law_order"] = f.law_order;
  j["log"] = f.log.to_string();
  auto law = nlohmann::ordered_json::array();
  for (unsigned d = 1; d < f.law_order; ++d) {
    for (unsigned i = d + 1; i-- > 0;) {
      const QPoly c = f.coefficient(i, d - i);
      if (c.is_zero()) continue;
      law.push_back({{"i", i}, {"j", d - i}, {"coeff", to_string(c)}});
    }
  }
  j["law"] = std::move(law);
  return j.dump(2);
}

bool HazewinkelImages::integral() const {
  return std::all_of(valuations.begin(), valuations.end(),
                     [](const Valuation& v) { return v.is_infinite() || v.value() >= 0; });
}

HazewinkelImages hazewinkel_images(const std::vector<QPoly>& ell, std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("hazewinkel_images: modulus is not prime");
  HazewinkelImages out;
  out.p = p;
  for (std::size_t n = 1; n <= ell.size(); ++n) {
    QPoly v = ell[n - 1].scaled(Rational(static_cast<long>(p)));
    unsigned long pi = 1;
    for (std::size_t i = 1; i < n; ++i) {
      pi *= p;
      v -= ell[i - 1] * pow(out.v[n - i - 1], pi);
    }
    out.valuations.push_back(min_p_valuation(v, p));
    out.v.push_back(std::move(v));
  }
  return out;
}

StrictIso strict_iso(const FormalGroupLaw& f1, const FormalGroupLaw& f2, std::uint32_t p) {
  if (f1.truncation != f2.truncation) throw DomainError("strict_iso: truncation mismatch");
  if (!same_registry(f1.ring(), f2.ring())) throw RegistryMismatch("strict_iso: laws over different rings");
  StrictIso out;
  out.theta = compose(f2.exp, f1.log);
  out.p_local = true;
  for (unsigned k = 0; k < out.theta.bound(); ++k) {
    const Valuation v = min_p_valuation(out.theta[k], p);
    out.p_local = out.p_local && (v.is_infinite() || v.value() >= 0);
    out.valuations.push_back(v);
  }
  out.log_identity = compose(f2.log, out.theta) == f1.log;

  out.bivariate_order = std::min(f1.law_order, f2.law_order);
  const auto& reg = f1.law_registry;
  const Truncation trunc = local_truncation(reg, {kX, kY}, out.bivariate_order);
  const PolySeries theta = out.theta.with_bound(out.bivariate_order);
  const QPoly lhs = compose_poly(theta, truncate(f1.law, trunc), reg, trunc);
  const QPoly tx = series_in(theta, reg, kX);
  const QPoly ty = series_in(theta, reg, kY);
  const QPoly rhs = substitute(truncate(f2.law, trunc), {{kX, tx}, {kY, ty}}, reg, &trunc);
  out.bivariate_identity = lhs == truncate(rhs, trunc);
  return out;
}

}  // namespace taf
