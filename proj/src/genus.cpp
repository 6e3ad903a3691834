// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/genus.hpp"

#include "taf/symmetric.hpp"

namespace taf {

Family parse_family(const std::string& id) {
  if (id == "legendre") return Family::Legendre;
  if (id == "picard") return Family::Picard;
  if (id == "shiga") return Family::Shiga;
  if (id == "supersingular") return Family::Supersingular;
  throw DomainError("unknown family '" + id + "'");
}

std::string family_id(Family f) {
  switch (f) {
    case Family::Legendre: return "legendre";
    case Family::Picard: return "picard";
    case Family::Shiga: return "shiga";
    case Family::Supersingular: return "supersingular";
  }
  return "?";
}

namespace {

QPoly var(const RegistryPtr& reg, const char* name, long scale = 1) {
  return QPoly::variable(reg, name).scaled(Rational(scale));
}

GenusSpec make_spec(Family f) {
  switch (f) {
    case Family::Legendre: {
      const auto reg = registries::kappa_lambda();
      return {f, reg, {{3, var(reg, "kappa", -2)}, {6, var(reg, "lambda")}}, Rational(-1, 2)};
    }
    case Family::Picard: {
      const auto reg = registries::picard();
      return {f, reg, {{6, var(reg, "G2")}, {9, var(reg, "G3")}, {12, var(reg, "G4")}}, Rational(-1, 3)};
    }
    case Family::Shiga: {
      // (1 - xi0 u^3)(1 - xi1 u^3)(1 - xi2 u^3) written through the elementary symmetric functions.
      const auto reg = registries::sigma();
      return {f, reg, {{3, var(reg, "sigma1", -1)}, {6, var(reg, "sigma2")}, {9, var(reg, "sigma3", -1)}},
              Rational(-1, 3)};
    }
    case Family::Supersingular: {
      const auto reg = registries::constants();
      return {f, reg, {{9, QPoly::integer(reg, -1)}}, Rational(-1, 3)};
    }
  }
  throw DomainError("unknown family");
}

}  // namespace

const GenusSpec& genus_spec(Family f) {
  static const GenusSpec specs[] = {make_spec(Family::Legendre), make_spec(Family::Picard),
                                    make_spec(Family::Shiga), make_spec(Family::Supersingular)};
  return specs[static_cast<int>(f)];
}

QPoly legendre_poly(unsigned k) {
  const auto reg = registries::kappa_lambda();
  const QPoly kappa = QPoly::variable(reg, "kappa");
  const QPoly lambda = QPoly::variable(reg, "lambda");
  QPoly prev = QPoly::integer(reg, 1);
  if (k == 0) return prev;
  QPoly cur = kappa;
  for (unsigned n = 1; n < k; ++n) {
    QPoly next = (kappa * cur).scaled(Rational(2 * n + 1)) - (lambda * prev).scaled(Rational(n));
    prev = std::move(cur);
    cur = next.scaled(Rational(1, static_cast<long>(n + 1)));
  }
  return cur;
}

QPoly genus_log_coeff(const GenusSpec& spec, unsigned exponent) {
  return isolated_coeff_fractional_power(spec.table, spec.exponent, exponent, spec.zero());
}

PolySeries genus_log_derivative(const GenusSpec& spec, unsigned bound) {
  return fractional_power(series_from_table(spec.table, spec.zero(), bound), spec.exponent);
}

PolySeries genus_log(const GenusSpec& spec, unsigned bound) {
  if (bound == 0) return PolySeries(spec.zero(), 0);
  return integrate(genus_log_derivative(spec, bound - 1));
}

QPoly shiga_log_coeff_via_xi(unsigned exponent) {
  const auto xi = registries::xi();
  const QPoly x0 = QPoly::variable(xi, "xi0");
  const QPoly x1 = QPoly::variable(xi, "xi1");
  const QPoly x2 = QPoly::variable(xi, "xi2");
  const ExponentTable table{{3, -(x0 + x1 + x2)}, {6, x0 * x1 + x0 * x2 + x1 * x2}, {9, -(x0 * x1 * x2)}};
  const QPoly c = isolated_coeff_fractional_power(table, Rational(-1, 3), exponent, QPoly(xi));
  return express_in_elementary(c, registries::sigma());
}

HazewinkelImages genus_v(const GenusSpec& spec, std::uint32_t p, unsigned n) {
  if (!is_prime(p) || p % 3 != 1) throw DomainError("genus_v: prime must satisfy p = 1 mod 3");
  if (n == 0 || n > 3) throw DomainError("genus_v: height must be 1, 2 or 3");
  std::vector<QPoly> ell;
  unsigned long pk = 1;
  for (unsigned k = 1; k <= n; ++k) {
    pk *= p;
    const QPoly a = genus_log_coeff(spec, static_cast<unsigned>(pk - 1));
    ell.push_back(a.scaled(Rational(1, static_cast<long>(pk))));
  }
  HazewinkelImages out = hazewinkel_images(ell, p);
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    const Valuation& v = out.valuations[i];
    if (!v.is_infinite() && v.value() < 0) {
      throw IntegralityViolation("v_" + std::to_string(i + 1) + " of " + family_id(spec.family) + " has a coefficient of " +
                                 std::to_string(p) + "-valuation " + std::to_string(v.value()));
    }
  }
  return out;
}

QPoly kappa_square_substitution(const QPoly& f) {
  if (!same_registry(f.registry(), registries::kappa_lambda())) {
    throw RegistryMismatch("kappa_square_substitution expects a polynomial in kappa, lambda");
  }
  const auto target = registries::lambda_delta6();
  const QPoly lambda = QPoly::variable(target, "lambda");
  const QPoly image = lambda - QPoly::variable(target, "Delta6").scaled(Rational(108));
  std::vector<QPoly> powers{QPoly::integer(target, 1)};
  QPoly out(target);
  for (const auto& t : f.terms()) {
    const unsigned k = t.mono[0];
    if (k % 2 != 0) throw DomainError("kappa_square_substitution: odd power of kappa");
    while (powers.size() <= k / 2) powers.push_back(powers.back() * image);
    out += powers[k / 2].times_monomial(Monomial::variable(0, t.mono[1]), t.coeff);
  }
  return out;
}

RegistryPtr certificate_ring(Family f) {
  return f == Family::Legendre ? registries::lambda_delta6() : genus_spec(f).registry;
}

QPoly to_certificate_ring(Family f, const QPoly& v) {
  return f == Family::Legendre ? kappa_square_substitution(v) : v;
}

}  // namespace taf
