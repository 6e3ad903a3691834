// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/curves.hpp"

#include <random>

#include "taf/congruences.hpp"
#include "taf/discriminant.hpp"
#include "taf/division.hpp"
#include "taf/genus.hpp"
#include "taf/symmetric.hpp"

namespace taf {

namespace {

QPoly P(const std::string& text, const RegistryPtr& reg) { return parse_poly<Rational>(text, reg); }

RegistryPtr hyperelliptic_x() {
  static const RegistryPtr r = registries::kappa_lambda()->extended({{"x", 2}});
  return r;
}
RegistryPtr picard_x() {
  static const RegistryPtr r = registries::picard()->extended({{"x", 6}});
  return r;
}
RegistryPtr xi_x() {
  static const RegistryPtr r = registries::xi()->extended({{"x", 6}});
  return r;
}
RegistryPtr hyperelliptic_uv() {
  static const RegistryPtr r = registries::kappa_lambda()->extended({{"u", -2}, {"v", 0}});
  return r;
}
RegistryPtr picard_uv() {
  static const RegistryPtr r = registries::picard()->extended({{"u", -2}, {"v", 0}});
  return r;
}
RegistryPtr ring_211() {
  static const RegistryPtr r = make_registry({{"xi0", 6}, {"xi1", 6}, {"s", 6}, {"t", 2}});
  return r;
}
RegistryPtr ring_22() {
  static const RegistryPtr r = make_registry({{"xi0", 6}, {"x", 6}, {"y", 8}, {"t", 4}});
  return r;
}
RegistryPtr ring_31() {
  static const RegistryPtr r = make_registry({{"xi0", 6}, {"u", 2}});
  return r;
}
RegistryPtr restricted_ring() {
  static const RegistryPtr r = registries::eisenstein_cubes()->extended({{"x", 6}});
  return r;
}

const char* const kSexticDiscPrinted = "2^6*3^6*lambda^2*(lambda - kappa^2)^2";
const char* const kShigaDiscXi = "(xi0*xi1*xi2*(xi0 - xi1)*(xi1 - xi2)*(xi2 - xi0))^2";

IdentityVerdict compare(const std::string& id, const QPoly& lhs, const QPoly& rhs, bool allow_sign = false) {
  const QPoly diff = lhs - rhs;
  if (diff.is_zero()) return {id, true, "0"};
  if (allow_sign && (lhs + rhs).is_zero()) return {id, true, "0 (opposite global sign)"};
  return {id, false, to_string(diff)};
}

// Discriminant in x, moved to the coefficient ring without x.
QPoly disc_in_x(const QPoly& f, const RegistryPtr& coefficients) {
  return substitute(discriminant(as_univariate(f, "x")), {}, coefficients);
}

IdentityVerdict local_parameter(const std::string& id, const RegistryPtr& reg, const QPoly& curve, const QPoly& cofactor,
                                const QPoly& p_of_u3) {
  const QPoly v = QPoly::variable(reg, "v");
  const QPoly u = QPoly::variable(reg, "u");
  const QPoly one = QPoly::integer(reg, 1);
  const QPoly residual = (v - one) * cofactor - pow(u, 3) * p_of_u3 - curve;
  std::vector<Rational> at_p(reg->size(), Rational(0));
  at_p[reg->require("v")] = Rational(1);
  const Rational unit = evaluate(cofactor, at_p);
  IdentityVerdict out{id, residual.is_zero() && !unit.is_zero(), to_string(residual)};
  out.witness += "; cofactor at (u, v) = (0, 1) is " + unit.to_string();
  return out;
}

}  // namespace

const CurveFamily& curve_family(CurveId id) {
  static const CurveFamily families[] = {
      {CurveId::HyperellipticSextic, "hyperelliptic-sextic", hyperelliptic_x(),
       P("x^6 - 2*kappa*x^3 + lambda", hyperelliptic_x()), 2},
      {CurveId::PicardQuartic, "picard-quartic", picard_x(), P("x^4 + G2*x^2 + G3*x + G4", picard_x()), 3},
      {CurveId::Shiga, "shiga", xi_x(), P("x*(x - xi0)*(x - xi1)*(x - xi2)", xi_x()), 3},
  };
  return families[static_cast<int>(id)];
}

QPoly sextic_discriminant() {
  return disc_in_x(curve_family(CurveId::HyperellipticSextic).defining, registries::kappa_lambda());
}

const std::vector<std::string>& curve_identity_ids() {
  static const std::vector<std::string> ids{"disc-sextic",       "disc-quartic",      "shiga-disc",
                                            "shiga-disc-sigma",  "g3-factor",         "local-param-hyp",
                                            "local-param-picard", "disc-product"};
  return ids;
}

IdentityVerdict check_curve_identity(const std::string& id) {
  if (id == "disc-sextic") {
    return compare(id, sextic_discriminant(), P(kSexticDiscPrinted, registries::kappa_lambda()), true);
  }
  if (id == "disc-quartic") {
    const QPoly d = disc_in_x(curve_family(CurveId::PicardQuartic).defining, registries::picard());
    return compare(id, d, family_discriminant(Family::Picard), true);
  }
  if (id == "shiga-disc") {
    const QPoly d = disc_in_x(curve_family(CurveId::Shiga).defining, registries::xi());
    return compare(id, d, P(kShigaDiscXi, registries::xi()), true);
  }
  if (id == "shiga-disc-sigma") {
    const QPoly in_sigma = express_in_elementary(P(kShigaDiscXi, registries::xi()), registries::sigma());
    return compare(id, in_sigma, family_discriminant(Family::Shiga));
  }
  if (id == "g3-factor") {
    const auto& reg = xi_x();
    const QPoly shift = P("x + (xi0 + xi1 + xi2)/4", reg);
    const QPoly shifted = substitute(curve_family(CurveId::Shiga).defining, {{"x", shift}}, reg);
    const std::size_t x = reg->require("x");
    if (!coefficient_of(shifted, x, 3).is_zero()) return {id, false, "x^3 term survives the shift"};
    return compare(id, coefficient_of(shifted, x, 1),
                   P("1/8*(-xi0 + xi1 + xi2)*(xi0 - xi1 + xi2)*(xi0 + xi1 - xi2)", reg));
  }
  if (id == "local-param-hyp") {
    const auto& reg = hyperelliptic_uv();
    return local_parameter(id, reg, P("v^2 - (1 - 2*kappa*u^3 + lambda*u^6)", reg), P("v + 1", reg),
                           P("-2*kappa + lambda*u^3", reg));
  }
  if (id == "local-param-picard") {
    const auto& reg = picard_uv();
    return local_parameter(id, reg, P("v^3 - (1 + G2*u^6 + G3*u^9 + G4*u^12)", reg), P("v^2 + v + 1", reg),
                           P("G2*u^3 + G3*u^6 + G4*u^9", reg));
  }
  if (id == "disc-product") {
    const QPoly lhs = kappa_square_substitution(P(kSexticDiscPrinted, registries::kappa_lambda()));
    return compare(id, lhs, P("2^10*3^12*lambda^2*Delta6^2", registries::lambda_delta6()));
  }
  throw DomainError("unknown curve identity '" + id + "'");
}

Degeneration211 degenerate_211() {
  Degeneration211 d;
  d.registry = ring_211();
  const auto& reg = d.registry;
  const QPoly x = P("(s + t^3 + xi0 - 2*xi1)/2", reg);
  const QPoly y = QPoly::variable(reg, "t") * x;
  const QPoly h = P("t^6 - 2*(2*xi1 - xi0)*t^3 + xi0^2", reg);
  d.two_kappa = P("2*(2*xi1 - xi0)", reg);
  d.lambda = P("xi0^2", reg);
  d.generator = P("s^2", reg) - h;

  const QPoly curve = pow(y, 3) - x * x * (x - P("xi0 - xi1", reg)) * (x + P("xi1", reg));
  const auto res = divide(curve, {d.generator}, MonomialOrder::lex(reg, {reg->require("s")}));
  d.cofactor = res.quotients.front();
  d.membership = res.remainder.is_zero() && d.cofactor == (x * x).scaled(Rational(-1, 4));

  // s dx/dt with s ds/dt = h'(t) / 2 on the curve.
  const QPoly s = QPoly::variable(reg, "s");
  const QPoly t = QPoly::variable(reg, "t");
  const QPoly s_dx = (derivative(h, "t").scaled(Rational(1, 2)) + (t * t * s).scaled(Rational(3))).scaled(Rational(1, 2));
  d.differential = (s_dx - (t * t * x).scaled(Rational(3))).is_zero();
  return d;
}

std::pair<Rational, Rational> degenerate_211_at(const Rational& xi0, const Rational& xi1) {
  return {Rational(2) * (Rational(2) * xi1 - xi0), xi0 * xi0};
}

DegenerationCheck degenerate_22_check(std::uint64_t seed) {
  const auto& reg = ring_22();
  const QPoly a = P("y^3 - x^2*(x - xi0)^2", reg);
  const QPoly b = P("t*y - x*(x - xi0)", reg);
  const QPoly target = P("y^2*(x^2 - xi0*x - t^3)", reg);
  const QPoly qa = P("t", reg);
  const QPoly qb = QPoly::variable(reg, "t") * b - P("2*t^2*y + y^2", reg);
  const QPoly residual = target - qa * a - qb * b;
  DegenerationCheck out;
  out.pass = residual.is_zero();
  out.detail = "cofactors (t, t*B - 2*t^2*y - y^2): residual " + to_string(residual);

  const QPoly at_zero = substitute(residual, {{"xi0", QPoly(reg)}}, reg);
  out.pass = out.pass && at_zero.is_zero();

  // F_q with q = 2 mod 3, where cubing is a bijection with inverse z^((2q-1)/3).
  constexpr std::uint64_t q = 1000000007ULL;
  auto mul = [](std::uint64_t u, std::uint64_t v) { return static_cast<std::uint64_t>((unsigned __int128)u * v % q); };
  auto power = [&](std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, base = mul(base, base)) {
      if (e & 1) r = mul(r, base);
    }
    return r;
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, q - 1);
  unsigned sampled = 0;
  for (unsigned i = 0; i < 64; ++i) {
    const std::uint64_t xi0 = dist(rng);
    const std::uint64_t x = dist(rng);
    const std::uint64_t m = mul(x, (x + q - xi0) % q);
    const std::uint64_t z = mul(m, m);
    const std::uint64_t y = power(z, (2 * q - 1) / 3);
    if (y == 0 || mul(mul(y, y), y) != z) continue;
    const std::uint64_t t = mul(m, power(y, q - 2));
    const std::uint64_t lhs = (mul(x, x) + q - mul(xi0, x)) % q;
    if (lhs != mul(mul(t, t), t)) {
      out.pass = false;
      out.detail += "; point sample failed";
      return out;
    }
    ++sampled;
  }
  out.detail += "; " + std::to_string(sampled) + " points over F_1000000007 on Y^2 - xi0*Y = X^3";
  return out;
}

DegenerationCheck degenerate_31_check() {
  const auto& reg = ring_31();
  const QPoly u = QPoly::variable(reg, "u");
  const QPoly xi0 = QPoly::variable(reg, "xi0");
  const QPoly x = pow(u, 3);
  const QPoly t = pow(u, 2);
  const QPoly y = u * (x - xi0);
  const QPoly rel_t = t * y - x * (x - xi0);
  const QPoly curve = pow(y, 3) - x * pow(x - xi0, 3);
  const QPoly printed_first = pow(y, 3) - x * x * pow(x - xi0, 2);

  std::vector<Rational> at{Rational(1), Rational(2)};
  const bool numeric = evaluate(pow(y, 3), at) == evaluate(x * pow(x - xi0, 3), at);

  DegenerationCheck out;
  out.pass = rel_t.is_zero() && curve.is_zero() && numeric;
  out.detail = "ty - x(x - xi0): " + to_string(rel_t) + "; y^3 - x(x - xi0)^3: " + to_string(curve) +
               "; the generator y^3 - x^2(x - xi0)^2 leaves " + to_string(printed_first);
  return out;
}

const std::map<std::string, QPoly>& restriction_images() {
  static const std::map<std::string, QPoly> images = [] {
    const auto reg = registries::kappa_lambda();
    const QPoly d6 = P("(lambda - kappa^2)/108", reg);
    return std::map<std::string, QPoly>{
        {"G2", P("-3/8*lambda", reg) + d6.scaled(Rational(27, 2))},
        {"G3", P("1/8*kappa*lambda", reg)},
        {"G4", P("-1/256*kappa^2", reg) * (P("3*lambda", reg) + d6.scaled(Rational(108)))},
    };
  }();
  return images;
}

QPoly restrict(const QPoly& f) {
  if (!same_registry(f.registry(), registries::picard())) throw RegistryMismatch("restrict expects a polynomial in G2, G3, G4");
  return substitute(f, restriction_images(), registries::kappa_lambda());
}

bool RestrictedModelReport::pass() const {
  return root_sum.is_zero() && factor_residual.is_zero() && kappa_residual.is_zero() && lambda_residual.is_zero();
}

RestrictedModelReport restricted_model_check() {
  const auto& reg = restricted_ring();
  const QPoly kappa = P("2*E3 - E1c", reg);
  const QPoly lambda = P("E1c^2", reg);
  const QPoly a = P("-1/4*(E1c + 2*E3)", reg);
  const QPoly b = P("-1/4*(2*E3 - 3*E1c)", reg);
  const QPoly c = P("-1/4*(E1c - 2*E3)", reg);
  const QPoly x = QPoly::variable(reg, "x");

  const std::map<std::string, QPoly> kl{{"kappa", kappa}, {"lambda", lambda}};
  const auto& r = restriction_images();
  const QPoly quartic = pow(x, 4) + substitute(r.at("G2"), kl, reg) * x * x + substitute(r.at("G3"), kl, reg) * x +
                        substitute(r.at("G4"), kl, reg);
  const QPoly xc = x - c;
  const QPoly factored = (xc * xc - (a + b - c.scaled(Rational(2))) * xc + (a - c) * (b - c)) * xc * xc;

  // Shifting the double root c to 0 gives x^2 (x - xi0 + xi1)(x + xi1) with these xi.
  const QPoly xi0 = a - b;
  const QPoly xi1 = c - b;
  RestrictedModelReport out;
  out.root_sum = a + b + c.scaled(Rational(2));
  out.factor_residual = quartic - factored;
  out.kappa_residual = (xi1.scaled(Rational(2)) - xi0) - kappa;
  out.lambda_residual = xi0 * xi0 - lambda;
  return out;
}

PolySeries restricted_picard_log(unsigned bound) {
  const PolySeries log = genus_log(genus_spec(Family::Picard), bound);
  PolySeries out(QPoly(registries::kappa_lambda()), bound);
  for (unsigned k = 0; k < bound; ++k) out.set(k, restrict(log[k]));
  return out;
}

IsoReport fgl_iso_integrality(std::uint32_t p, unsigned order, unsigned law_order) {
  if (!is_prime(p)) throw DomainError("fgl_iso_integrality: modulus is not prime");
  if (order < 2 || order > 60) throw DomainError("fgl_iso_integrality: order must lie in [2, 60]");
  const auto reg = registries::kappa_lambda();
  const FormalGroupLaw picard = fgl_from_log(restricted_picard_log(order), law_order);
  const FormalGroupLaw legendre = fgl_from_log(genus_log(genus_spec(Family::Legendre), order), law_order);
  const StrictIso iso = strict_iso(picard, legendre, p);

  ExponentTable table;
  for (const auto& [name, exponent] : {std::pair<const char*, unsigned>{"G2", 6}, {"G3", 9}, {"G4", 12}}) {
    table[exponent] = restriction_images().at(name);
  }
  PolySeries head(QPoly(reg), order);
  head.set(1, QPoly::integer(reg, 1));
  if (order > 4) head.set(4, P("-1/4*kappa", reg));
  const PolySeries expected = head * fractional_power(series_from_table(table, QPoly(reg), order), Rational(-1, 3));

  IsoReport out;
  out.p = p;
  out.order = order;
  out.p_local = iso.p_local;
  out.log_identity = iso.log_identity;
  out.bivariate_identity = iso.bivariate_identity;
  out.bivariate_order = iso.bivariate_order;
  out.matches_parameter_change = iso.theta == expected;
  out.asserted = p % 3 == 1;
  out.valuations = iso.valuations;
  return out;
}

Rational supersingular_coefficient_oracle(unsigned long m) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (unsigned long j = 0; j < m; ++j) {
    num *= 3 * j + 1;
    den *= 3 * (j + 1);
  }
  return Rational(num, den);
}

SupersingularReport supersingular_height(std::uint32_t p) {
  if (!is_prime(p) || p % 3 != 1 || (p - 1) % 9 == 0) {
    throw DomainError("supersingular_height: need p prime, p = 1 mod 3 and 9 not dividing p - 1");
  }
  const GenusSpec& spec = genus_spec(Family::Supersingular);
  const HazewinkelImages images = genus_v(spec, p, 3);
  SupersingularReport out;
  out.p = p;
  out.v1_zero = images.v[0].is_zero();
  out.v2_zero = images.v[1].is_zero();
  out.exponent = static_cast<unsigned long>(p) * p * p - 1;
  out.coefficient = supersingular_coefficient_oracle(out.exponent / 9);
  const QPoly pipeline = genus_log_coeff(spec, static_cast<unsigned>(out.exponent));
  out.oracle_agrees = pipeline == QPoly::constant(spec.registry, out.coefficient) &&
                      images.v[2] == QPoly::constant(spec.registry, out.coefficient * Rational(1, static_cast<long>(p) * p));
  const Valuation num = p_valuation(out.coefficient.numerator(), p);
  const Valuation den = p_valuation(out.coefficient.denominator(), p);
  out.valuation = num.value() - den.value();
  out.verdict = out.v1_zero && out.v2_zero && out.valuation == 2 ? "height 3" : "height >= 3 (inconclusive)";
  return out;
}

}  // namespace taf
