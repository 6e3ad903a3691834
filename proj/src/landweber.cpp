// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/landweber.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include <json.hpp>

#include "taf/congruences.hpp"
#include "taf/discriminant.hpp"

namespace taf {

namespace {

bool is_pure_power(const Monomial& m, std::size_t var) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (i != var && m[i] != 0) return false;
  }
  return m[var] > 0;
}

bool is_solved(const TriangularIdeal& ideal, std::size_t var) {
  return std::any_of(ideal.steps.begin(), ideal.steps.end(), [var](const PlanStep& s) { return s.var == var; });
}

bool has_principal(const TriangularIdeal& ideal) {
  return std::any_of(ideal.steps.begin(), ideal.steps.end(),
                     [](const PlanStep& s) { return s.kind == PlanStep::Kind::Principal; });
}

// Index of a variable occurring exactly linearly in r with a constant coefficient.
std::optional<std::size_t> solvable_variable(const FpPoly& r, const TriangularIdeal& ideal) {
  for (std::size_t x = 0; x < r.registry()->size(); ++x) {
    if (is_solved(ideal, x) || degree_in(r, x) != 1) continue;
    const FpPoly c = coefficient_of(r, x, 1);
    if (c.is_constant() && !c.is_zero()) return x;
  }
  return std::nullopt;
}

std::optional<std::size_t> pure_power_variable(const FpPoly& r, const TriangularIdeal& ideal) {
  for (std::size_t y = 0; y < r.registry()->size(); ++y) {
    if (is_solved(ideal, y)) continue;
    for (const auto& t : r.terms()) {
      if (is_pure_power(t.mono, y)) return y;
    }
  }
  return std::nullopt;
}

std::vector<FpPoly> divisors_of(const TriangularIdeal& ideal) {
  std::vector<FpPoly> out;
  for (const auto& s : ideal.steps) out.push_back(s.divisor);
  return out;
}

void add_generator(TriangularIdeal& ideal, const FpPoly& g) {
  const std::size_t index = ideal.generators.size();
  NormalForm nf = reduce_with_witness(g, ideal);
  if (nf.remainder.is_zero()) {
    throw NotTriangularizable("generator " + std::to_string(index + 1) + " vanishes modulo the earlier ones");
  }
  PlanStep step{PlanStep::Kind::Solve, 0, nf.remainder, std::move(nf.cofactors)};
  const auto x = has_principal(ideal) ? std::nullopt : solvable_variable(step.divisor, ideal);
  if (x) {
    step.var = *x;
  } else {
    const auto y = pure_power_variable(step.divisor, ideal);
    if (!y) {
      throw NotTriangularizable("generator " + std::to_string(index + 1) + " has neither a linear variable nor a pure power");
    }
    step.kind = PlanStep::Kind::Principal;
    step.var = *y;
  }
  ideal.generators.push_back(g);
  ideal.steps.push_back(std::move(step));

  const MonomialOrder order = ideal.principal_order();
  const Monomial lead = leading_term(ideal.steps.back().divisor, order).mono;
  const bool expected = ideal.steps.back().kind == PlanStep::Kind::Solve
                            ? lead == Monomial::variable(ideal.steps.back().var)
                            : is_pure_power(lead, ideal.steps.back().var);
  if (!expected) {
    throw NotTriangularizable("generator " + std::to_string(index + 1) + " does not lead with its eliminated variable");
  }
  for (std::size_t j = 0; j + 1 < ideal.steps.size(); ++j) {
    if (!leading_term(ideal.steps[j].divisor, order).mono.coprime(lead)) {
      throw NotTriangularizable("leading monomials of the plan are not coprime");
    }
  }
}

std::string fp_text(const Fp& c) { return std::to_string(c.residue()); }

}  // namespace

MonomialOrder TriangularIdeal::principal_order() const {
  std::vector<std::size_t> priority;
  for (const auto& s : steps) {
    if (s.kind == PlanStep::Kind::Solve) priority.push_back(s.var);
  }
  for (const auto& s : steps) {
    if (s.kind == PlanStep::Kind::Principal) priority.push_back(s.var);
  }
  return MonomialOrder::lex(registry, std::move(priority));
}

std::vector<std::size_t> TriangularIdeal::free_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < registry->size(); ++v) {
    const bool solved = std::any_of(steps.begin(), steps.end(), [v](const PlanStep& s) {
      return s.kind == PlanStep::Kind::Solve && s.var == v;
    });
    if (!solved) out.push_back(v);
  }
  return out;
}

bool TriangularIdeal::quotient_is_polynomial_ring() const { return !has_principal(*this); }

TriangularIdeal build_plan(std::uint32_t p, const std::vector<FpPoly>& generators) {
  if (generators.empty()) throw DomainError("build_plan: no generators");
  TriangularIdeal ideal;
  ideal.p = p;
  ideal.registry = generators.front().registry();
  for (const auto& g : generators) {
    if (g.domain().p != p) throw DomainError("build_plan: generator over the wrong prime");
    add_generator(ideal, g);
  }
  return ideal;
}

NormalForm reduce_with_witness(const FpPoly& f, const TriangularIdeal& ideal) {
  if (ideal.steps.empty()) return {f, {}};
  auto res = divide(f, divisors_of(ideal), ideal.principal_order());
  return {std::move(res.remainder), std::move(res.quotients)};
}

FpPoly reduce_mod_ideal(const FpPoly& f, const TriangularIdeal& ideal) {
  return reduce_with_witness(f, ideal).remainder;
}

bool verify_witness(const FpPoly& f, const NormalForm& nf, const TriangularIdeal& ideal) {
  if (nf.cofactors.size() != ideal.steps.size()) return false;
  FpPoly acc = f - nf.remainder;
  for (std::size_t i = 0; i < ideal.steps.size(); ++i) acc -= nf.cofactors[i] * ideal.steps[i].divisor;
  if (!acc.is_zero()) return false;
  for (std::size_t i = 0; i < ideal.steps.size(); ++i) {
    const PlanStep& s = ideal.steps[i];
    if (s.membership.size() != i) return false;
    FpPoly m = ideal.generators[i] - s.divisor;
    for (std::size_t j = 0; j < i; ++j) m -= s.membership[j] * ideal.steps[j].divisor;
    if (!m.is_zero()) return false;
  }
  return true;
}

FpPoly power_mod_ideal(const FpPoly& f, unsigned long n, const TriangularIdeal& ideal) {
  FpPoly result = reduce_mod_ideal(f.one_like(), ideal);
  FpPoly base = reduce_mod_ideal(f, ideal);
  while (n > 0) {
    if (n & 1UL) result = reduce_mod_ideal(result * base, ideal);
    n >>= 1;
    if (n > 0) base = reduce_mod_ideal(base * base, ideal);
  }
  return result;
}

std::vector<StepVerdict> check_regular(std::uint32_t p, const std::vector<FpPoly>& vs) {
  std::vector<StepVerdict> out;
  out.push_back({0, is_prime(p), std::to_string(p) + (is_prime(p) ? " is prime" : " is not prime")});
  if (vs.empty()) return out;
  TriangularIdeal ideal;
  ideal.p = p;
  ideal.registry = vs.front().registry();
  bool broken = !out.back().pass;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const unsigned index = static_cast<unsigned>(i + 1);
    const std::string name = "v" + std::to_string(index);
    if (broken) {
      out.push_back({index, false, "not reached"});
      continue;
    }
    const FpPoly r = reduce_mod_ideal(vs[i], ideal);
    StepVerdict verdict{index, false, ""};
    std::vector<const PlanStep*> principal;
    for (const auto& s : ideal.steps) {
      if (s.kind == PlanStep::Kind::Principal) principal.push_back(&s);
    }
    if (r.is_zero()) {
      verdict.detail = name + " vanishes in the quotient";
    } else if (principal.empty()) {
      verdict.pass = true;
      verdict.detail = name + " is nonzero in a polynomial ring over F_" + std::to_string(p);
    } else if (principal.size() == 1) {
      // The divisor is monic in its variable, so a common factor would show up in the resultant.
      const std::string& y = ideal.registry->names()[principal[0]->var];
      const FpPoly res = resultant(as_univariate(principal[0]->divisor, y), as_univariate(r, y));
      verdict.pass = !res.is_zero();
      verdict.detail = name + (verdict.pass ? " is coprime to " : " shares a factor with ") + "the divisor leading in " + y;
    } else {
      verdict.detail = name + ": more than one principal divisor, regularity not decided";
    }
    broken = !verdict.pass;
    out.push_back(verdict);
    if (!broken && i + 1 < vs.size()) {
      try {
        add_generator(ideal, vs[i]);
      } catch (const NotTriangularizable& e) {
        broken = true;
        out.back().detail += std::string("; ") + e.what();
      }
    }
  }
  return out;
}

namespace {

std::vector<FpPoly> family_vs(Family f, std::uint32_t p, unsigned height) {
  const HazewinkelImages images = genus_v(genus_spec(f), p, height);
  std::vector<FpPoly> vs;
  for (const auto& v : images.v) vs.push_back(reduce_mod_p(to_certificate_ring(f, v), p));
  return vs;
}

}  // namespace

std::vector<StepVerdict> check_regular(Family f, std::uint32_t p, unsigned height) {
  return check_regular(p, family_vs(f, p, height));
}

UnitRelation check_unit_power(const FpPoly& v, const FpPoly& d, const TriangularIdeal& ideal, long degree_v) {
  const FpPoly vr = reduce_mod_ideal(v, ideal);
  const FpPoly dr = reduce_mod_ideal(d, ideal);
  if (vr.is_zero() || dr.is_zero()) throw NoRelationFound("element vanishes in the quotient");
  const WeightedDegree dd = weighted_degree(d);
  if (!dd.homogeneous || dd.degree <= 0) throw NoRelationFound("inverted element is not homogeneous of positive degree");
  FpPoly va = vr;
  for (unsigned a = 1; a <= kMaxUnitPower; ++a) {
    if (a > 1) va = reduce_mod_ideal(va * vr, ideal);
    if (va.is_zero()) break;
    if ((a * degree_v) % dd.degree != 0) continue;
    const unsigned long e = static_cast<unsigned long>(a * degree_v / dd.degree);
    const FpPoly de = power_mod_ideal(dr, e, ideal);
    if (de.is_zero()) continue;
    const Fp c = va.terms().front().coeff / de.terms().front().coeff;
    if (va == de.scaled(c)) return {a, c, e};
  }
  throw NoRelationFound("no relation v^a = c D^e with a <= " + std::to_string(kMaxUnitPower));
}

bool LandweberCertificate::passed() const {
  return relation.has_value() &&
         std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.printed || c.pass; });
}

bool LandweberCertificate::printed_agree() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return !c.printed || c.pass; });
}

std::string LandweberCertificate::to_json(bool with_timings) const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["family"] = family_id(family);
  j["prime"] = p;
  j["height"] = height;
  j["inverted"] = inverted;
  j["v"] = v;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"kind", c.printed ? "printed" : "structural"},
                   {"status", c.pass ? "pass" : "fail"},
                   {"lhs", c.lhs},
                   {"rhs", c.rhs},
                   {"witness", c.witness}});
  }
  j["checks"] = std::move(arr);
  if (relation) {
    j["relation"] = {{"a", relation->a}, {"c", relation->c.residue()}, {"e", relation->e}};
  } else {
    j["relation"] = nullptr;
  }
  j["passed"] = passed();
  j["printed_agree"] = printed_agree();
  if (with_timings) j["timings_ms"] = timings_ms;
  return j.dump(2);
}

unsigned default_height(Family f) { return f == Family::Legendre ? 2 : 3; }

std::string default_inverted(Family f) { return f == Family::Legendre ? "Delta6" : "Delta_C"; }

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Evaluates congruence text over a ring, with the named symbols bound to
// values and every product reduced modulo the ideal.
class Evaluator {
 public:
  Evaluator(RegistryPtr ring, std::uint32_t p, const TriangularIdeal* ideal, std::map<std::string, QPoly> symbols)
      : ring_(std::move(ring)), p_(p), ideal_(ideal), symbols_(std::move(symbols)) {
    std::vector<std::pair<std::string, int>> extra;
    for (const auto& [name, value] : symbols_) extra.emplace_back(name, 0);
    ext_ = ring_->extended(extra);
  }

  QPoly exact(const std::string& text) const {
    const QPoly parsed = parse_poly<Rational>(text, ext_);
    QPoly out(ring_);
    for (const auto& t : parsed.terms()) {
      QPoly term = QPoly::monomial(ring_, ring_part(t.mono), t.coeff);
      for (const auto& [e, value] : symbol_powers(t.mono)) term = term * pow(*value, e);
      out += term;
    }
    return out;
  }

  FpPoly modular(const std::string& text) const {
    const QPoly parsed = parse_poly<Rational>(text, ext_);
    const PrimeField dom{p_};
    FpPoly out(ring_, dom);
    for (const auto& t : parsed.terms()) {
      FpPoly term = FpPoly::monomial(ring_, ring_part(t.mono), reduce_mod_p(t.coeff, p_), dom);
      for (const auto& [e, value] : symbol_powers(t.mono)) {
        term = reduce(term * power(*value, e));
      }
      out += reduce(term);
    }
    return reduce(out);
  }

 private:
  Monomial ring_part(const Monomial& m) const {
    Monomial r;
    for (std::size_t i = 0; i < ring_->size(); ++i) r[i] = m[i];
    return r;
  }

  std::vector<std::pair<unsigned, const QPoly*>> symbol_powers(const Monomial& m) const {
    std::vector<std::pair<unsigned, const QPoly*>> out;
    std::size_t i = ring_->size();
    for (const auto& [name, value] : symbols_) {
      if (m[i] != 0) out.emplace_back(m[i], &value);
      ++i;
    }
    return out;
  }

  FpPoly reduce(const FpPoly& f) const { return ideal_ ? reduce_mod_ideal(f, *ideal_) : f; }

  FpPoly power(const QPoly& value, unsigned e) const {
    const FpPoly base = reduce_mod_p(value, p_);
    if (ideal_) return power_mod_ideal(base, e, *ideal_);
    return pow(base, e);
  }

  RegistryPtr ring_;
  std::uint32_t p_;
  const TriangularIdeal* ideal_;
  std::map<std::string, QPoly> symbols_;
  RegistryPtr ext_;
};

std::string clip(const std::string& s) {
  constexpr std::size_t kMax = 2000;
  return s.size() <= kMax ? s : s.substr(0, kMax) + " ...";
}

}  // namespace

LandweberCertificate certify(Family f, std::uint32_t p, unsigned height, const std::string& inverted) {
  if (f == Family::Supersingular) throw DomainError("certify: the supersingular genus has no coefficient ring to certify");
  if (height < 1 || height > 3) throw DomainError("certify: height must be 1, 2 or 3");
  LandweberCertificate cert;
  cert.family = f;
  cert.p = p;
  cert.height = height;
  cert.inverted = inverted;

  auto t0 = Clock::now();
  const GenusSpec& spec = genus_spec(f);
  const HazewinkelImages images = genus_v(spec, p, height);
  cert.timings_ms["genus"] = elapsed_ms(t0);

  t0 = Clock::now();
  const RegistryPtr ring = certificate_ring(f);
  std::vector<QPoly> qvs;
  std::vector<FpPoly> vs;
  for (const auto& v : images.v) {
    qvs.push_back(to_certificate_ring(f, v));
    vs.push_back(reduce_mod_p(qvs.back(), p));
  }
  for (const auto& verdict : check_regular(p, vs)) {
    const std::string subject = verdict.index == 0 ? std::to_string(p) : "v" + std::to_string(verdict.index);
    cert.checks.push_back({"regular " + subject, verdict.pass, false, subject, "non-zero-divisor", verdict.detail});
  }
  // ideals[k] presents (p, v_1, ..., v_k); construction stops at the first failure.
  std::vector<std::optional<TriangularIdeal>> ideals(height);
  for (unsigned k = 1; k < height; ++k) {
    try {
      ideals[k] = build_plan(p, std::vector<FpPoly>(vs.begin(), vs.begin() + k));
    } catch (const NotTriangularizable&) {
      break;
    }
  }
  for (unsigned i = 0; i < height; ++i) {
    cert.v.push_back(to_string(ideals[i] ? reduce_mod_ideal(vs[i], *ideals[i]) : vs[i]));
  }
  cert.timings_ms["regularity"] = elapsed_ms(t0);

  t0 = Clock::now();
  const QPoly d = named_element(f, inverted);
  const bool top_ready = height == 1 || ideals[height - 1].has_value();
  TriangularIdeal top = height > 1 && top_ready ? *ideals[height - 1] : TriangularIdeal{p, ring, {}, {}};
  {
    CertificateCheck check{"unit v" + std::to_string(height), false, false, "v" + std::to_string(height) + "^a", "c*" + inverted + "^e", ""};
    if (!top_ready) {
      check.witness = "ideal (p, v_1, ..., v_h-1) has no triangular plan";
    } else {
      try {
        const UnitRelation rel = check_unit_power(vs[height - 1], reduce_mod_p(d, p), top, weighted_degree(qvs[height - 1]).degree);
        cert.relation = rel;
        check.pass = true;
        check.lhs = "v" + std::to_string(height) + "^" + std::to_string(rel.a);
        check.rhs = fp_text(rel.c) + "*" + inverted + "^" + std::to_string(rel.e);
        check.witness = "0";
      } catch (const NoRelationFound& e) {
        check.witness = e.what();
      }
    }
    cert.checks.push_back(std::move(check));
  }
  cert.timings_ms["unit"] = elapsed_ms(t0);

  t0 = Clock::now();
  const auto printed = printed_congruences(f, p);
  if (!printed.empty()) {
    std::map<std::string, QPoly> cert_symbols;
    std::map<std::string, QPoly> native_symbols;
    for (unsigned i = 0; i < height; ++i) {
      cert_symbols["v" + std::to_string(i + 1)] = qvs[i];
      native_symbols["v" + std::to_string(i + 1)] = images.v[i];
    }
    cert_symbols["Delta_C"] = family_discriminant(f);
    if (f == Family::Shiga) cert_symbols["Q"] = named_element(f, "Q");
    std::map<int, std::optional<TriangularIdeal>> native_ideals;
    for (const auto& pc : printed) {
      CertificateCheck check{pc.name, false, true, pc.lhs, pc.rhs, ""};
      try {
        if (pc.level >= static_cast<int>(height)) throw DomainError("congruence needs v beyond the certified height");
        const RegistryPtr r = pc.native_ring ? spec.registry : ring;
        const auto& symbols = pc.native_ring ? native_symbols : cert_symbols;
        if (pc.level < 0) {
          const Evaluator ev(r, p, nullptr, symbols);
          const QPoly diff = ev.exact(pc.lhs) - ev.exact(pc.rhs);
          check.pass = diff.is_zero();
          check.witness = clip(to_string(diff));
        } else {
          const TriangularIdeal* ideal = nullptr;
          if (pc.level > 0) {
            if (pc.native_ring) {
              auto& slot = native_ideals[pc.level];
              if (!slot) {
                std::vector<FpPoly> gens;
                for (int k = 0; k < pc.level; ++k) gens.push_back(reduce_mod_p(images.v[k], p));
                slot = build_plan(p, gens);
              }
              ideal = &*slot;
            } else {
              if (!ideals[pc.level]) throw NotTriangularizable("no plan for this level");
              ideal = &*ideals[pc.level];
            }
          }
          const Evaluator ev(r, p, ideal, symbols);
          const FpPoly diff = ev.modular(pc.lhs) - ev.modular(pc.rhs);
          check.pass = diff.is_zero();
          check.witness = clip(to_string(diff));
        }
      } catch (const Error& e) {
        check.witness = e.what();
      }
      cert.checks.push_back(std::move(check));
    }
  }
  cert.timings_ms["congruences"] = elapsed_ms(t0);
  return cert;
}

}  // namespace taf
