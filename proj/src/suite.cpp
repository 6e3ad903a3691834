// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "taf/congruences.hpp"
#include "taf/curves.hpp"
#include "taf/division.hpp"
#include "taf/genus.hpp"
#include "taf/kernels.hpp"
#include "taf/landweber.hpp"
#include "taf/modform.hpp"

namespace taf {

namespace {

std::string clip(std::string s, std::size_t n = 240) {
  if (s.size() > n) s = s.substr(0, n) + "...";
  return s;
}

CheckRow row(int criterion, std::string name, std::string statement, bool pass, std::string detail) {
  return {criterion, std::move(name), std::move(statement), pass, clip(std::move(detail))};
}

std::vector<CheckRow> certificate_rows(const std::string& group, Family f, std::uint32_t p,
                                       const std::function<int(const CertificateCheck&)>& criterion_of) {
  const LandweberCertificate cert = certify(f, p, default_height(f), default_inverted(f));
  std::vector<CheckRow> rows;
  std::string structural;
  for (const auto& c : cert.checks) {
    if (c.printed) continue;
    if (!structural.empty()) structural += "; ";
    structural += c.name + (c.pass ? " ok" : " FAILED");
  }
  if (cert.relation) {
    structural += "; v" + std::to_string(cert.height) + "^" + std::to_string(cert.relation->a) + " = " +
                  cert.relation->c.to_string() + "*" + cert.inverted + "^" + std::to_string(cert.relation->e);
  }
  const CertificateCheck* first = nullptr;
  for (const auto& c : cert.checks) {
    if (!c.printed) {
      first = &c;
      break;
    }
  }
  rows.push_back(row(first ? criterion_of(*first) : 0, group + "/regular-sequence",
                     "(" + std::to_string(p) + ", v1, ..., v" + std::to_string(cert.height) + ") regular, v" +
                         std::to_string(cert.height) + " a unit after inverting " + cert.inverted,
                     cert.passed(), structural));
  for (const auto& c : cert.checks) {
    if (!c.printed) continue;
    rows.push_back(row(criterion_of(c), group + "/" + c.name, c.lhs + " == " + clip(c.rhs, 80), c.pass,
                       c.pass ? "residual 0" : "residual " + c.witness));
  }
  return rows;
}

// (P16 - P2^8)/7 at kappa^2 = 1/3, lambda = 1.
CheckRow legendre_rational_row() {
  const QPoly diff = legendre_poly(16) - pow(legendre_poly(2), 8);
  const QPoly in_delta = kappa_square_substitution(diff);
  const auto& reg = in_delta.registry();
  std::vector<Rational> point(reg->size());
  point[reg->require("lambda")] = Rational(1);
  point[reg->require("Delta6")] = (Rational(1) - Rational(1, 3)) * Rational(1, 108);
  const Rational value = evaluate(in_delta, point) * Rational(1, 7);
  return row(2, "legendre-p7/rational-value", "(P16 - P2^8)/7 at (kappa^2, lambda) = (1/3, 1) == -2147/93312",
             value == Rational(-2147, 93312), "value " + value.to_string());
}

std::vector<CheckRow> modform_rows() {
  std::vector<CheckRow> rows;
  for (const auto& id : modform_identity_ids()) {
    const IdentityVerdict v = check_modform_identity(id, kDefaultQOrder);
    rows.push_back(row(7, "modform/" + id, id + " to O(q^200)", v.pass, v.witness));
  }
  bool all = true;
  std::string detail;
  for (unsigned k = 0; k <= 10; ++k) {
    const bool ok = integral_basis_check(k, kDefaultQOrder).pass;
    all = all && ok;
    if (!ok) detail += "k=" + std::to_string(k) + " fails; ";
  }
  rows.push_back(row(7, "modform/integral-basis", "lambda^(k-b) Delta6^b unitriangular for k <= 10", all,
                     detail.empty() ? "k = 0..10 pass" : detail));
  return rows;
}

std::vector<CheckRow> curves_rows() {
  std::vector<CheckRow> rows;
  for (const auto& id : curve_identity_ids()) {
    const IdentityVerdict v = check_curve_identity(id);
    rows.push_back(row(8, "curves/" + id, id, v.pass, v.witness));
  }
  const Degeneration211 d = degenerate_211();
  rows.push_back(row(8, "curves/degenerate-211", "(2,1,1) substitution lands on s^2 = H(t)", d.membership,
                     "cofactor " + to_string(d.cofactor)));
  rows.push_back(row(8, "curves/degenerate-211-differential", "s dx = 3 t y dt on the (2,1,1) model", d.differential,
                     d.differential ? "residual 0" : "residual nonzero"));
  const DegenerationCheck d22 = degenerate_22_check();
  rows.push_back(row(8, "curves/degenerate-22", "(2,2) normalization membership", d22.pass, d22.detail));
  const DegenerationCheck d31 = degenerate_31_check();
  rows.push_back(row(8, "curves/degenerate-31", "(3,1) normalization relations", d31.pass, d31.detail));
  return rows;
}

std::vector<CheckRow> restriction_rows() {
  std::vector<CheckRow> rows;
  std::mt19937_64 rng(kSuiteSeed);
  const auto reg = registries::picard();
  bool hom = true;
  for (int i = 0; i < 20 && hom; ++i) {
    const QPoly f = random_poly(reg, rng, 5, 4);
    const QPoly g = random_poly(reg, rng, 5, 4);
    hom = restrict(f * g) == restrict(f) * restrict(g) && restrict(f + g) == restrict(f) + restrict(g);
    const QPoly h = random_homogeneous(reg, rng, 72, 4);
    const QPoly rh = restrict(h);
    hom = hom && (rh.is_zero() || (is_homogeneous(rh) && weighted_degree(rh).degree == 72));
  }
  rows.push_back(row(9, "restriction/homomorphism", "r(fg) = r(f) r(g), r(f+g) = r(f) + r(g), degree kept", hom,
                     "20 random pairs, fixed seed"));

  const QPoly rd = restrict(family_discriminant(Family::Picard));
  rows.push_back(row(9, "restriction/discriminant", "r(Delta_C) = 0", rd.is_zero(), "r(Delta_C) = " + clip(to_string(rd))));

  const RestrictedModelReport m = restricted_model_check();
  rows.push_back(row(9, "restriction/model", "restricted quartic = (x-a)(x-b)(x-c)^2, a+b+2c = 0, (kappa, lambda) recovered",
                     m.pass(),
                     "root sum " + to_string(m.root_sum) + ", factor residual " + to_string(m.factor_residual) +
                         ", kappa residual " + to_string(m.kappa_residual) + ", lambda residual " +
                         to_string(m.lambda_residual)));

  constexpr unsigned kBound = 37;
  ExponentTable table;
  table[6] = restriction_images().at("G2");
  table[9] = restriction_images().at("G3");
  table[12] = restriction_images().at("G4");
  const PolySeries expected =
      integrate(fractional_power(series_from_table(table, QPoly(registries::kappa_lambda()), kBound - 1), Rational(-1, 3)));
  const PolySeries restricted = restricted_picard_log(kBound);
  rows.push_back(row(9, "restriction/log", "log of r o phi^P from the restricted table through u^36",
                     restricted == expected, restricted == expected ? "coefficientwise equal" : "mismatch"));

  for (std::uint32_t p : {7u, 13u}) {
    const IsoReport r = fgl_iso_integrality(p, kDefaultIsoOrder, kDefaultIsoLawOrder);
    std::string detail = "log identity " + std::string(r.log_identity ? "ok" : "FAILED") + ", law identity below order " +
                         std::to_string(r.bivariate_order) + (r.bivariate_identity ? " ok" : " FAILED") +
                         ", parameter change " + (r.matches_parameter_change ? "ok" : "FAILED");
    rows.push_back(row(9, "restriction/iso-p" + std::to_string(p),
                       "theta between phi^L and r o phi^P is " + std::to_string(p) + "-local to degree 40", r.pass(),
                       detail));
  }
  return rows;
}

std::vector<CheckRow> supersingular_rows() {
  std::vector<CheckRow> rows;
  for (std::uint32_t p : {7u, 13u}) {
    const SupersingularReport s = supersingular_height(p);
    const bool ok = s.v1_zero && s.v2_zero && s.oracle_agrees && s.verdict == "height 3";
    rows.push_back(row(10, "supersingular/p" + std::to_string(p),
                       "v1 = v2 = 0, valuation of the u^" + std::to_string(s.exponent) + " coefficient", ok,
                       "valuation " + std::to_string(s.valuation) + ", " + s.verdict +
                           (s.oracle_agrees ? ", oracle agrees" : ", oracle DISAGREES")));
  }
  return rows;
}

QSeries random_series(std::mt19937_64& rng, unsigned bound, long lead) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  QSeries s(Rational(0), bound);
  s.set(lead, Rational(1));
  for (unsigned k = lead + 1; k < bound; ++k) s.set(k, Rational(num(rng), den(rng)));
  return s;
}

std::vector<CheckRow> property_rows() {
  std::vector<CheckRow> rows;
  std::mt19937_64 rng(kSuiteSeed);

  for (Family f : {Family::Legendre, Family::Picard, Family::Shiga, Family::Supersingular}) {
    const FormalGroupLaw law = fgl_from_log(genus_log(genus_spec(f), 21), 21);
    const bool unit = check_unit(law);
    const bool comm = check_commutative(law);
    const bool assoc = check_associative(law);
    rows.push_back(row(11, "properties/fgl-axioms-" + family_id(f), "unit, commutativity, associativity to degree 20",
                       unit && comm && assoc,
                       std::string("unit ") + (unit ? "ok" : "FAILED") + ", commutative " + (comm ? "ok" : "FAILED") +
                           ", associative " + (assoc ? "ok" : "FAILED")));
  }

  bool round = true;
  bool additive = true;
  for (int i = 0; i < 10; ++i) {
    const QSeries s = random_series(rng, 20, 1);
    const QSeries id = series_variable(Rational(0), 20);
    round = round && compose(s, revert(s)) == id && compose(revert(s), s) == id;
    const QSeries g = random_series(rng, 20, 0);
    const Rational a(-1, 3);
    const Rational b(1, 2);
    additive = additive && fractional_power(g, a) * fractional_power(g, b) == fractional_power(g, a + b) &&
               fractional_power(g, a) == fractional_power_binomial(g, a);
  }
  rows.push_back(row(11, "properties/revert-compose", "s o revert(s) = revert(s) o s = u", round, "10 random series"));
  rows.push_back(row(11, "properties/power-additivity", "g^a g^b = g^(a+b), two fractional power routes agree", additive,
                     "10 random series"));

  const auto reg = registries::picard();
  const MonomialOrder lex = MonomialOrder::lex(reg);
  bool residual = true;
  for (int i = 0; i < 20 && residual; ++i) {
    QPoly d1 = QPoly::monomial(reg, Monomial::variable(0, 3), Rational(1));
    QPoly d2 = QPoly::monomial(reg, Monomial::variable(1, 2), Rational(1));
    const QPoly tail = random_poly(reg, rng, 4, 3);
    for (const auto& t : tail.terms()) {
      if (t.mono[0] < 3) d1 += QPoly::monomial(reg, t.mono, t.coeff);
      if (t.mono[0] == 0 && t.mono[1] < 2) d2 += QPoly::monomial(reg, t.mono, t.coeff);
    }
    const QPoly f = random_poly(reg, rng, 12, 6);
    const auto res = divide(f, {d1, d2}, lex);
    QPoly back = res.remainder;
    back += res.quotients[0] * d1;
    back += res.quotients[1] * d2;
    residual = back == f;
    const Monomial l1 = leading_term(d1, lex).mono;
    const Monomial l2 = leading_term(d2, lex).mono;
    for (const auto& t : res.remainder.terms()) residual = residual && !l1.divides(t.mono) && !l2.divides(t.mono);
  }
  rows.push_back(row(11, "properties/divide-residual", "f = sum q_i d_i + r, no term of r divisible by a lead", residual,
                     "20 random divisions"));

  const int saved = kernels::threads();
  kernels::set_threads(4);
  bool kernels_agree = true;
  for (int i = 0; i < 3 && kernels_agree; ++i) {
    const QPoly f = random_poly(reg, rng, 400, 40);
    const QPoly g = random_poly(reg, rng, 400, 40);
    kernels_agree = kernels::mul_serial(f, g) == kernels::mul_parallel(f, g);
    const FpPoly fp = reduce_mod_p(f, 13);
    const FpPoly gp = reduce_mod_p(g, 13);
    kernels_agree = kernels_agree && kernels::mul_serial(fp, gp) == kernels::mul_parallel(fp, gp);
  }
  const GenusSpec& picard = genus_spec(Family::Picard);
  const bool isolated = isolated_coeff_fractional_power(picard.table, picard.exponent, 96, picard.zero()) ==
                        isolated_coeff_fractional_power_serial(picard.table, picard.exponent, 96, picard.zero());
  kernels::set_threads(saved);
  rows.push_back(row(11, "properties/kernels-serial-parallel", "parallel products equal the serial reference",
                     kernels_agree, "3 random pairs of 400 terms over Q and F_13"));
  rows.push_back(row(11, "properties/isolated-serial-parallel", "parallel isolated coefficient equals the serial one",
                     isolated, "Picard table, u^96"));
  return rows;
}

const std::map<std::string, std::function<std::vector<CheckRow>()>>& group_table() {
  static const std::map<std::string, std::function<std::vector<CheckRow>()>> table{
      {"legendre-p7",
       [] {
         auto rows = certificate_rows("legendre-p7", Family::Legendre, 7, [](const CertificateCheck& c) {
           return c.name.rfind("v2", 0) == 0 ? 2 : 1;
         });
         rows.push_back(legendre_rational_row());
         return rows;
       }},
      {"legendre-p13",
       [] { return certificate_rows("legendre-p13", Family::Legendre, 13, [](const CertificateCheck&) { return 3; }); }},
      {"picard-p7",
       [] { return certificate_rows("picard-p7", Family::Picard, 7, [](const CertificateCheck&) { return 4; }); }},
      {"picard-p13",
       [] { return certificate_rows("picard-p13", Family::Picard, 13, [](const CertificateCheck&) { return 5; }); }},
      {"shiga-p7", [] { return certificate_rows("shiga-p7", Family::Shiga, 7, [](const CertificateCheck&) { return 6; }); }},
      {"modform", modform_rows},
      {"curves", curves_rows},
      {"restriction", restriction_rows},
      {"supersingular", supersingular_rows},
      {"properties", property_rows},
  };
  return table;
}

}  // namespace

bool GroupResult::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> groups{"legendre-p7", "legendre-p13", "picard-p7",     "picard-p13", "shiga-p7",
                                               "modform",     "curves",       "restriction",   "supersingular",
                                               "properties"};
  return groups;
}

GroupResult run_group(const std::string& group) {
  const auto& table = group_table();
  const auto it = table.find(group);
  if (it == table.end()) throw DomainError("unknown suite group '" + group + "'");
  const auto start = std::chrono::steady_clock::now();
  GroupResult out;
  out.group = group;
  out.rows = it->second();
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<GroupResult> run_suite(const std::vector<std::string>& selectors) {
  std::vector<GroupResult> out;
  for (const auto& group : suite_groups()) {
    bool whole = selectors.empty();
    std::vector<std::string> wanted_rows;
    for (const auto& s : selectors) {
      if (s == group) whole = true;
      if (s.rfind(group + "/", 0) == 0) wanted_rows.push_back(s);
    }
    if (!whole && wanted_rows.empty()) continue;
    GroupResult r = run_group(group);
    if (!whole) {
      std::erase_if(r.rows, [&](const CheckRow& row) {
        return std::find(wanted_rows.begin(), wanted_rows.end(), row.name) == wanted_rows.end();
      });
    }
    out.push_back(std::move(r));
  }
  for (const auto& s : selectors) {
    const bool known = std::any_of(out.begin(), out.end(), [&](const GroupResult& g) {
      return g.group == s || std::any_of(g.rows.begin(), g.rows.end(), [&](const CheckRow& r) { return r.name == s; });
    });
    if (!known) throw DomainError("unknown check or group '" + s + "'");
  }
  return out;
}

QPoly random_poly(const RegistryPtr& reg, std::mt19937_64& rng, unsigned terms, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> e(0, max_exp == 0 ? 0 : max_exp - 1);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<QPoly::Term> out;
  for (unsigned i = 0; i < terms; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < reg->size(); ++v) m[v] = static_cast<std::uint16_t>(e(rng));
    out.push_back({m, Rational(num(rng), den(rng))});
  }
  return QPoly::from_terms(reg, {}, std::move(out));
}

QPoly random_homogeneous(const RegistryPtr& reg, std::mt19937_64& rng, long degree, unsigned terms) {
  std::vector<Monomial> monos;
  std::function<void(std::size_t, long, Monomial)> walk = [&](std::size_t v, long left, Monomial m) {
    if (v == reg->size()) {
      if (left == 0) monos.push_back(m);
      return;
    }
    const long w = reg->weight(v);
    if (w <= 0) throw DomainError("random_homogeneous needs positive weights");
    for (long k = 0; k * w <= left; ++k) {
      m[v] = static_cast<std::uint16_t>(k);
      walk(v + 1, left - k * w, m);
    }
  };
  walk(0, degree, Monomial{});
  if (monos.empty()) return QPoly(reg);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<long> num(-20, 20);
  std::vector<QPoly::Term> out;
  for (unsigned i = 0; i < terms; ++i) out.push_back({monos[pick(rng)], Rational(num(rng))});
  return QPoly::from_terms(reg, {}, std::move(out));
}

}  // namespace taf
