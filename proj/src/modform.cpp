// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/modform.hpp"

#include <cmath>
#include <sstream>

namespace taf {

namespace {

int chi3(unsigned long d) {
  switch (d % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

QSeries zero_series(unsigned n) { return QSeries(Rational(0), n, "q"); }

QExpansion make(QSeries s, int weight) { return {std::move(s), weight}; }

QSeries constant(unsigned n, long c) {
  QSeries s = zero_series(n);
  s.set(0, Rational(c));
  return s;
}

std::string residual_text(const QSeries& s) {
  for (unsigned k = 0; k < s.bound(); ++k) {
    if (!s[k].is_zero()) return "first nonzero residual at q^" + std::to_string(k) + ": " + s[k].to_string();
  }
  return "0";
}

}  // namespace

bool QExpansion::is_integral() const {
  for (unsigned k = 0; k < series.bound(); ++k) {
    if (series[k].denominator() != 1) return false;
  }
  return true;
}

std::string QExpansion::to_text() const {
  std::ostringstream os;
  for (unsigned k = 0; k < series.bound(); ++k) os << (k ? ", " : "") << series[k].to_string();
  return os.str();
}

QExpansion eisenstein(Eisenstein id, unsigned n) {
  if (n == 0) throw DomainError("eisenstein: order must be positive");
  std::vector<mpz_class> sums(n, 0);
  for (unsigned long d = 1; d < n; ++d) {
    mpz_class term;
    switch (id) {
      case Eisenstein::E1: term = chi3(d); break;
      case Eisenstein::E3: term = chi3(d) * mpz_class(d) * d; break;
      case Eisenstein::E4: term = mpz_class(d) * d * d; break;
    }
    if (term == 0) continue;
    for (unsigned long m = d; m < n; m += d) sums[m] += term;
  }
  const long scale = id == Eisenstein::E1 ? 6 : id == Eisenstein::E3 ? -9 : 240;
  const int weight = id == Eisenstein::E1 ? 1 : id == Eisenstein::E3 ? 3 : 4;
  QSeries s = constant(n, 1);
  for (unsigned k = 1; k < n; ++k) s.set(k, Rational(mpz_class(sums[k] * scale)));
  return make(std::move(s), weight);
}

QExpansion theta_a2(unsigned n) {
  if (n == 0) throw DomainError("theta_a2: order must be positive");
  // m^2 + mn + n^2 >= 3/4 max(|m|, |n|)^2, so this radius covers every norm below n.
  const long radius = static_cast<long>(std::ceil(2.0 * std::sqrt(n / 3.0))) + 1;
  std::vector<long> counts(n, 0);
  for (long a = -radius; a <= radius; ++a) {
    for (long b = -radius; b <= radius; ++b) {
      const long norm = a * a + a * b + b * b;
      if (norm < static_cast<long>(n)) ++counts[norm];
    }
  }
  QSeries s = zero_series(n);
  for (unsigned k = 0; k < n; ++k) s.set(k, Rational(counts[k]));
  return make(std::move(s), 1);
}

DerivedForms derived_forms(unsigned n) {
  if (n < 2) throw DomainError("derived_forms: order must be at least 2");
  const QSeries e1 = eisenstein(Eisenstein::E1, n).series;
  const QSeries e3 = eisenstein(Eisenstein::E3, n).series;
  const QSeries e4 = eisenstein(Eisenstein::E4, n).series;
  const QSeries e1_cubed = pow(e1, 3);

  DerivedForms out;
  out.kappa = make(e3.scaled(Rational(2)) - e1_cubed, 3);
  out.lambda = make(e1_cubed * e1_cubed, 6);
  out.delta6 = make((e3 * (e1_cubed - e3)).scaled(Rational(1, 27)), 6);

  QSeries dilated = zero_series(n);
  for (unsigned k = 0; k < n; k += 3) dilated.set(k, e4[k / 3]);
  out.e4 = make(dilated.scaled(Rational(9)) - e4, 4);

  const QSeries kappa2 = out.kappa.series * out.kappa.series;
  out.jG = make(out.lambda.series * inverse(kappa2.scaled(Rational(4))), 0);
  return out;
}

const std::vector<std::string>& form_names() {
  static const std::vector<std::string> names{"E1", "E3", "E4", "e4", "kappa", "lambda", "Delta6", "jG"};
  return names;
}

QExpansion form_by_name(const std::string& id, unsigned n) {
  if (id == "E1") return eisenstein(Eisenstein::E1, n);
  if (id == "E3") return eisenstein(Eisenstein::E3, n);
  if (id == "E4") return eisenstein(Eisenstein::E4, n);
  if (id == "e4" || id == "kappa" || id == "lambda" || id == "Delta6" || id == "jG") {
    DerivedForms d = derived_forms(std::max(n, 2u));
    QExpansion f = id == "e4" ? d.e4 : id == "kappa" ? d.kappa : id == "lambda" ? d.lambda : id == "Delta6" ? d.delta6 : d.jG;
    f.series = f.series.with_bound(n);
    return f;
  }
  throw DomainError("unknown form '" + id + "'");
}

const std::vector<std::string>& modform_identity_ids() {
  static const std::vector<std::string> ids{"e4-eisenstein", "kappa-square",   "theta-a2",
                                            "delta6-integral", "lambda-leading", "j-at-cusp"};
  return ids;
}

IdentityVerdict check_modform_identity(const std::string& id, unsigned n) {
  IdentityVerdict v{id, false, ""};
  if (id == "theta-a2") {
    const QSeries r = theta_a2(n).series - eisenstein(Eisenstein::E1, n).series;
    v.witness = residual_text(r);
    v.pass = v.witness == "0";
    return v;
  }
  const DerivedForms d = derived_forms(n);
  if (id == "e4-eisenstein") {
    const QSeries e1 = eisenstein(Eisenstein::E1, n).series;
    const QSeries r = d.e4.series - (e1 * d.kappa.series).scaled(Rational(8));
    v.witness = residual_text(r);
    v.pass = v.witness == "0";
  } else if (id == "kappa-square") {
    const QSeries r = d.kappa.series * d.kappa.series - (d.lambda.series - d.delta6.series.scaled(Rational(108)));
    v.witness = residual_text(r);
    v.pass = v.witness == "0";
  } else if (id == "delta6-integral") {
    v.pass = d.delta6.is_integral() && d.delta6[0].is_zero() && d.delta6[1].is_one();
    v.witness = "Delta6 = " + d.delta6[0].to_string() + " + " + d.delta6[1].to_string() + "*q + O(q^2)" +
                (d.delta6.is_integral() ? ", integral" : ", not integral");
  } else if (id == "lambda-leading") {
    v.pass = d.lambda[0] == Rational(1) && d.lambda[1] == Rational(36);
    v.witness = "lambda = " + d.lambda[0].to_string() + " + " + d.lambda[1].to_string() + "*q + O(q^2)";
  } else if (id == "j-at-cusp") {
    const QSeries r = d.jG.series * (d.kappa.series * d.kappa.series).scaled(Rational(4)) - d.lambda.series;
    v.pass = d.jG[0] == Rational(1, 4) && residual_text(r) == "0";
    v.witness = "jG(0) = " + d.jG[0].to_string() + ", jG*(-2 kappa)^2 - lambda: " + residual_text(r);
  } else {
    throw DomainError("unknown modular form identity '" + id + "'");
  }
  return v;
}

BasisCheck integral_basis_check(unsigned k, unsigned n) {
  if (n <= k) throw DomainError("integral_basis_check: order must exceed k");
  const DerivedForms d = derived_forms(std::max(n, 2u));
  BasisCheck out;
  out.pass = true;
  for (unsigned b = 0; b <= k; ++b) {
    const QSeries f = pow(d.lambda.series, k - b) * pow(d.delta6.series, b);
    std::vector<Rational> row;
    for (unsigned c = 0; c <= k; ++c) {
      row.push_back(f[c]);
      if (f[c].denominator() != 1) out.pass = false;
      if (c < b && !f[c].is_zero()) out.pass = false;
      if (c == b && !f[c].is_one()) out.pass = false;
    }
    out.matrix.push_back(std::move(row));
  }
  return out;
}

}  // namespace taf
