// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/coeff.hpp"

#include <cctype>

namespace taf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw DomainError("not a rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  return Rational(mpz_class(num), mpz_class(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

long Valuation::value() const {
  if (infinite_) throw DomainError("valuation of zero is infinite");
  return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

Valuation p_valuation(const mpz_class& x, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("p_valuation: " + std::to_string(p) + " is not prime");
  if (x == 0) return Valuation::infinity();
  mpz_class rest;
  mpz_class pz(static_cast<unsigned long>(p));
  const auto v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  return Valuation::finite(static_cast<long>(v));
}

Valuation p_valuation(const Rational& x, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("p_valuation: " + std::to_string(p) + " is not prime");
  if (x.is_zero()) return Valuation::infinity();
  return Valuation::finite(p_valuation(x.numerator(), p).value() -
                           p_valuation(x.denominator(), p).value());
}

Fp::Fp(std::int64_t value, std::uint32_t modulus) : p_(modulus) {
  if (modulus < 2) throw DomainError("Fp: modulus must be at least 2");
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  r_ = static_cast<std::uint32_t>(r);
}

void Fp::check_same(const Fp& o) const {
  if (p_ != o.p_) throw DomainError("Fp: mixed moduli");
}

Fp& Fp::operator+=(const Fp& o) {
  check_same(o);
  std::uint64_t s = std::uint64_t{r_} + o.r_;
  if (s >= p_) s -= p_;
  r_ = static_cast<std::uint32_t>(s);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check_same(o);
  r_ = r_ >= o.r_ ? r_ - o.r_ : static_cast<std::uint32_t>(std::uint64_t{r_} + p_ - o.r_);
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check_same(o);
  r_ = static_cast<std::uint32_t>((std::uint64_t{r_} * o.r_) % p_);
  return *this;
}

Fp Fp::inverse() const {
  if (r_ == 0) throw DomainError("Fp: inverse of zero");
  // Extended Euclid; modulus need not be prime as long as gcd is 1.
  std::int64_t a = r_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw DomainError("Fp: element not invertible");
  return Fp(x0, p_);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp result(1, p_), base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.residue(); }

Fp reduce_mod_p(const Rational& x, std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("reduce_mod_p: " + std::to_string(p) + " is not prime");
  const unsigned long den = mpz_fdiv_ui(x.value().get_den_mpz_t(), p);
  if (den == 0) throw NotPLocal(x.to_string() + " is not " + std::to_string(p) + "-local");
  const unsigned long num = mpz_fdiv_ui(x.value().get_num_mpz_t(), p);
  return Fp(static_cast<std::int64_t>(num), p) / Fp(static_cast<std::int64_t>(den), p);
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
}

ModPk::ModPk(const Rational& x, std::uint32_t p, unsigned k) : p_(p) {
  if (!is_prime(p) || k == 0) throw DomainError("ModPk: need prime p and k >= 1");
  mpz_ui_pow_ui(m_.get_mpz_t(), p, k);
  mpz_class den = x.denominator();
  if (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    throw NotPLocal(x.to_string() + " is not " + std::to_string(p) + "-local");
  }
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m_.get_mpz_t());
  r_ = x.numerator() * inv;
  mpz_fdiv_r(r_.get_mpz_t(), r_.get_mpz_t(), m_.get_mpz_t());
}

ModPk& ModPk::operator+=(const ModPk& o) {
  if (m_ != o.m_) throw DomainError("ModPk: mixed moduli");
  r_ += o.r_;
  mpz_fdiv_r(r_.get_mpz_t(), r_.get_mpz_t(), m_.get_mpz_t());
  return *this;
}

ModPk& ModPk::operator*=(const ModPk& o) {
  if (m_ != o.m_) throw DomainError("ModPk: mixed moduli");
  r_ *= o.r_;
  mpz_fdiv_r(r_.get_mpz_t(), r_.get_mpz_t(), m_.get_mpz_t());
  return *this;
}

}  // namespace taf
