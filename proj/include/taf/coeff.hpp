// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// Exact coefficient domains: rationals over GMP, prime fields, and
// residues modulo p^k.

#ifndef TAF_COEFF_HPP
#define TAF_COEFF_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace taf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument for a mathematical domain (non-prime modulus, bad exponent, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A rational whose denominator is divisible by p was reduced mod p.
class NotPLocal : public Error {
 public:
  using Error::Error;
};

bool is_prime(std::uint64_t n);

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "num/den" or "num".
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const;

  /// "num/den", den omitted when 1.
  std::string to_string() const;

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, long exponent);
std::ostream& operator<<(std::ostream& os, const Rational& r);

/// p-adic valuation; infinite for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(0, true); }
  static Valuation finite(long v) { return Valuation(v, false); }

  bool is_infinite() const { return infinite_; }
  long value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  std::string to_string() const;

 private:
  Valuation(long v, bool inf) : value_(v), infinite_(inf) {}
  long value_;
  bool infinite_;
};

Valuation p_valuation(const mpz_class& x, std::uint64_t p);
Valuation p_valuation(const Rational& x, std::uint64_t p);

/// Element of F_p. The modulus travels with the value.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t modulus);

  std::uint32_t residue() const { return r_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  Fp operator-() const { return Fp(r_ == 0 ? 0 : p_ - r_, p_, Raw{}); }
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.r_ == b.r_ && a.p_ == b.p_; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  std::string to_string() const { return std::to_string(r_); }

 private:
  struct Raw {};
  Fp(std::uint32_t r, std::uint32_t p, Raw) : r_(r), p_(p) {}
  void check_same(const Fp& o) const;

  std::uint32_t r_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

/// Residue of a p-local rational in F_p; throws NotPLocal if p divides the denominator.
Fp reduce_mod_p(const Rational& x, std::uint32_t p);

/// Residue of a p-local rational in Z/p^k.
class ModPk {
 public:
  ModPk(const Rational& x, std::uint32_t p, unsigned k);

  const mpz_class& residue() const { return r_; }
  const mpz_class& modulus() const { return m_; }
  std::uint32_t prime() const { return p_; }

  ModPk& operator+=(const ModPk& o);
  ModPk& operator*=(const ModPk& o);
  friend ModPk operator+(ModPk a, const ModPk& b) { return a += b; }
  friend ModPk operator*(ModPk a, const ModPk& b) { return a *= b; }
  friend bool operator==(const ModPk& a, const ModPk& b) { return a.r_ == b.r_ && a.m_ == b.m_; }

 private:
  mpz_class r_;
  mpz_class m_;
  std::uint32_t p_;
};

// Coefficient domains. A polynomial carries its domain so that zero
// polynomials still know where they live.

struct RationalField {
  using value_type = Rational;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long n) const { return Rational(n); }
  Rational from_rational(const Rational& r) const { return r; }
  std::string name() const { return "QQ"; }
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

struct PrimeField {
  std::uint32_t p = 0;

  explicit PrimeField(std::uint32_t prime);
  PrimeField() = default;

  using value_type = Fp;
  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp from_int(long n) const { return Fp(n, p); }
  Fp from_rational(const Rational& r) const { return reduce_mod_p(r, p); }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  using Domain = RationalField;
};

template <>
struct CoeffTraits<Fp> {
  using Domain = PrimeField;
};

}  // namespace taf

#endif  // TAF_COEFF_HPP
