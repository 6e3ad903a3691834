// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cctype>

#include "taf/mpoly.hpp"

namespace taf {

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := ('-' | '+') unary | power
// power  := atom ('^' integer)?
// atom   := integer | identifier | '(' expr ')'
template <class C>
class Parser {
 public:
  using Poly = MultiPoly<C>;
  using Domain = typename CoeffTraits<C>::Domain;

  Parser(const std::string& text, RegistryPtr reg, Domain dom) : s_(text), reg_(std::move(reg)), dom_(dom) {}

  Poly run() {
    Poly f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly f = term();
    for (;;) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  Poly term() {
    Poly f = unary();
    for (;;) {
      if (accept('*')) {
        f *= unary();
      } else if (accept('/')) {
        const Poly g = unary();
        if (!g.is_constant() || g.is_zero()) fail("division only by nonzero constants");
        f = f.scaled(g.constant_term().inverse());
      } else {
        return f;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return pow(base, std::stoul(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (accept('(')) {
      Poly f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const Rational r(mpz_class(s_.substr(start, pos_ - start)));
      return Poly::constant(reg_, dom_.from_rational(r), dom_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (!reg_->index_of(name)) fail("unknown variable '" + name + "'");
      return Poly::variable(reg_, name, dom_);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  RegistryPtr reg_;
  Domain dom_;
};

}  // namespace

template <class C>
MultiPoly<C> parse_poly(const std::string& text, const RegistryPtr& reg, typename CoeffTraits<C>::Domain dom) {
  return Parser<C>(text, reg, dom).run();
}

template QPoly parse_poly<Rational>(const std::string&, const RegistryPtr&, RationalField);
template FpPoly parse_poly<Fp>(const std::string&, const RegistryPtr&, PrimeField);

}  // namespace taf
