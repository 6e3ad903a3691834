// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// Sparse multivariate polynomials over an exact coefficient domain with a
// weighted grading taken from the variable registry.

#ifndef TAF_MPOLY_HPP
#define TAF_MPOLY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "taf/coeff.hpp"
#include "taf/registry.hpp"

namespace taf {

template <class C>
struct PolyTerm {
  Monomial mono;
  C coeff;
};

/// Keeps only terms whose degree in `vars` is below `bound`. Used for
/// truncated multivariate series stored as polynomials.
struct Truncation {
  std::vector<std::size_t> vars;
  unsigned bound = 0;

  bool keeps(const Monomial& m) const {
    unsigned d = 0;
    for (auto v : vars) d += m[v];
    return d < bound;
  }
};

template <class C>
class MultiPoly {
 public:
  using Coeff = C;
  using Domain = typename CoeffTraits<C>::Domain;
  using Term = PolyTerm<C>;

  /// Unbound zero; only useful as a placeholder.
  MultiPoly() = default;
  explicit MultiPoly(RegistryPtr reg, Domain dom = {}) : reg_(std::move(reg)), dom_(dom) {}

  static MultiPoly constant(RegistryPtr reg, const C& c, Domain dom = {});
  static MultiPoly integer(RegistryPtr reg, long n, Domain dom = {});
  static MultiPoly variable(RegistryPtr reg, const std::string& name, Domain dom = {});
  static MultiPoly monomial(RegistryPtr reg, const Monomial& m, const C& c, Domain dom = {});
  /// Sorts, merges duplicates and drops zeros.
  static MultiPoly from_terms(RegistryPtr reg, Domain dom, std::vector<Term> terms);
  /// Terms must already be sorted descending, unique and nonzero.
  static MultiPoly from_sorted_terms(RegistryPtr reg, Domain dom, std::vector<Term> terms);

  const RegistryPtr& registry() const { return reg_; }
  const Domain& domain() const { return dom_; }
  /// Sorted descending by exponent vector (lex on variable index).
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  C coefficient(const Monomial& m) const;
  C constant_term() const { return coefficient(Monomial{}); }

  MultiPoly zero_like() const { return MultiPoly(reg_, dom_); }
  MultiPoly one_like() const { return constant(reg_, dom_.one(), dom_); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b, nullptr); }

  MultiPoly scaled(const C& c) const;
  MultiPoly scaled_rational(const Rational& r) const { return scaled(dom_.from_rational(r)); }
  MultiPoly times_monomial(const Monomial& m, const C& c) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return a.terms_.empty() || same_registry(a.reg_, b.reg_);
  }

  static MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, const Truncation* trunc);

  void check_compatible(const MultiPoly& o) const;

 private:
  RegistryPtr reg_;
  Domain dom_{};
  std::vector<Term> terms_;
};

using QPoly = MultiPoly<Rational>;
using FpPoly = MultiPoly<Fp>;

template <class C>
MultiPoly<C> pow(const MultiPoly<C>& f, unsigned long n, const Truncation* trunc = nullptr);

struct WeightedDegree {
  long degree;      // common degree, or the maximum when mixed
  bool homogeneous;
};

/// Throws DomainError for the zero polynomial.
template <class C>
WeightedDegree weighted_degree(const MultiPoly<C>& f);

template <class C>
bool is_homogeneous(const MultiPoly<C>& f) {
  return f.is_zero() || weighted_degree(f).homogeneous;
}

/// Replaces variables by polynomials over `target`. Variables without an
/// explicit image map to the same-named target variable; if there is none,
/// throws DomainError.
template <class C>
MultiPoly<C> substitute(const MultiPoly<C>& f, const std::map<std::string, MultiPoly<C>>& images,
                        const RegistryPtr& target, const Truncation* trunc = nullptr);

/// Re-expresses f over a registry containing all of its variables (by name).
template <class C>
MultiPoly<C> embed(const MultiPoly<C>& f, const RegistryPtr& target);

template <class C>
MultiPoly<C> derivative(const MultiPoly<C>& f, const std::string& var);

template <class C>
C evaluate(const MultiPoly<C>& f, const std::vector<C>& point);

/// Keeps terms accepted by the truncation.
template <class C>
MultiPoly<C> truncate(const MultiPoly<C>& f, const Truncation& trunc);

/// Degree in one variable (-1 for zero).
template <class C>
int degree_in(const MultiPoly<C>& f, std::size_t var);

/// Coefficient of var^k, as a polynomial over the same registry.
template <class C>
MultiPoly<C> coefficient_of(const MultiPoly<C>& f, std::size_t var, unsigned k);

template <class D, class C, class F>
MultiPoly<D> map_coefficients(const MultiPoly<C>& f, typename CoeffTraits<D>::Domain dom, F&& fn) {
  std::vector<PolyTerm<D>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    D c = fn(t.coeff);
    if (!c.is_zero()) out.push_back({t.mono, std::move(c)});
  }
  return MultiPoly<D>::from_sorted_terms(f.registry(), dom, std::move(out));
}

/// The only crossing from Q to F_p.
FpPoly reduce_mod_p(const QPoly& f, std::uint32_t p);

/// Minimum p-valuation over the coefficients (infinite for zero).
Valuation min_p_valuation(const QPoly& f, std::uint64_t p);

/// Canonical text: terms by descending weighted degree, then lex.
template <class C>
std::string to_string(const MultiPoly<C>& f);

/// Parses the canonical grammar (plus parentheses and division by constants).
template <class C>
MultiPoly<C> parse_poly(const std::string& text, const RegistryPtr& reg,
                        typename CoeffTraits<C>::Domain dom = {});

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace taf

#endif  // TAF_MPOLY_HPP
