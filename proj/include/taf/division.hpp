// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// Monomial orders and multi-divisor division with remainder.

#ifndef TAF_DIVISION_HPP
#define TAF_DIVISION_HPP

#include <vector>

#include "taf/mpoly.hpp"

namespace taf {

class MonomialOrder {
 public:
  enum class Kind { Lex, WeightedGradedLex };

  /// `priority` lists variable indices from most to least significant;
  /// omitted indices follow in registry order.
  MonomialOrder(Kind kind, const RegistryPtr& reg, std::vector<std::size_t> priority = {});

  static MonomialOrder lex(const RegistryPtr& reg, std::vector<std::size_t> priority = {}) {
    return MonomialOrder(Kind::Lex, reg, std::move(priority));
  }
  static MonomialOrder graded(const RegistryPtr& reg, std::vector<std::size_t> priority = {}) {
    return MonomialOrder(Kind::WeightedGradedLex, reg, std::move(priority));
  }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }

  /// Strict "a is larger than b".
  bool greater(const Monomial& a, const Monomial& b) const;

 private:
  Kind kind_;
  RegistryPtr reg_;
  std::vector<std::size_t> priority_;
};

/// Thrown when several divisors have leading monomials sharing a variable,
/// so the remainder would depend on the reduction path.
class UniquenessNotGuaranteed : public Error {
 public:
  using Error::Error;
};

template <class C>
struct LeadingTerm {
  Monomial mono;
  C coeff;
};

/// Requires f != 0.
template <class C>
LeadingTerm<C> leading_term(const MultiPoly<C>& f, const MonomialOrder& order);

template <class C>
struct DivisionResult {
  std::vector<MultiPoly<C>> quotients;
  MultiPoly<C> remainder;
};

/// f = sum q_i d_i + r with no term of r divisible by any leading monomial.
template <class C>
DivisionResult<C> divide(const MultiPoly<C>& f, const std::vector<MultiPoly<C>>& divisors,
                         const MonomialOrder& order);

/// Exact quotient f / g; throws DomainError when g does not divide f.
template <class C>
MultiPoly<C> exact_div(const MultiPoly<C>& f, const MultiPoly<C>& g);

}  // namespace taf

#endif  // TAF_DIVISION_HPP
