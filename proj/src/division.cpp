// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/division.hpp"

#include <algorithm>
#include <map>

namespace taf {

MonomialOrder::MonomialOrder(Kind kind, const RegistryPtr& reg, std::vector<std::size_t> priority)
    : kind_(kind), reg_(reg), priority_(std::move(priority)) {
  std::vector<bool> seen(reg_->size(), false);
  for (auto v : priority_) {
    if (v >= reg_->size() || seen[v]) throw DomainError("monomial order: bad priority list");
    seen[v] = true;
  }
  for (std::size_t v = 0; v < reg_->size(); ++v) {
    if (!seen[v]) priority_.push_back(v);
  }
}

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::WeightedGradedLex) {
    const long da = weighted_degree(a, *reg_);
    const long db = weighted_degree(b, *reg_);
    if (da != db) return da > db;
  }
  for (auto v : priority_) {
    if (a[v] != b[v]) return a[v] > b[v];
  }
  return false;
}

template <class C>
LeadingTerm<C> leading_term(const MultiPoly<C>& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  const auto* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.greater(t.mono, best->mono)) best = &t;
  }
  return {best->mono, best->coeff};
}

template <class C>
DivisionResult<C> divide(const MultiPoly<C>& f, const std::vector<MultiPoly<C>>& divisors,
                         const MonomialOrder& order) {
  std::vector<LeadingTerm<C>> lead;
  for (const auto& d : divisors) {
    f.check_compatible(d);
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    lead.push_back(leading_term(d, order));
  }
  for (std::size_t i = 0; i < lead.size(); ++i) {
    for (std::size_t j = i + 1; j < lead.size(); ++j) {
      if (!lead[i].mono.coprime(lead[j].mono)) {
        throw UniquenessNotGuaranteed("divisor leading monomials are not pairwise coprime");
      }
    }
  }
  std::vector<C> lead_inv;
  for (const auto& l : lead) lead_inv.push_back(l.coeff.inverse());

  auto cmp = [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); };
  std::map<Monomial, C, decltype(cmp)> work(cmp);
  for (const auto& t : f.terms()) work.emplace(t.mono, t.coeff);

  std::vector<std::vector<PolyTerm<C>>> qterms(divisors.size());
  std::vector<PolyTerm<C>> rterms;
  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = it->first;
    const C c = it->second;
    work.erase(it);
    std::size_t k = 0;
    while (k < lead.size() && !lead[k].mono.divides(m)) ++k;
    if (k == lead.size()) {
      rterms.push_back({m, c});
      continue;
    }
    const Monomial qm = m / lead[k].mono;
    const C qc = c * lead_inv[k];
    qterms[k].push_back({qm, qc});
    for (const auto& t : divisors[k].terms()) {
      if (t.mono == lead[k].mono) continue;
      const Monomial pm = t.mono * qm;
      const C pc = t.coeff * qc;
      auto [pos, inserted] = work.try_emplace(pm, -pc);
      if (!inserted) {
        pos->second -= pc;
        if (pos->second.is_zero()) work.erase(pos);
      }
    }
  }
  DivisionResult<C> out{{}, MultiPoly<C>::from_terms(f.registry(), f.domain(), std::move(rterms))};
  for (auto& q : qterms) out.quotients.push_back(MultiPoly<C>::from_terms(f.registry(), f.domain(), std::move(q)));
  return out;
}

template <class C>
MultiPoly<C> exact_div(const MultiPoly<C>& f, const MultiPoly<C>& g) {
  auto res = divide(f, {g}, MonomialOrder::lex(f.registry()));
  if (!res.remainder.is_zero()) throw DomainError("exact_div: divisor does not divide");
  return std::move(res.quotients.front());
}

#define TAF_INSTANTIATE_DIVISION(C)                                                            \
  template LeadingTerm<C> leading_term(const MultiPoly<C>&, const MonomialOrder&);             \
  template DivisionResult<C> divide(const MultiPoly<C>&, const std::vector<MultiPoly<C>>&,     \
                                    const MonomialOrder&);                                     \
  template MultiPoly<C> exact_div(const MultiPoly<C>&, const MultiPoly<C>&);

TAF_INSTANTIATE_DIVISION(Rational)
TAF_INSTANTIATE_DIVISION(Fp)

#undef TAF_INSTANTIATE_DIVISION

}  // namespace taf
