// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "taf/kernels.hpp"

namespace taf {

namespace {

template <class C>
std::vector<PolyTerm<C>> merge_terms(const std::vector<PolyTerm<C>>& a, const std::vector<PolyTerm<C>>& b,
                                     bool subtract) {
  std::vector<PolyTerm<C>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      C c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

template <class C>
MultiPoly<C> MultiPoly<C>::constant(RegistryPtr reg, const C& c, Domain dom) {
  return monomial(std::move(reg), Monomial{}, c, dom);
}

template <class C>
MultiPoly<C> MultiPoly<C>::integer(RegistryPtr reg, long n, Domain dom) {
  return constant(std::move(reg), dom.from_int(n), dom);
}

template <class C>
MultiPoly<C> MultiPoly<C>::variable(RegistryPtr reg, const std::string& name, Domain dom) {
  const std::size_t i = reg->require(name);
  return monomial(std::move(reg), Monomial::variable(i), dom.one(), dom);
}

template <class C>
MultiPoly<C> MultiPoly<C>::monomial(RegistryPtr reg, const Monomial& m, const C& c, Domain dom) {
  MultiPoly f(std::move(reg), dom);
  for (std::size_t i = f.reg_->size(); i < kMaxVars; ++i) {
    if (m[i] != 0) throw DomainError("monomial uses a variable outside the registry");
  }
  if (!c.is_zero()) f.terms_.push_back({m, c});
  return f;
}

template <class C>
MultiPoly<C> MultiPoly<C>::from_terms(RegistryPtr reg, Domain dom, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return from_sorted_terms(std::move(reg), dom, std::move(out));
}

template <class C>
MultiPoly<C> MultiPoly<C>::from_sorted_terms(RegistryPtr reg, Domain dom, std::vector<Term> terms) {
  MultiPoly f(std::move(reg), dom);
  f.terms_ = std::move(terms);
  return f;
}

template <class C>
C MultiPoly<C>::coefficient(const Monomial& m) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return dom_.zero();
}

template <class C>
void MultiPoly<C>::check_compatible(const MultiPoly& o) const {
  if (!same_registry(reg_, o.reg_)) throw RegistryMismatch("polynomials over different registries");
  if (!(dom_ == o.dom_)) throw RegistryMismatch("polynomials over different coefficient domains");
}

template <class C>
MultiPoly<C> MultiPoly<C>::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

template <class C>
MultiPoly<C>& MultiPoly<C>::operator+=(const MultiPoly& o) {
  check_compatible(o);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

template <class C>
MultiPoly<C>& MultiPoly<C>::operator-=(const MultiPoly& o) {
  check_compatible(o);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

template <class C>
MultiPoly<C>& MultiPoly<C>::operator*=(const MultiPoly& o) {
  *this = multiply(*this, o, nullptr);
  return *this;
}

template <class C>
MultiPoly<C> MultiPoly<C>::multiply(const MultiPoly& a, const MultiPoly& b, const Truncation* trunc) {
  a.check_compatible(b);
  if (a.is_constant() && !a.is_zero() && !trunc) return b.scaled(a.terms_[0].coeff);
  if (b.is_constant() && !b.is_zero() && !trunc) return a.scaled(b.terms_[0].coeff);
  return kernels::mul(a, b, trunc);
}

template <class C>
MultiPoly<C> MultiPoly<C>::scaled(const C& c) const {
  if (c.is_zero()) return zero_like();
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

template <class C>
MultiPoly<C> MultiPoly<C>::times_monomial(const Monomial& m, const C& c) const {
  if (c.is_zero()) return zero_like();
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return r;
}

template <class C>
MultiPoly<C> pow(const MultiPoly<C>& f, unsigned long n, const Truncation* trunc) {
  MultiPoly<C> result = f.one_like();
  if (trunc) result = truncate(result, *trunc);
  MultiPoly<C> base = f;
  while (n > 0) {
    if (n & 1UL) result = MultiPoly<C>::multiply(result, base, trunc);
    n >>= 1U;
    if (n > 0) base = MultiPoly<C>::multiply(base, base, trunc);
  }
  return result;
}

template <class C>
WeightedDegree weighted_degree(const MultiPoly<C>& f) {
  if (f.is_zero()) throw DomainError("weighted degree of the zero polynomial");
  const auto& reg = *f.registry();
  long lo = weighted_degree(f.terms().front().mono, reg);
  long hi = lo;
  for (const auto& t : f.terms()) {
    const long d = weighted_degree(t.mono, reg);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {hi, lo == hi};
}

template <class C>
MultiPoly<C> substitute(const MultiPoly<C>& f, const std::map<std::string, MultiPoly<C>>& images,
                        const RegistryPtr& target, const Truncation* trunc) {
  const auto& src = *f.registry();
  const auto dom = f.domain();
  std::vector<MultiPoly<C>> img;
  img.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto it = images.find(src.name(i));
    if (it != images.end()) {
      if (!same_registry(it->second.registry(), target)) throw RegistryMismatch("substitution image over wrong registry");
      img.push_back(it->second);
    } else if (target->index_of(src.name(i))) {
      img.push_back(MultiPoly<C>::variable(target, src.name(i), dom));
    } else {
      bool used = false;
      for (const auto& t : f.terms()) used = used || t.mono[i] != 0;
      if (used) throw DomainError("substitute: no image for variable " + src.name(i));
      img.push_back(MultiPoly<C>(target, dom));
    }
  }
  // Cache powers per variable; each term is a product of cached powers.
  std::vector<std::vector<MultiPoly<C>>> powers(src.size());
  auto power = [&](std::size_t v, unsigned e) -> const MultiPoly<C>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MultiPoly<C>::constant(target, dom.one(), dom));
    while (cache.size() <= e) cache.push_back(MultiPoly<C>::multiply(cache.back(), img[v], trunc));
    return cache[e];
  };
  std::vector<PolyTerm<C>> acc_terms;
  MultiPoly<C> acc(target, dom);
  for (const auto& t : f.terms()) {
    MultiPoly<C> term = MultiPoly<C>::constant(target, t.coeff, dom);
    for (std::size_t v = 0; v < src.size(); ++v) {
      if (t.mono[v] != 0) term = MultiPoly<C>::multiply(term, power(v, t.mono[v]), trunc);
    }
    acc += term;
  }
  return acc;
}

template <class C>
MultiPoly<C> embed(const MultiPoly<C>& f, const RegistryPtr& target) {
  const auto& src = *f.registry();
  std::vector<std::size_t> where(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) where[i] = target->require(src.name(i));
  std::vector<PolyTerm<C>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i) m[where[i]] = t.mono[i];
    terms.push_back({m, t.coeff});
  }
  return MultiPoly<C>::from_terms(target, f.domain(), std::move(terms));
}

template <class C>
MultiPoly<C> derivative(const MultiPoly<C>& f, const std::string& var) {
  const std::size_t v = f.registry()->require(var);
  std::vector<PolyTerm<C>> terms;
  for (const auto& t : f.terms()) {
    if (t.mono[v] == 0) continue;
    Monomial m = t.mono;
    const long e = m[v];
    m[v] = static_cast<std::uint16_t>(e - 1);
    C c = t.coeff * f.domain().from_int(e);
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  return MultiPoly<C>::from_terms(f.registry(), f.domain(), std::move(terms));
}

template <class C>
C evaluate(const MultiPoly<C>& f, const std::vector<C>& point) {
  const auto& reg = *f.registry();
  if (point.size() != reg.size()) throw DomainError("evaluate: point has wrong arity");
  C acc = f.domain().zero();
  for (const auto& t : f.terms()) {
    C term = t.coeff;
    for (std::size_t i = 0; i < reg.size(); ++i) {
      for (unsigned k = 0; k < t.mono[i]; ++k) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

template <class C>
MultiPoly<C> truncate(const MultiPoly<C>& f, const Truncation& trunc) {
  std::vector<PolyTerm<C>> terms;
  for (const auto& t : f.terms()) {
    if (trunc.keeps(t.mono)) terms.push_back(t);
  }
  return MultiPoly<C>::from_sorted_terms(f.registry(), f.domain(), std::move(terms));
}

template <class C>
int degree_in(const MultiPoly<C>& f, std::size_t var) {
  int d = -1;
  for (const auto& t : f.terms()) d = std::max(d, static_cast<int>(t.mono[var]));
  return d;
}

template <class C>
MultiPoly<C> coefficient_of(const MultiPoly<C>& f, std::size_t var, unsigned k) {
  std::vector<PolyTerm<C>> terms;
  for (const auto& t : f.terms()) {
    if (t.mono[var] != k) continue;
    Monomial m = t.mono;
    m[var] = 0;
    terms.push_back({m, t.coeff});
  }
  return MultiPoly<C>::from_terms(f.registry(), f.domain(), std::move(terms));
}

FpPoly reduce_mod_p(const QPoly& f, std::uint32_t p) {
  const PrimeField dom(p);
  return map_coefficients<Fp>(f, dom, [p](const Rational& c) { return reduce_mod_p(c, p); });
}

Valuation min_p_valuation(const QPoly& f, std::uint64_t p) {
  Valuation best = Valuation::infinity();
  for (const auto& t : f.terms()) {
    const Valuation v = p_valuation(t.coeff, p);
    if (best.is_infinite() || v.value() < best.value()) best = v;
  }
  return best;
}

template <class C>
std::string to_string(const MultiPoly<C>& f) {
  if (f.is_zero()) return "0";
  const auto& reg = *f.registry();
  std::vector<const PolyTerm<C>*> order;
  order.reserve(f.size());
  for (const auto& t : f.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [&reg](const auto* a, const auto* b) {
    return weighted_degree(a->mono, reg) > weighted_degree(b->mono, reg);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    std::string c = t->coeff.to_string();
    bool negative = false;
    if constexpr (std::is_same_v<C, Rational>) {
      negative = t->coeff.sign() < 0;
      if (negative) c = (-t->coeff).to_string();
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < reg.size(); ++i) {
      if (t->mono[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += reg.name(i);
      if (t->mono[i] > 1) mono += '^' + std::to_string(t->mono[i]);
    }
    if (mono.empty()) {
      os << c;
    } else if (c == "1") {
      os << mono;
    } else {
      os << c << '*' << mono;
    }
  }
  return os.str();
}

#define TAF_INSTANTIATE_MPOLY(C)                                                                        \
  template class MultiPoly<C>;                                                                          \
  template MultiPoly<C> pow(const MultiPoly<C>&, unsigned long, const Truncation*);                     \
  template WeightedDegree weighted_degree(const MultiPoly<C>&);                                         \
  template MultiPoly<C> substitute(const MultiPoly<C>&, const std::map<std::string, MultiPoly<C>>&,     \
                                   const RegistryPtr&, const Truncation*);                              \
  template MultiPoly<C> embed(const MultiPoly<C>&, const RegistryPtr&);                                 \
  template MultiPoly<C> derivative(const MultiPoly<C>&, const std::string&);                            \
  template C evaluate(const MultiPoly<C>&, const std::vector<C>&);                                      \
  template MultiPoly<C> truncate(const MultiPoly<C>&, const Truncation&);                               \
  template int degree_in(const MultiPoly<C>&, std::size_t);                                             \
  template MultiPoly<C> coefficient_of(const MultiPoly<C>&, std::size_t, unsigned);                     \
  template std::string to_string(const MultiPoly<C>&);

TAF_INSTANTIATE_MPOLY(Rational)
TAF_INSTANTIATE_MPOLY(Fp)

#undef TAF_INSTANTIATE_MPOLY

}  // namespace taf
