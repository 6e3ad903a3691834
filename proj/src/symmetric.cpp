// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/symmetric.hpp"

#include <utility>

namespace taf {

namespace {

QPoly elementary(const RegistryPtr& reg, std::size_t k) {
  const std::size_t n = reg->size();
  std::vector<PolyTerm<Rational>> terms;
  // Subsets of size k by bitmask; n is at most kMaxVars.
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) m[i] = 1;
    }
    terms.push_back({m, Rational(1)});
  }
  return QPoly::from_terms(reg, {}, std::move(terms));
}

QPoly swap_vars(const QPoly& f, std::size_t a, std::size_t b) {
  std::vector<PolyTerm<Rational>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    std::swap(m[a], m[b]);
    terms.push_back({m, t.coeff});
  }
  return QPoly::from_terms(f.registry(), f.domain(), std::move(terms));
}

}  // namespace

std::map<std::string, QPoly> elementary_images(const RegistryPtr& reg, const RegistryPtr& target) {
  if (target->size() != reg->size()) throw DomainError("elementary_images: arity mismatch");
  std::map<std::string, QPoly> out;
  for (std::size_t k = 1; k <= reg->size(); ++k) out.emplace(target->name(k - 1), elementary(reg, k));
  return out;
}

bool is_symmetric(const QPoly& f) {
  // Adjacent transpositions generate the symmetric group.
  for (std::size_t i = 0; i + 1 < f.registry()->size(); ++i) {
    if (!(swap_vars(f, i, i + 1) == f)) return false;
  }
  return true;
}

QPoly express_in_elementary(const QPoly& f, const RegistryPtr& target) {
  const auto& reg = f.registry();
  const std::size_t n = reg->size();
  if (target->size() != n) throw DomainError("express_in_elementary: arity mismatch");
  if (!is_symmetric(f)) throw NotSymmetric("polynomial is not symmetric in its variables");

  std::vector<QPoly> e;
  for (std::size_t k = 1; k <= n; ++k) e.push_back(elementary(reg, k));

  std::vector<PolyTerm<Rational>> result;
  QPoly rest = f;
  while (!rest.is_zero()) {
    // Terms are sorted lex descending, so the first one leads.
    const auto lead = rest.terms().front();
    Monomial target_mono;
    QPoly product = QPoly::constant(reg, lead.coeff);
    for (std::size_t k = 0; k < n; ++k) {
      const unsigned next = k + 1 < n ? lead.mono[k + 1] : 0;
      if (lead.mono[k] < next) throw NotSymmetric("leading exponent not partition-shaped");
      const unsigned power = lead.mono[k] - next;
      target_mono[k] = static_cast<std::uint16_t>(power);
      if (power > 0) product *= pow(e[k], power);
    }
    result.push_back({target_mono, lead.coeff});
    rest -= product;
  }
  return QPoly::from_terms(target, {}, std::move(result));
}

}  // namespace taf
