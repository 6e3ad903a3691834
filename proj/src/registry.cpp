// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/registry.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace taf {

VariableRegistry::VariableRegistry(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw DomainError("registry: names/weights size mismatch");
  if (names_.size() > kMaxVars) throw DomainError("registry: too many variables");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw DomainError("registry: empty variable name");
    if (!seen.insert(names_[i]).second) throw DomainError("registry: duplicate variable " + names_[i]);
    if (weights_[i] % 2 != 0) throw DomainError("registry: odd weight for " + names_[i]);
  }
}

std::optional<std::size_t> VariableRegistry::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VariableRegistry::require(const std::string& name) const {
  const auto i = index_of(name);
  if (!i) throw DomainError("unknown variable '" + name + "'");
  return *i;
}

RegistryPtr VariableRegistry::extended(const std::vector<std::pair<std::string, int>>& extra) const {
  auto names = names_;
  auto weights = weights_;
  for (const auto& [n, w] : extra) {
    names.push_back(n);
    weights.push_back(w);
  }
  return std::make_shared<const VariableRegistry>(std::move(names), std::move(weights));
}

RegistryPtr make_registry(const std::vector<std::pair<std::string, int>>& vars) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& [n, w] : vars) {
    names.push_back(n);
    weights.push_back(w);
  }
  return std::make_shared<const VariableRegistry>(std::move(names), std::move(weights));
}

bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace registries {

RegistryPtr constants() {
  static const RegistryPtr r = make_registry({});
  return r;
}
RegistryPtr kappa_lambda() {
  static const RegistryPtr r = make_registry({{"kappa", 6}, {"lambda", 12}});
  return r;
}
RegistryPtr lambda_delta6() {
  static const RegistryPtr r = make_registry({{"lambda", 12}, {"Delta6", 12}});
  return r;
}
RegistryPtr picard() {
  static const RegistryPtr r = make_registry({{"G2", 12}, {"G3", 18}, {"G4", 24}});
  return r;
}
RegistryPtr xi() {
  static const RegistryPtr r = make_registry({{"xi0", 6}, {"xi1", 6}, {"xi2", 6}});
  return r;
}
RegistryPtr sigma() {
  static const RegistryPtr r = make_registry({{"sigma1", 6}, {"sigma2", 12}, {"sigma3", 18}});
  return r;
}
RegistryPtr eisenstein_cubes() {
  static const RegistryPtr r = make_registry({{"E1c", 6}, {"E3", 6}});
  return r;
}

}  // namespace registries

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVars) throw DomainError("monomial: variable index out of range");
  if (power > std::numeric_limits<std::uint16_t>::max()) throw DomainError("monomial: exponent overflow");
  Monomial m;
  m.exp[index] = static_cast<std::uint16_t>(power);
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] != 0 && other.exp[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned s = unsigned{a.exp[i]} + b.exp[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw DomainError("monomial: exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (b.exp[i] > a.exp[i]) throw DomainError("monomial: inexact division");
    r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  }
  return r;
}

Monomial pow(const Monomial& m, unsigned e) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned long s = static_cast<unsigned long>(m.exp[i]) * e;
    if (s > std::numeric_limits<std::uint16_t>::max()) throw DomainError("monomial: exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

long weighted_degree(const Monomial& m, const VariableRegistry& reg) {
  long d = 0;
  for (std::size_t i = 0; i < reg.size(); ++i) d += static_cast<long>(m.exp[i]) * reg.weight(i);
  return d;
}

}  // namespace taf
