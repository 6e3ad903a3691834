// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAF_REGISTRY_HPP
#define TAF_REGISTRY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taf/coeff.hpp"

namespace taf {

inline constexpr std::size_t kMaxVars = 8;

/// Ordered variable names with their topological degrees. Weights are even;
/// forms carry positive weight, local parameters (u, x, y of a series) -2.
class VariableRegistry {
 public:
  VariableRegistry(std::vector<std::string> names, std::vector<int> weights);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }

  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Like index_of, throws DomainError when absent.
  std::size_t require(const std::string& name) const;

  /// A new registry with extra variables appended.
  std::shared_ptr<const VariableRegistry> extended(
      const std::vector<std::pair<std::string, int>>& extra) const;

  friend bool operator==(const VariableRegistry&, const VariableRegistry&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

RegistryPtr make_registry(const std::vector<std::pair<std::string, int>>& vars);

/// Registry equality by content; pointer-equal fast path.
bool same_registry(const RegistryPtr& a, const RegistryPtr& b);

class RegistryMismatch : public Error {
 public:
  using Error::Error;
};

namespace registries {
RegistryPtr constants();         // no variables
RegistryPtr kappa_lambda();      // kappa:6, lambda:12
RegistryPtr lambda_delta6();     // lambda:12, Delta6:12
RegistryPtr picard();            // G2:12, G3:18, G4:24
RegistryPtr xi();                // xi0, xi1, xi2 : 6
RegistryPtr sigma();             // sigma1:6, sigma2:12, sigma3:18
RegistryPtr eisenstein_cubes();  // E1c (= E1^3):6, E3:6
}  // namespace registries

/// Exponent vector with fixed capacity, lexicographic by variable index.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  static Monomial variable(std::size_t index, unsigned power = 1);

  std::uint16_t operator[](std::size_t i) const { return exp[i]; }
  std::uint16_t& operator[](std::size_t i) { return exp[i]; }

  bool is_one() const;
  unsigned total_degree() const;
  bool divides(const Monomial& other) const;
  /// True when no variable occurs in both.
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial pow(const Monomial& m, unsigned e);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < 4; ++i) lo |= std::uint64_t{m.exp[i]} << (16 * i);
    for (std::size_t i = 0; i < 4; ++i) hi |= std::uint64_t{m.exp[4 + i]} << (16 * i);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2));
    h ^= h >> 29;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }
};

long weighted_degree(const Monomial& m, const VariableRegistry& reg);

}  // namespace taf

#endif  // TAF_REGISTRY_HPP
