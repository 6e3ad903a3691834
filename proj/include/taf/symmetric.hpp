// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAF_SYMMETRIC_HPP
#define TAF_SYMMETRIC_HPP

#include <map>
#include <string>

#include "taf/mpoly.hpp"

namespace taf {

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// Elementary symmetric polynomials e_1..e_n in all variables of `reg`,
/// keyed by the names of `target` in order (target must have n variables).
std::map<std::string, QPoly> elementary_images(const RegistryPtr& reg, const RegistryPtr& target);

/// Invariance under every permutation of the registry's variables.
bool is_symmetric(const QPoly& f);

/// The unique g over `target` with g(e_1, ..., e_n) = f. Throws NotSymmetric.
QPoly express_in_elementary(const QPoly& f, const RegistryPtr& target);

}  // namespace taf

#endif  // TAF_SYMMETRIC_HPP
