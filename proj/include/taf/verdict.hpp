// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAF_VERDICT_HPP
#define TAF_VERDICT_HPP

#include <string>

namespace taf {

/// Outcome of a named identity check.
struct IdentityVerdict {
  std::string id;
  bool pass = false;
  std::string witness;  // residual, "0" on success, or a short diagnostic
};

}  // namespace taf

#endif  // TAF_VERDICT_HPP
