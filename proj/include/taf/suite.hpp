// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// The named reproduction suite shared by `taf reproduce` and the acceptance
// test. Checks are organized in groups; each group runs as a unit and yields
// one row per statement it verifies.

#ifndef TAF_SUITE_HPP
#define TAF_SUITE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "taf/mpoly.hpp"

namespace taf {

struct CheckRow {
  int criterion = 0;  // acceptance criterion the row belongs to
  std::string name;
  std::string statement;
  bool pass = false;
  std::string detail;
};

struct GroupResult {
  std::string group;
  double ms = 0;  // wall time of the whole group
  std::vector<CheckRow> rows;
  bool passed() const;
};

/// legendre-p7, legendre-p13, picard-p7, picard-p13, shiga-p7, modform,
/// curves, restriction, supersingular, properties.
const std::vector<std::string>& suite_groups();

/// Runs one group; throws DomainError for an unknown name.
GroupResult run_group(const std::string& group);

/// Each selector is a group name or a row name. An empty list selects
/// everything. Groups are run whole and their rows filtered afterwards.
std::vector<GroupResult> run_suite(const std::vector<std::string>& selectors);

/// Fixed seed of every randomized check in the suite.
inline constexpr std::uint64_t kSuiteSeed = 0x7a6f2026ULL;

/// Random polynomial with up to `terms` terms, exponents below `max_exp` and
/// small rational coefficients.
QPoly random_poly(const RegistryPtr& reg, std::mt19937_64& rng, unsigned terms, unsigned max_exp);

/// Random polynomial of the given weighted degree (zero if none exists).
QPoly random_homogeneous(const RegistryPtr& reg, std::mt19937_64& rng, long degree, unsigned terms);

}  // namespace taf

#endif  // TAF_SUITE_HPP
