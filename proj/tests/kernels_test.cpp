// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "taf/genus.hpp"
#include "taf/kernels.hpp"
#include "taf/suite.hpp"

namespace taf {
namespace {

class ThreadGuard {
 public:
  ThreadGuard() : saved_(kernels::threads()) {}
  ~ThreadGuard() { kernels::set_threads(saved_); }

 private:
  int saved_;
};

TEST(Kernels, SerialAndParallelAgree) {
  ThreadGuard guard;
  std::mt19937_64 rng(7);
  const auto reg = registries::picard();
  for (int threads = 1; threads <= 4; ++threads) {
    kernels::set_threads(threads);
    EXPECT_EQ(kernels::threads(), threads);
    const QPoly f = random_poly(reg, rng, 500, 30);
    const QPoly g = random_poly(reg, rng, 500, 30);
    const QPoly reference = kernels::mul_serial(f, g);
    EXPECT_EQ(kernels::mul_parallel(f, g), reference) << threads;
    EXPECT_EQ(kernels::mul(f, g), reference);
    EXPECT_EQ(f * g, reference);
    const FpPoly fp = reduce_mod_p(f, 7);
    const FpPoly gp = reduce_mod_p(g, 7);
    EXPECT_EQ(kernels::mul_parallel(fp, gp), kernels::mul_serial(fp, gp));
    EXPECT_EQ(kernels::mul_serial(fp, gp), reduce_mod_p(reference, 7));
  }
}

TEST(Kernels, TruncatedProducts) {
  ThreadGuard guard;
  kernels::set_threads(3);
  std::mt19937_64 rng(11);
  const auto reg = registries::picard();
  const Truncation trunc{{0, 1}, 25};
  const QPoly f = random_poly(reg, rng, 400, 20);
  const QPoly g = random_poly(reg, rng, 400, 20);
  const QPoly full = kernels::mul_serial(f, g);
  const QPoly cut = kernels::mul_serial(f, g, &trunc);
  EXPECT_EQ(kernels::mul_parallel(f, g, &trunc), cut);
  QPoly expected(reg);
  for (const auto& t : full.terms()) {
    if (trunc.keeps(t.mono)) expected += QPoly::monomial(reg, t.mono, t.coeff);
  }
  EXPECT_EQ(cut, expected);
}

TEST(Kernels, EmptyAndConstantOperands) {
  const auto reg = registries::picard();
  const QPoly zero(reg);
  const QPoly f = parse_poly<Rational>("G2^3 - 5*G3*G4 + 1/7", reg);
  EXPECT_TRUE(kernels::mul_parallel(zero, f).is_zero());
  EXPECT_EQ(kernels::mul_parallel(QPoly::integer(reg, 1), f), f);
}

TEST(Kernels, IsolatedCoefficientAgrees) {
  ThreadGuard guard;
  kernels::set_threads(4);
  for (Family fam : {Family::Legendre, Family::Shiga}) {
    const GenusSpec& spec = genus_spec(fam);
    for (unsigned target : {0u, 3u, 30u, 60u}) {
      EXPECT_EQ(isolated_coeff_fractional_power(spec.table, spec.exponent, target, spec.zero()),
                isolated_coeff_fractional_power_serial(spec.table, spec.exponent, target, spec.zero()))
          << family_id(fam) << " " << target;
    }
  }
}

}  // namespace
}  // namespace taf
