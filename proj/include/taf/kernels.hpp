// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// Sparse product kernels. Every kernel has a serial reference version and
// an OpenMP version; both return identical canonical polynomials.

#ifndef TAF_KERNELS_HPP
#define TAF_KERNELS_HPP

#include <cstddef>

#include "taf/mpoly.hpp"

namespace taf::kernels {

/// Worker count used by the parallel kernels (default: OpenMP's default).
void set_threads(int n);
int threads();

/// Products with fewer term pairs than this stay serial.
inline constexpr std::size_t kParallelPairThreshold = 1U << 16;

template <class C>
MultiPoly<C> mul_serial(const MultiPoly<C>& f, const MultiPoly<C>& g, const Truncation* trunc = nullptr);

template <class C>
MultiPoly<C> mul_parallel(const MultiPoly<C>& f, const MultiPoly<C>& g, const Truncation* trunc = nullptr);

/// Dispatches on size and thread count.
template <class C>
MultiPoly<C> mul(const MultiPoly<C>& f, const MultiPoly<C>& g, const Truncation* trunc = nullptr);

}  // namespace taf::kernels

#endif  // TAF_KERNELS_HPP
