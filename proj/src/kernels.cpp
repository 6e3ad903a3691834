// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "taf/kernels.hpp"

#include <algorithm>
#include <unordered_map>

#include <omp.h>

namespace taf::kernels {

namespace {

int g_threads = 0;  // 0: OpenMP default

// Rational products run on integer numerators over a common denominator,
// so the inner loop is a single mpz_addmul.
struct IntegerForm {
  mpz_class den;
  std::vector<mpz_class> nums;
};

IntegerForm integer_form(const QPoly& f) {
  IntegerForm out;
  out.den = 1;
  for (const auto& t : f.terms()) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), t.coeff.value().get_den_mpz_t());
  }
  out.nums.reserve(f.size());
  for (const auto& t : f.terms()) {
    mpz_class scale = out.den / t.coeff.value().get_den();
    out.nums.push_back(t.coeff.value().get_num() * scale);
  }
  return out;
}

template <class Acc>
using AccMap = std::unordered_map<Monomial, Acc, MonomialHash>;

struct RationalPolicy {
  using Acc = mpz_class;
  IntegerForm f, g;
  RationalPolicy(const QPoly& a, const QPoly& b) : f(integer_form(a)), g(integer_form(b)) {}
  void accumulate(Acc& acc, std::size_t i, std::size_t j) const {
    mpz_addmul(acc.get_mpz_t(), f.nums[i].get_mpz_t(), g.nums[j].get_mpz_t());
  }
  static void merge(Acc& into, const Acc& from) { into += from; }
  static bool is_zero(const Acc& a) { return a == 0; }
  Rational finish(const Acc& a) const { return Rational(a, f.den * g.den); }
};

struct FpPolicy {
  using Acc = std::uint64_t;
  std::vector<std::uint32_t> f, g;
  std::uint64_t p;
  FpPolicy(const FpPoly& a, const FpPoly& b) : p(a.domain().p) {
    for (const auto& t : a.terms()) f.push_back(t.coeff.residue());
    for (const auto& t : b.terms()) g.push_back(t.coeff.residue());
  }
  void accumulate(Acc& acc, std::size_t i, std::size_t j) const {
    acc = (acc + std::uint64_t{f[i]} * g[j]) % p;
  }
  void merge(Acc& into, const Acc& from) const { into = (into + from) % p; }
  static bool is_zero(const Acc& a) { return a == 0; }
  Fp finish(const Acc& a) const { return Fp(static_cast<std::int64_t>(a), static_cast<std::uint32_t>(p)); }
};

template <class C>
struct PolicyFor;
template <>
struct PolicyFor<Rational> {
  using type = RationalPolicy;
};
template <>
struct PolicyFor<Fp> {
  using type = FpPolicy;
};

template <class C, class Policy>
MultiPoly<C> collect(const MultiPoly<C>& f, const Policy& policy, const AccMap<typename Policy::Acc>& acc) {
  std::vector<PolyTerm<C>> terms;
  terms.reserve(acc.size());
  for (const auto& [m, a] : acc) {
    if (!Policy::is_zero(a)) terms.push_back({m, policy.finish(a)});
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.mono > y.mono; });
  std::erase_if(terms, [](const auto& t) { return t.coeff.is_zero(); });
  return MultiPoly<C>::from_sorted_terms(f.registry(), f.domain(), std::move(terms));
}

template <class C>
MultiPoly<C> trivial_product(const MultiPoly<C>& f, const MultiPoly<C>& g) {
  f.check_compatible(g);
  return f.zero_like();
}

}  // namespace

void set_threads(int n) { g_threads = n; }

int threads() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

template <class C>
MultiPoly<C> mul_serial(const MultiPoly<C>& f, const MultiPoly<C>& g, const Truncation* trunc) {
  if (f.is_zero() || g.is_zero()) return trivial_product(f, g);
  f.check_compatible(g);
  using Policy = typename PolicyFor<C>::type;
  const Policy policy(f, g);
  AccMap<typename Policy::Acc> acc;
  acc.reserve(std::max(f.size(), g.size()) * 4);
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  for (std::size_t i = 0; i < ft.size(); ++i) {
    for (std::size_t j = 0; j < gt.size(); ++j) {
      const Monomial m = ft[i].mono * gt[j].mono;
      if (trunc && !trunc->keeps(m)) continue;
      policy.accumulate(acc[m], i, j);
    }
  }
  return collect(f, policy, acc);
}

template <class C>
MultiPoly<C> mul_parallel(const MultiPoly<C>& f, const MultiPoly<C>& g, const Truncation* trunc) {
  if (f.is_zero() || g.is_zero()) return trivial_product(f, g);
  f.check_compatible(g);
  using Policy = typename PolicyFor<C>::type;
  using Acc = typename Policy::Acc;
  const Policy policy(f, g);
  const int nt = threads();
  std::vector<AccMap<Acc>> local(static_cast<std::size_t>(nt));
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  const auto n = static_cast<long>(ft.size());

#pragma omp parallel num_threads(nt)
  {
    auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
      const auto& fi = ft[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < gt.size(); ++j) {
        const Monomial m = fi.mono * gt[j].mono;
        if (trunc && !trunc->keeps(m)) continue;
        policy.accumulate(mine[m], static_cast<std::size_t>(i), j);
      }
    }
  }

  // Merge by hash partition: bucket b owns monomials with hash % nt == b.
  std::vector<AccMap<Acc>> merged(static_cast<std::size_t>(nt));
  const MonomialHash hasher;
#pragma omp parallel for num_threads(nt) schedule(static, 1)
  for (int b = 0; b < nt; ++b) {
    auto& out = merged[static_cast<std::size_t>(b)];
    for (const auto& part : local) {
      for (const auto& [m, a] : part) {
        if (static_cast<int>(hasher(m) % static_cast<std::size_t>(nt)) != b) continue;
        auto [it, inserted] = out.try_emplace(m, a);
        if (!inserted) policy.merge(it->second, a);
      }
    }
  }

  std::vector<PolyTerm<C>> terms;
  for (const auto& part : merged) {
    for (const auto& [m, a] : part) {
      if (!Policy::is_zero(a)) terms.push_back({m, policy.finish(a)});
    }
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.mono > y.mono; });
  std::erase_if(terms, [](const auto& t) { return t.coeff.is_zero(); });
  return MultiPoly<C>::from_sorted_terms(f.registry(), f.domain(), std::move(terms));
}

template <class C>
MultiPoly<C> mul(const MultiPoly<C>& f, const MultiPoly<C>& g, const Truncation* trunc) {
  if (threads() > 1 && f.size() * g.size() >= kParallelPairThreshold) return mul_parallel(f, g, trunc);
  return mul_serial(f, g, trunc);
}

template QPoly mul_serial(const QPoly&, const QPoly&, const Truncation*);
template FpPoly mul_serial(const FpPoly&, const FpPoly&, const Truncation*);
template QPoly mul_parallel(const QPoly&, const QPoly&, const Truncation*);
template FpPoly mul_parallel(const FpPoly&, const FpPoly&, const Truncation*);
template QPoly mul(const QPoly&, const QPoly&, const Truncation*);
template FpPoly mul(const FpPoly&, const FpPoly&, const Truncation*);

}  // namespace taf::kernels
