#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

// Summation kernels. Deterministic mode sums through a fixed-shape pairwise
// tree whose shape depends only on the element count, so results are bitwise
// identical across reruns and thread counts. Non-deterministic mode uses a
// plain OpenMP reduction.

namespace frachole {

namespace detail {

// Serial pairwise reduction over x[0..n); fixed recursion shape.
double pairwise_block(const double* x, std::size_t n);

inline constexpr std::size_t kReduceBlock = 4096;

}  // namespace detail

// Fixed-tree pairwise sum, parallelized over blocks of kReduceBlock.
double pairwise_sum(std::span<const double> x);

// Sum with the policy selected by `deterministic`.
double reduce_sum(std::span<const double> x, bool deterministic);

// Deterministic sum that is exactly invariant under permutation of the terms
// and exactly antisymmetric under global sign flip: positive and negative
// terms are sorted by magnitude and pairwise-summed separately.
double signed_sorted_sum(std::span<const double> x);

// Fixed-tree pairwise sum of f(i) for i in [0, n). Same tree as pairwise_sum
// on a materialized array. F must be pure.
template <class F>
double pairwise_map_block(std::size_t lo, std::size_t n, const F& f) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += f(lo + i);
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_map_block(lo, half, f) + pairwise_map_block(lo + half, n - half, f);
}

template <class F>
double pairwise_map_sum(std::size_t n, const F& f) {
  const std::size_t B = detail::kReduceBlock;
  if (n <= B) return pairwise_map_block(0, n, f);
  const std::size_t nb = (n + B - 1) / B;
  std::vector<double> partial(nb);
#pragma omp parallel for schedule(static)
  for (long b = 0; b < static_cast<long>(nb); ++b) {
    const std::size_t off = static_cast<std::size_t>(b) * B;
    partial[static_cast<std::size_t>(b)] = pairwise_map_block(off, std::min(B, n - off), f);
  }
  return pairwise_sum(partial);
}

template <class F>
double map_sum(std::size_t n, const F& f, bool deterministic) {
  if (deterministic) return pairwise_map_sum(n, f);
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (long i = 0; i < static_cast<long>(n); ++i) s += f(static_cast<std::size_t>(i));
  return s;
}

}  // namespace frachole
