#include "frachole/reduce.hpp"

#include <cmath>

namespace frachole {

namespace detail {

double pairwise_block(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_block(x, half) + pairwise_block(x + half, n - half);
}

}  // namespace detail

double pairwise_sum(std::span<const double> x) {
  const std::size_t n = x.size();
  const std::size_t B = detail::kReduceBlock;
  if (n <= B) return detail::pairwise_block(x.data(), n);
  const std::size_t nb = (n + B - 1) / B;
  std::vector<double> partial(nb);
#pragma omp parallel for schedule(static)
  for (long b = 0; b < static_cast<long>(nb); ++b) {
    const std::size_t off = static_cast<std::size_t>(b) * B;
    partial[static_cast<std::size_t>(b)] =
        detail::pairwise_block(x.data() + off, std::min(B, n - off));
  }
  return pairwise_sum(partial);
}

double reduce_sum(std::span<const double> x, bool deterministic) {
  if (deterministic) return pairwise_sum(x);
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (long i = 0; i < static_cast<long>(x.size()); ++i) s += x[static_cast<std::size_t>(i)];
  return s;
}

double signed_sorted_sum(std::span<const double> x) {
  std::vector<double> pos, neg;
  pos.reserve(x.size());
  for (double v : x) {
    if (v > 0.0)
      pos.push_back(v);
    else if (v < 0.0)
      neg.push_back(-v);
    // zeros add nothing and would skew the tree shape between a multiset
    // and its negation
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  return pairwise_sum(pos) - pairwise_sum(neg);
}

}  // namespace frachole
