// Timing harness comparing the serial reference kernels against the OpenMP
// paths: reductions, 2D FFT, spectral operator application, the pointwise
// nonlinearity, and the direct-quadrature pair sum. Not a ctest; run by hand.

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "frachole/fractional.hpp"
#include "frachole/reduce.hpp"

using namespace frachole;
using clock_type = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto t0 = clock_type::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s serial %9.3f ms   omp %9.3f ms   speedup %5.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::mt19937_64 rng(1);
  std::normal_distribution<double> dist;

  {
    std::vector<double> x(1 << 24);
    for (auto& v : x) v = dist(rng);
    double sink = 0.0;
    const double serial = time_ms(
        [&] {
          double s = 0.0;
          for (double v : x) s += v;
          sink += s;
        },
        5);
    const double par = time_ms([&] { sink += pairwise_sum(x); }, 5);
    report("reduction (16M doubles)", serial, par);
    if (sink == 42.0) std::printf("%f\n", sink);
  }

  const GridSpec g = make_grid(2, 32.0, 1024);
  Field u(g);
  for (auto& v : u.values) v = dist(rng);

  {
    const int old = omp_get_max_threads();
    omp_set_num_threads(1);
    const double serial = time_ms([&] { (void)frac_laplacian(u, 0.5); }, 3);
    omp_set_num_threads(old);
    const double par = time_ms([&] { (void)frac_laplacian(u, 0.5); }, 3);
    report("spectral (-Delta)^s (1024^2)", serial, par);
  }
  {
    const int old = omp_get_max_threads();
    omp_set_num_threads(1);
    const double serial = time_ms([&] { (void)pointwise_nonlinearity(u, 3.0); }, 5);
    omp_set_num_threads(old);
    const double par = time_ms([&] { (void)pointwise_nonlinearity(u, 3.0); }, 5);
    report("pointwise |u|^{p-2}u (1024^2)", serial, par);
  }
  {
    const GridSpec small = make_grid(2, 10.0, 64);
    Field w(small);
    for (auto& v : w.values) v = dist(rng);
    const int old = omp_get_max_threads();
    omp_set_num_threads(1);
    const double serial = time_ms([&] { (void)gagliardo_seminorm_sq_direct(w, 0.4); }, 2);
    omp_set_num_threads(old);
    const double par = time_ms([&] { (void)gagliardo_seminorm_sq_direct(w, 0.4); }, 2);
    report("pair-sum oracle (64^2 grid)", serial, par);
  }
  {
    const int old = omp_get_max_threads();
    omp_set_num_threads(1);
    const double serial = time_ms([&] { (void)norm_sq(u, 0.5, 3.0, true); }, 3);
    omp_set_num_threads(old);
    const double par = time_ms([&] { (void)norm_sq(u, 0.5, 3.0, true); }, 3);
    report("deterministic norm_sq (1024^2)", serial, par);
  }
  return 0;
}
