#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Radix-2 FFT, self-contained. Grid sizes in this project are powers of two
// by construction, and deterministic mode requires bitwise-reproducible
// transforms that do not depend on thread count, so no planner library is
// used. 2D transforms parallelize over independent lines; each 1D line is
// computed serially, which keeps results identical for any thread count.

namespace frachole {

// In-place complex FFT of length n (power of two). inverse=true applies the
// conjugate transform and scales by 1/n.
void fft_inplace(std::complex<double>* data, std::size_t n, bool inverse);

// In-place 2D FFT of an n-by-n row-major array.
void fft_2d_inplace(std::complex<double>* data, std::size_t n, bool inverse);

// Forward transform of a real array of length count (1D: count = M,
// 2D: count = M*M with row-major layout).
std::vector<std::complex<double>> fft_forward(const double* values, std::size_t count, int dim,
                                              std::size_t m);

// Inverse transform, returning the real part.
std::vector<double> fft_inverse_real(std::vector<std::complex<double>> spectrum, int dim,
                                     std::size_t m);

}  // namespace frachole
