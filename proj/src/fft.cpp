#include "frachole/fft.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace frachole {

namespace {

// Twiddle table w[j] = exp(sign * 2*pi*i * j / n), j < n/2.
std::vector<std::complex<double>> twiddles(std::size_t n, bool inverse) {
  std::vector<std::complex<double>> w(n / 2);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    w[j] = {std::cos(ang), std::sin(ang)};
  }
  return w;
}

void fft_line(std::complex<double>* a, std::size_t n, const std::vector<std::complex<double>>& w,
              bool inverse) {
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> tw = w[j * step];
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * tw;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) a[i] *= inv;
  }
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void fft_inplace(std::complex<double>* data, std::size_t n, bool inverse) {
  if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");
  const auto w = twiddles(n, inverse);
  fft_line(data, n, w, inverse);
}

void fft_2d_inplace(std::complex<double>* data, std::size_t n, bool inverse) {
  if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");
  const auto w = twiddles(n, inverse);
  // rows
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(n); ++i)
    fft_line(data + static_cast<std::size_t>(i) * n, n, w, inverse);
  // columns, gathered into per-iteration line buffers
#pragma omp parallel
  {
    std::vector<std::complex<double>> col(n);
#pragma omp for schedule(static)
    for (long j = 0; j < static_cast<long>(n); ++j) {
      for (std::size_t i = 0; i < n; ++i) col[i] = data[i * n + static_cast<std::size_t>(j)];
      fft_line(col.data(), n, w, inverse);
      for (std::size_t i = 0; i < n; ++i) data[i * n + static_cast<std::size_t>(j)] = col[i];
    }
  }
}

std::vector<std::complex<double>> fft_forward(const double* values, std::size_t count, int dim,
                                              std::size_t m) {
  std::vector<std::complex<double>> buf(count);
  for (std::size_t i = 0; i < count; ++i) buf[i] = values[i];
  if (dim == 1)
    fft_inplace(buf.data(), m, false);
  else
    fft_2d_inplace(buf.data(), m, false);
  return buf;
}

std::vector<double> fft_inverse_real(std::vector<std::complex<double>> spectrum, int dim,
                                     std::size_t m) {
  if (dim == 1)
    fft_inplace(spectrum.data(), m, true);
  else
    fft_2d_inplace(spectrum.data(), m, true);
  std::vector<double> out(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i) out[i] = spectrum[i].real();
  return out;
}

}  // namespace frachole
