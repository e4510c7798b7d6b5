#include "frachole/fractional.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "frachole/fft.hpp"
#include "frachole/geometry.hpp"
#include "frachole/reduce.hpp"

namespace frachole {

namespace {

void check_s(double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("fractional: s must lie in (0,1)");
}

int fold(int m, int M) { return m <= M / 2 ? m : m - M; }

std::vector<std::complex<double>> forward(const Field& u) {
  return fft_forward(u.values.data(), u.values.size(), u.spec.dim,
                     static_cast<std::size_t>(u.spec.points_per_dim));
}

Field spectral_multiply(const Field& u, double s, double shift) {
  auto c = forward(u);
  const GridSpec& g = u.spec;
  const std::size_t n = c.size();
  const int M = g.points_per_dim;
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < static_cast<long>(n); ++idx) {
    const double k2 = mode_k2(g, static_cast<std::size_t>(idx));
    c[static_cast<std::size_t>(idx)] *= std::pow(k2, s) + shift;
  }
  return Field(g, fft_inverse_real(std::move(c), g.dim, static_cast<std::size_t>(M)));
}

}  // namespace

double gagliardo_conversion(int dim, double s) {
  check_s(s);
  const double A = std::pow(std::numbers::pi, dim / 2.0) * std::tgamma(1.0 - s) /
                   (s * std::pow(4.0, s) * std::tgamma(dim / 2.0 + s));
  return 2.0 * A;
}

double mode_k2(const GridSpec& spec, std::size_t mode) {
  const int M = spec.points_per_dim;
  const double base = std::numbers::pi / spec.half_extent;
  if (spec.dim == 1) {
    const double k = base * fold(static_cast<int>(mode), M);
    return k * k;
  }
  const int mi = fold(static_cast<int>(mode) / M, M);
  const int mj = fold(static_cast<int>(mode) % M, M);
  const double kx = base * mi, ky = base * mj;
  return kx * kx + ky * ky;
}

Field frac_laplacian(const Field& u, double s) {
  check_s(s);
  return spectral_multiply(u, s, 0.0);
}

Field apply_operator(const Field& u, double s) {
  check_s(s);
  return spectral_multiply(u, s, 1.0);
}

Field apply_inverse_operator(const Field& u, double s) {
  check_s(s);
  auto c = forward(u);
  const GridSpec& g = u.spec;
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < static_cast<long>(c.size()); ++idx) {
    const double k2 = mode_k2(g, static_cast<std::size_t>(idx));
    c[static_cast<std::size_t>(idx)] /= std::pow(k2, s) + 1.0;
  }
  return Field(g, fft_inverse_real(std::move(c), g.dim,
                                   static_cast<std::size_t>(g.points_per_dim)));
}

Field pointwise_nonlinearity(const Field& u, double p) {
  Field out(u.spec);
  const std::size_t n = u.values.size();
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    const double v = u.values[static_cast<std::size_t>(i)];
    out.values[static_cast<std::size_t>(i)] =
        v == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(v), p - 1.0), v);
  }
  return out;
}

double l2_sq(const Field& u, bool deterministic) {
  const Field* base = &u;
  Field canon;
  if (deterministic) {
    canon = canonical_rotation(u);
    base = &canon;
  }
  const double* v = base->values.data();
  const double sum =
      map_sum(base->values.size(), [v](std::size_t i) { return v[i] * v[i]; }, deterministic);
  return u.spec.cell_measure() * sum;
}

double lp_norm(const Field& u, double p, bool deterministic) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  const Field* base = &u;
  Field canon;
  if (deterministic) {
    canon = canonical_rotation(u);
    base = &canon;
  }
  const double* v = base->values.data();
  const double sum = map_sum(
      base->values.size(), [v, p](std::size_t i) { return std::pow(std::abs(v[i]), p); },
      deterministic);
  return std::pow(u.spec.cell_measure() * sum, 1.0 / p);
}

namespace {

double dirichlet_from_spectrum(const GridSpec& g, const std::vector<std::complex<double>>& c,
                               double s, bool deterministic) {
  const std::size_t n = c.size();
  const double cell = std::pow(2.0 * g.half_extent, g.dim);
  const double scale = cell / (static_cast<double>(n) * static_cast<double>(n));
  const std::complex<double>* cd = c.data();
  const double sum = map_sum(
      n,
      [cd, &g, s](std::size_t i) {
        const double k2 = mode_k2(g, i);
        return std::pow(k2, s) * std::norm(cd[i]);
      },
      deterministic);
  return scale * sum;
}

}  // namespace

double dirichlet_form(const Field& u, double s, bool deterministic) {
  check_s(s);
  const Field* base = &u;
  Field canon;
  if (deterministic) {
    canon = canonical_rotation(u);
    base = &canon;
  }
  return dirichlet_from_spectrum(u.spec, forward(*base), s, deterministic);
}

EnergyBreakdown norm_sq(const Field& u, double s, double p, bool deterministic) {
  check_s(s);
  const Field* base = &u;
  Field canon;
  if (deterministic) {
    canon = canonical_rotation(u);
    base = &canon;
  }
  const double* v = base->values.data();
  const std::size_t n = base->values.size();
  EnergyBreakdown out;
  const double cell = u.spec.cell_measure();
  out.l2_sq = cell * map_sum(n, [v](std::size_t i) { return v[i] * v[i]; }, deterministic);
  out.lp_p = cell * map_sum(
                        n, [v, p](std::size_t i) { return std::pow(std::abs(v[i]), p); },
                        deterministic);
  out.seminorm_sq = dirichlet_from_spectrum(u.spec, forward(*base), s, deterministic);
  out.norm_sq = out.seminorm_sq + out.l2_sq;
  return out;
}

EnergyBreakdown restricted_norm_sq(const Field& u, const DomainMask& mask, double s, double p,
                                   bool deterministic) {
  if (mask.spec != u.spec)
    throw std::invalid_argument("restricted_norm_sq: mask and field on different grids");
  const double frac = mass_outside_fraction(u, mask);
  if (frac > 1e-12)
    throw std::invalid_argument("restricted_norm_sq: field carries mass outside the mask");
  // For u in X_0^s the Q-restricted double integral equals the full-space
  // form, so evaluate the full-space form of the hard-masked field.
  bool any_outside = false;
  for (std::size_t i = 0; i < u.values.size(); ++i)
    if (!mask.inside[i] && u.values[i] != 0.0) {
      any_outside = true;
      break;
    }
  if (!any_outside) return norm_sq(u, s, p, deterministic);
  return norm_sq(apply_mask(u, mask), s, p, deterministic);
}

double gagliardo_seminorm_sq(const Field& u, double s, bool deterministic) {
  return gagliardo_conversion(u.spec.dim, s) * dirichlet_form(u, s, deterministic);
}

namespace {

// Periodized kernel table over lattice displacements, K[d] = sum over images
// v of |x_d + 2Lv|^{-(N+2s)}, plus an integral estimate of the image tail.
std::vector<double> periodized_kernel(const GridSpec& g, double s) {
  const int M = g.points_per_dim;
  const double h = g.spacing();
  const double twoL = 2.0 * g.half_extent;
  const double expo = g.dim + 2.0 * s;
  std::vector<double> K(g.node_count(), 0.0);
  if (g.dim == 1) {
    const int V = 64;
    const double tail = 2.0 * std::pow(twoL, -expo) * std::pow(V + 0.5, -2.0 * s) / (2.0 * s);
    for (int d = 0; d < M; ++d) {
      const double dx = (d <= M / 2 ? d : d - M) * h;
      double sum = 0.0;
      for (int v = -V; v <= V; ++v) {
        const double dd = dx + twoL * v;
        if (dd != 0.0) sum += std::pow(std::abs(dd), -expo);
      }
      K[static_cast<std::size_t>(d)] = sum + tail;
    }
    K[0] = 0.0;
  } else {
    const int V = 24;
    const double tail = 2.0 * std::numbers::pi * std::pow(twoL, -expo) *
                        std::pow(V + 0.5, -2.0 * s) / (2.0 * s);
#pragma omp parallel for schedule(static)
    for (long di = 0; di < M; ++di) {
      const double dx = (di <= M / 2 ? di : di - M) * h;
      for (int dj = 0; dj < M; ++dj) {
        const double dy = (dj <= M / 2 ? dj : dj - M) * h;
        double sum = 0.0;
        for (int vx = -V; vx <= V; ++vx) {
          const double ax = dx + twoL * vx;
          for (int vy = -V; vy <= V; ++vy) {
            const double ay = dy + twoL * vy;
            const double r2 = ax * ax + ay * ay;
            if (r2 != 0.0) sum += std::pow(r2, -expo / 2.0);
          }
        }
        K[static_cast<std::size_t>(di) * M + dj] = sum + tail;
      }
    }
    K[0] = 0.0;
  }
  return K;
}

}  // namespace

double gagliardo_seminorm_sq_direct(const Field& u, double s, PairFilter filter,
                                    const DomainMask* mask) {
  check_s(s);
  const std::size_t n = u.values.size();
  if (n > 4096)
    throw std::invalid_argument("gagliardo oracle: grid larger than 4096 points (cost guard)");
  if (filter != PairFilter::all_pairs && mask == nullptr)
    throw std::invalid_argument("gagliardo oracle: filter requires a mask");
  const GridSpec& g = u.spec;
  const int M = g.points_per_dim;
  const std::vector<double> K = periodized_kernel(g, s);
  const double* v = u.values.data();
  auto inside = [&](std::size_t i) { return mask == nullptr || mask->inside[i] != 0; };

  std::vector<double> partial(n, 0.0);
#pragma omp parallel for schedule(static)
  for (long li = 0; li < static_cast<long>(n); ++li) {
    const std::size_t i = static_cast<std::size_t>(li);
    if (filter == PairFilter::both_inside && !inside(i)) continue;
    double acc = 0.0;
    if (g.dim == 1) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (filter == PairFilter::both_inside && !inside(j)) continue;
        if (filter == PairFilter::at_least_one_inside && !inside(i) && !inside(j)) continue;
        const double d = v[i] - v[j];
        const std::size_t disp = (j + n - i) % n;
        acc += d * d * K[disp];
      }
    } else {
      const int ii = static_cast<int>(i) / M, ij = static_cast<int>(i) % M;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (filter == PairFilter::both_inside && !inside(j)) continue;
        if (filter == PairFilter::at_least_one_inside && !inside(i) && !inside(j)) continue;
        const int ji = static_cast<int>(j) / M, jj = static_cast<int>(j) % M;
        const int di = (ji - ii + M) % M, dj = (jj - ij + M) % M;
        const double d = v[i] - v[j];
        acc += d * d * K[static_cast<std::size_t>(di) * M + dj];
      }
    }
    partial[i] = acc;
  }
  const double cell = g.cell_measure();
  return cell * cell * pairwise_sum(partial);
}

std::pair<Field, double> residual_field(const Field& u, const ProblemParams& params) {
  params.validate();
  Field R = apply_operator(u, params.s);
  const Field nl = pointwise_nonlinearity(u, params.p);
  for (std::size_t i = 0; i < R.values.size(); ++i) R.values[i] -= nl.values[i];
  const bool det = params.deterministic_reduction;
  const double rel =
      std::sqrt(l2_sq(R, det)) / std::max(std::sqrt(l2_sq(u, det)), 1e-30);
  return {std::move(R), rel};
}

namespace internal {

double l2_sq_fixed(const Field& u, bool deterministic) {
  const double* v = u.values.data();
  const double sum =
      map_sum(u.values.size(), [v](std::size_t i) { return v[i] * v[i]; }, deterministic);
  return u.spec.cell_measure() * sum;
}

double lp_norm_fixed(const Field& u, double p, bool deterministic) {
  const double* v = u.values.data();
  const double sum = map_sum(
      u.values.size(), [v, p](std::size_t i) { return std::pow(std::abs(v[i]), p); },
      deterministic);
  return std::pow(u.spec.cell_measure() * sum, 1.0 / p);
}

EnergyBreakdown norm_sq_fixed(const Field& u, double s, double p, bool deterministic) {
  const double* v = u.values.data();
  const std::size_t n = u.values.size();
  EnergyBreakdown out;
  const double cell = u.spec.cell_measure();
  out.l2_sq = cell * map_sum(n, [v](std::size_t i) { return v[i] * v[i]; }, deterministic);
  out.lp_p = cell * map_sum(
                        n, [v, p](std::size_t i) { return std::pow(std::abs(v[i]), p); },
                        deterministic);
  out.seminorm_sq = dirichlet_from_spectrum(u.spec, forward(u), s, deterministic);
  out.norm_sq = out.seminorm_sq + out.l2_sq;
  return out;
}

}  // namespace internal

}  // namespace frachole
