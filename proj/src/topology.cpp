#include "frachole/topology.hpp"

#include <cmath>
#include <numbers>

#include "frachole/reduce.hpp"

namespace frachole {

double chi(double t) {
  if (t < 0.0) throw std::invalid_argument("chi: t must be >= 0");
  return t <= 1.0 ? 1.0 : 1.0 / t;
}

namespace {

// Per-component moment sum_i u_i^2 chi(|x_i|) w(x_i) with w = 1 or a
// coordinate. Deterministic mode uses the sign-split sorted reduction so the
// result is exactly permutation-invariant and flips sign exactly under
// reflection.
double chi_moment(const Field& u, int component, bool deterministic) {
  const GridSpec& g = u.spec;
  const int M = g.points_per_dim;
  std::vector<double> terms(u.values.size());
  if (g.dim == 1) {
    for (int i = 0; i < M; ++i) {
      const double x = g.coord(i);
      const double w = component < 0 ? 1.0 : x;
      const double v = u.at(i);
      terms[static_cast<std::size_t>(i)] = v * v * chi(std::abs(x)) * w;
    }
  } else {
    for (int i = 0; i < M; ++i) {
      const double x = g.coord(i);
      for (int j = 0; j < M; ++j) {
        const double y = g.coord(j);
        const double w = component < 0 ? 1.0 : (component == 0 ? x : y);
        const double v = u.at(i, j);
        terms[static_cast<std::size_t>(i) * M + j] =
            v * v * chi(std::hypot(x, y)) * w;
      }
    }
  }
  const double sum = deterministic ? signed_sorted_sum(terms) : reduce_sum(terms, false);
  return g.cell_measure() * sum;
}

double plain_moment(const Field& u, int component, bool deterministic) {
  const GridSpec& g = u.spec;
  const int M = g.points_per_dim;
  std::vector<double> terms(u.values.size());
  if (g.dim == 1) {
    for (int i = 0; i < M; ++i) {
      const double x = g.coord(i);
      const double v = u.at(i);
      terms[static_cast<std::size_t>(i)] = v * v * (component < 0 ? 1.0 : x);
    }
  } else {
    for (int i = 0; i < M; ++i) {
      const double x = g.coord(i);
      for (int j = 0; j < M; ++j) {
        const double y = g.coord(j);
        const double v = u.at(i, j);
        terms[static_cast<std::size_t>(i) * M + j] =
            v * v * (component < 0 ? 1.0 : (component == 0 ? x : y));
      }
    }
  }
  const double sum = deterministic ? signed_sorted_sum(terms) : reduce_sum(terms, false);
  return g.cell_measure() * sum;
}

}  // namespace

std::array<double, 2> barycenter(const Field& u, bool deterministic) {
  std::array<double, 2> b{chi_moment(u, 0, deterministic), 0.0};
  if (u.spec.dim == 2) b[1] = chi_moment(u, 1, deterministic);
  return b;
}

double chi_mass(const Field& u, bool deterministic) { return chi_moment(u, -1, deterministic); }

std::array<double, 2> normalized_barycenter(const Field& u, bool deterministic) {
  const double m = chi_mass(u, deterministic);
  if (m <= 0.0) throw std::invalid_argument("normalized_barycenter: zero field");
  auto b = barycenter(u, deterministic);
  b[0] /= m;
  b[1] /= m;
  return b;
}

std::array<double, 2> center_of_mass(const Field& u, bool deterministic) {
  const double m = plain_moment(u, -1, deterministic);
  if (m <= 0.0) throw std::invalid_argument("center_of_mass: zero field");
  std::array<double, 2> c{plain_moment(u, 0, deterministic) / m, 0.0};
  if (u.spec.dim == 2) c[1] = plain_moment(u, 1, deterministic) / m;
  return c;
}

BarycenterReport pushout_test(std::array<double, 2> y, const Field& phi,
                              const ProblemParams& params, const DomainMask& mask) {
  const TestFunction tf = test_function(y, phi, params, mask);
  const bool det = params.deterministic_reduction;
  BarycenterReport rep;
  rep.y = tf.y;
  rep.beta = barycenter(tf.psi, det);
  rep.beta_norm = normalized_barycenter(tf.psi, det);
  const auto ar = params.hole_center();
  if (params.dim == 1) {
    rep.pairing = rep.beta[0] * rep.y[0];
    rep.pairing_alt = (rep.beta[0] - ar[0]) * (rep.y[0] - ar[0]);
  } else {
    rep.pairing = rep.beta[0] * rep.y[0] + rep.beta[1] * rep.y[1];
    rep.pairing_alt =
        (rep.beta[0] - ar[0]) * (rep.y[0] - ar[0]) + (rep.beta[1] - ar[1]) * (rep.y[1] - ar[1]);
  }
  return rep;
}

int boundary_degree(std::span<const std::array<double, 2>> values, std::array<double, 2> target) {
  if (values.size() < 3)
    throw std::invalid_argument("boundary_degree: need at least 3 ordered samples");
  std::vector<double> ang(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double vx = values[i][0] - target[0];
    const double vy = values[i][1] - target[1];
    if (vx == 0.0 && vy == 0.0)
      throw std::invalid_argument("boundary_degree: a sample hits the target");
    ang[i] = std::atan2(vy, vx);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double d = ang[(i + 1) % values.size()] - ang[i];
    while (d <= -std::numbers::pi) d += 2.0 * std::numbers::pi;
    while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    if (std::abs(d) >= std::numbers::pi - 1e-9)
      throw std::invalid_argument("boundary_degree: angular increment >= pi (sampling inadequate)");
    total += d;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

int boundary_degree_1d(double h_minus, double h_plus, double target) {
  if (h_minus == target || h_plus == target)
    throw std::invalid_argument("boundary_degree_1d: a sample hits the target");
  auto sgn = [](double v) { return v > 0.0 ? 1 : -1; };
  return (sgn(h_plus - target) - sgn(h_minus - target)) / 2;
}

}  // namespace frachole
