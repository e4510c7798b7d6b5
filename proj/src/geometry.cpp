#include "frachole/geometry.hpp"

#include <cmath>

#include "frachole/fractional.hpp"

namespace frachole {

namespace {

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * (3.0 - 2.0 * t);
}

}  // namespace

double xi(double t, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("xi: rho must be > 0");
  return smoothstep((t - rho) / rho);
}

double eta(double t) { return smoothstep(t); }

std::size_t DomainMask::inside_count() const {
  std::size_t c = 0;
  for (auto b : inside) c += b;
  return c;
}

DomainMask build_domain(const GridSpec& spec, const ProblemParams& params) {
  params.validate();
  if (spec.dim != params.dim)
    throw std::invalid_argument("build_domain: grid and params dimension differ");
  DomainMask mask;
  mask.spec = spec;
  mask.rho = params.rho;
  mask.r = params.r;
  mask.a = params.a;
  mask.inside.assign(spec.node_count(), 0);
  const auto ar = params.hole_center();
  const int M = spec.points_per_dim;
  std::size_t hole_cells = 0;
  if (spec.dim == 1) {
    for (int i = 0; i < M; ++i) {
      const double x = spec.coord(i);
      const bool in_hole = std::abs(x - ar[0]) <= params.rho;
      if (x > 0.0 && !in_hole) mask.inside[static_cast<std::size_t>(i)] = 1;
      if (x > 0.0 && in_hole) ++hole_cells;
    }
  } else {
    for (int i = 0; i < M; ++i) {
      const double x = spec.coord(i);
      for (int j = 0; j < M; ++j) {
        const double y = spec.coord(j);
        const double dx = x - ar[0], dy = y - ar[1];
        const bool in_hole = std::sqrt(dx * dx + dy * dy) <= params.rho;
        if (y > 0.0 && !in_hole) mask.inside[static_cast<std::size_t>(i) * M + j] = 1;
        if (y > 0.0 && in_hole) ++hole_cells;
      }
    }
  }
  mask.hole_measure = static_cast<double>(hole_cells) * spec.cell_measure();
  if (mask.inside_count() == 0) throw std::invalid_argument("build_domain: empty domain");
  return mask;
}

double mass_outside_fraction(const Field& u, const DomainMask& mask) {
  double out = 0.0, all = 0.0;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    const double av = std::abs(u.values[i]);
    all = std::max(all, av);
    if (!mask.inside[i]) out = std::max(out, av);
  }
  return all == 0.0 ? 0.0 : out / all;
}

Field apply_mask(const Field& u, const DomainMask& mask) {
  Field out = u;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    if (!mask.inside[i]) out.values[i] = 0.0;
  return out;
}

std::array<int, 2> snap_to_grid(const GridSpec& spec, std::array<double, 2> y) {
  const int M = spec.points_per_dim;
  const double h = spec.spacing();
  auto snap = [&](double c) {
    long k = std::lround(c / h) + M / 2;
    k %= M;
    if (k < 0) k += M;
    return static_cast<int>(k);
  };
  return {snap(y[0]), spec.dim == 2 ? snap(y[1]) : 0};
}

std::array<double, 2> snapped_point(const GridSpec& spec, std::array<double, 2> y) {
  const auto idx = snap_to_grid(spec, y);
  return {spec.coord(idx[0]), spec.dim == 2 ? spec.coord(idx[1]) : 0.0};
}

Field build_fy(std::array<double, 2> y, const Field& phi, const ProblemParams& params) {
  params.validate();
  const GridSpec& g = phi.spec;
  if (g.dim != params.dim) throw std::invalid_argument("build_fy: dimension mismatch");
  const int M = g.points_per_dim;
  const auto idx = snap_to_grid(g, y);
  Field f = translate(phi, {idx[0] - M / 2, g.dim == 2 ? idx[1] - M / 2 : 0});
  const auto ar = params.hole_center();
  if (g.dim == 1) {
    for (int i = 0; i < M; ++i) {
      const double x = g.coord(i);
      f.at(i) *= xi(std::abs(x - ar[0]), params.rho) * eta(x);
    }
  } else {
    for (int i = 0; i < M; ++i) {
      const double x = g.coord(i);
      for (int j = 0; j < M; ++j) {
        const double yy = g.coord(j);
        const double dx = x - ar[0], dy = yy - ar[1];
        f.at(i, j) *= xi(std::sqrt(dx * dx + dy * dy), params.rho) * eta(yy);
      }
    }
  }
  return f;
}

TestFunction test_function(std::array<double, 2> y, const Field& phi, const ProblemParams& params,
                           const DomainMask& mask) {
  Field f = apply_mask(build_fy(y, phi, params), mask);
  const double raw = lp_norm(f, params.p, params.deterministic_reduction);
  if (raw < 1e-8)
    throw std::invalid_argument("test_function: cutoffs annihilated the profile at this center");
  TestFunction tf;
  tf.y = snapped_point(phi.spec, y);
  tf.raw_lp = raw;
  tf.c_y = 1.0 / raw;
  for (double& v : f.values) v /= raw;
  tf.psi = std::move(f);
  return tf;
}

std::pair<double, double> cutoff_error(std::array<double, 2> y, const Field& phi,
                                       const ProblemParams& params) {
  const GridSpec& g = phi.spec;
  const int M = g.points_per_dim;
  const auto idx = snap_to_grid(g, y);
  const Field shifted = translate(phi, {idx[0] - M / 2, g.dim == 2 ? idx[1] - M / 2 : 0});
  Field diff = build_fy(y, phi, params);
  for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] -= shifted.values[i];
  const bool det = params.deterministic_reduction;
  const double lp_err = lp_norm(diff, params.p, det);
  const double norm_err = std::sqrt(norm_sq(diff, params.s, params.p, det).norm_sq);
  return {lp_err, norm_err};
}

}  // namespace frachole
