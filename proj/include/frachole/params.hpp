#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace frachole {

/// Problem data for (-Delta)^s u + u = |u|^{p-2} u on the half space with a
/// ball of radius rho removed at height r (first coordinate(s) a).
struct ProblemParams {
  int dim = 2;
  double s = 0.5;
  double p = 3.0;
  double rho = 0.125;
  double r = 16.0;
  double a = 0.0;
  double tol_residual = 1e-5;
  double tol_constraint = 1e-6;
  int max_iters = 5000;
  bool deterministic_reduction = true;

  /// Hole center a_r: (a, r) in 2D, (r) in 1D.
  std::array<double, 2> hole_center() const {
    return dim == 1 ? std::array<double, 2>{r, 0.0} : std::array<double, 2>{a, r};
  }

  /// 2N/(N-2s); +inf at the critical line N = 2s.
  double critical_exponent() const {
    const double denom = dim - 2.0 * s;
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * dim / denom;
  }

  void validate() const {
    if (dim != 1 && dim != 2) throw std::invalid_argument("params: dim must be 1 or 2");
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("params: s must lie in (0,1)");
    if (dim < 2.0 * s)
      throw std::invalid_argument("params: need N >= 2s");
    if (!(p > 2.0)) throw std::invalid_argument("params: p must exceed 2");
    const double pc = critical_exponent();
    if (std::isfinite(pc) && !(p < pc))
      throw std::invalid_argument("params: p must stay below 2N/(N-2s)");
    if (!(rho > 0.0)) throw std::invalid_argument("params: rho must be > 0");
    if (!(r > rho)) throw std::invalid_argument("params: need r > rho (hole inside the half space)");
    if (!(tol_residual > 0.0) || !(tol_constraint > 0.0))
      throw std::invalid_argument("params: tolerances must be positive");
    if (max_iters <= 0) throw std::invalid_argument("params: max_iters must be positive");
  }
};

}  // namespace frachole
