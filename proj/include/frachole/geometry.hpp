#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "frachole/grid.hpp"
#include "frachole/params.hpp"

namespace frachole {

/// Indicator of Omega_r = upper half space minus the closed ball B_rho(a_r):
/// node x is inside iff x_N > 0 and |x - a_r| > rho.
struct DomainMask {
  GridSpec spec;
  std::vector<std::uint8_t> inside;
  double rho = 0.0;
  double r = 0.0;
  double a = 0.0;
  double hole_measure = 0.0;  // excluded-ball cells times h^N

  bool contains(std::size_t node) const { return inside[node] != 0; }
  std::size_t inside_count() const;
};

DomainMask build_domain(const GridSpec& spec, const ProblemParams& params);

/// Smooth monotone cutoffs (polynomial smoothstep on the transition):
/// xi = 0 on [0, rho], 1 on [2 rho, inf); eta = 0 on (-inf, 0], 1 on [1, inf).
double xi(double t, double rho);
double eta(double t);

/// max |u| over nodes outside the mask, divided by max |u| overall.
double mass_outside_fraction(const Field& u, const DomainMask& mask);

/// Hard mask: exact zeros outside.
Field apply_mask(const Field& u, const DomainMask& mask);

std::array<int, 2> snap_to_grid(const GridSpec& spec, std::array<double, 2> y);
std::array<double, 2> snapped_point(const GridSpec& spec, std::array<double, 2> y);

/// f_y = xi(|x - a_r|) eta(x_N) phi(x - y), with y snapped to the lattice so
/// phi(.-y) is an exact translate of the origin-centered profile.
Field build_fy(std::array<double, 2> y, const Field& phi, const ProblemParams& params);

struct TestFunction {
  std::array<double, 2> y;  // snapped center
  Field psi;                // normalized, hard-masked
  double c_y = 0.0;         // 1 / ||f_y||_p
  double raw_lp = 0.0;      // ||f_y||_p
};

/// Hard-masked, L^p-normalized Psi_y. Throws when the cutoffs annihilate the
/// profile (||f_y||_p < 1e-8).
TestFunction test_function(std::array<double, 2> y, const Field& phi, const ProblemParams& params,
                           const DomainMask& mask);

/// (||f_y - phi(.-y)||_p, ||f_y - phi(.-y)||_s): the cutoff defect in L^p and
/// in the full H^s norm.
std::pair<double, double> cutoff_error(std::array<double, 2> y, const Field& phi,
                                       const ProblemParams& params);

}  // namespace frachole
