#pragma once

#include <array>
#include <span>

#include "frachole/geometry.hpp"

namespace frachole {

/// chi(t) = 1 on [0,1], 1/t on [1,inf); continuous at 1, t*chi(t) = min(t,1).
double chi(double t);

/// beta(u) = h^N sum u^2(x) chi(|x|) x  (the paper's barycenter, quadratic in u).
std::array<double, 2> barycenter(const Field& u, bool deterministic);

/// h^N sum u^2 chi(|x|).
double chi_mass(const Field& u, bool deterministic);

/// barycenter / chi_mass: position-valued probe; for a localized bump at y
/// this is y up to cutoff asymmetries. Used as the degree probe.
std::array<double, 2> normalized_barycenter(const Field& u, bool deterministic);

/// Plain center of mass h^N sum x u^2 / h^N sum u^2 (no chi weight); the pin
/// map of the constrained minimization.
std::array<double, 2> center_of_mass(const Field& u, bool deterministic);

struct BarycenterReport {
  std::array<double, 2> beta{};      // literal barycenter of Psi_y
  double pairing = 0.0;              // <beta, y> (the paper's pairing)
  std::array<double, 2> y{};         // snapped probe center
  double pairing_alt = 0.0;          // <beta - a_r, y - a_r>
  std::array<double, 2> beta_norm{}; // normalized barycenter (degree probe)
};

/// Builds Psi_y for y on the sphere |y - a_r| = r/2 and evaluates the
/// pairings.
BarycenterReport pushout_test(std::array<double, 2> y, const Field& phi,
                              const ProblemParams& params, const DomainMask& mask);

/// Winding number of (H - target) around 0 for planar samples ordered
/// counterclockwise, by summing principal-branch angle increments. Throws if
/// a sample hits the target or an angular increment reaches pi.
int boundary_degree(std::span<const std::array<double, 2>> values, std::array<double, 2> target);

/// 1D analogue: the "sphere" is two points; degree is the sign change
/// (sign(h_plus - target) - sign(h_minus - target)) / 2.
int boundary_degree_1d(double h_minus, double h_plus, double target);

}  // namespace frachole
