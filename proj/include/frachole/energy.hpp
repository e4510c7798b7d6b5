#pragma once

#include "frachole/fractional.hpp"
#include "frachole/geometry.hpp"

namespace frachole {

/// Energy band [level(M), level(2^{(p-2)/p} M)] derived from a norm-squared
/// threshold through level_from_norm.
struct LevelWindow {
  double lower = 0.0;
  double upper = 0.0;
};

/// (1/2 - 1/p) c^{p/(p-2)}; strictly increasing in c.
double level_from_norm(double c, double p);

LevelWindow level_window(double norm_threshold, double p);

/// I(u) = 1/2 ||u||^2 - 1/p int |u|^p over Omega_r; u must vanish outside the
/// mask.
double energy_I(const Field& u, const DomainMask& mask, const ProblemParams& params);

/// Whole-space functional, no mask.
double energy_Iinf(const Field& u, const ProblemParams& params);

/// L^2 representative of I'(u): (-Delta)^s u + u - |u|^{p-2} u, zeroed
/// outside the mask.
Field grad_I(const Field& u, const DomainMask& mask, const ProblemParams& params);

/// t u with t = (||u||^2 / ||u||_p^p)^{1/(p-2)}, so ||tu||^2 = ||tu||_p^p.
Field nehari_project(const Field& u, const DomainMask& mask, const ProblemParams& params);

}  // namespace frachole
