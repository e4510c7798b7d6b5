#include "frachole/energy.hpp"

#include <cmath>

namespace frachole {

double level_from_norm(double c, double p) {
  if (!(p > 2.0)) throw std::invalid_argument("level_from_norm: p must exceed 2");
  if (!(c >= 0.0)) throw std::invalid_argument("level_from_norm: c must be >= 0");
  return (0.5 - 1.0 / p) * std::pow(c, p / (p - 2.0));
}

LevelWindow level_window(double norm_threshold, double p) {
  return {level_from_norm(norm_threshold, p),
          level_from_norm(std::pow(2.0, (p - 2.0) / p) * norm_threshold, p)};
}

double energy_I(const Field& u, const DomainMask& mask, const ProblemParams& params) {
  const EnergyBreakdown b =
      restricted_norm_sq(u, mask, params.s, params.p, params.deterministic_reduction);
  return 0.5 * b.norm_sq - b.lp_p / params.p;
}

double energy_Iinf(const Field& u, const ProblemParams& params) {
  const EnergyBreakdown b = norm_sq(u, params.s, params.p, params.deterministic_reduction);
  return 0.5 * b.norm_sq - b.lp_p / params.p;
}

Field grad_I(const Field& u, const DomainMask& mask, const ProblemParams& params) {
  if (mass_outside_fraction(u, mask) > 1e-12)
    throw std::invalid_argument("grad_I: field carries mass outside the mask");
  Field g = apply_operator(u, params.s);
  const Field nl = pointwise_nonlinearity(u, params.p);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    g.values[i] -= nl.values[i];
    if (!mask.inside[i]) g.values[i] = 0.0;
  }
  return g;
}

Field nehari_project(const Field& u, const DomainMask& mask, const ProblemParams& params) {
  const EnergyBreakdown b =
      restricted_norm_sq(u, mask, params.s, params.p, params.deterministic_reduction);
  if (b.lp_p <= 0.0) throw std::invalid_argument("nehari_project: zero field");
  const double t = std::pow(b.norm_sq / b.lp_p, 1.0 / (params.p - 2.0));
  Field out = u;
  for (double& v : out.values) v *= t;
  return out;
}

}  // namespace frachole
