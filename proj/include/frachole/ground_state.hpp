#pragma once

#include <optional>
#include <span>
#include <vector>

#include "frachole/energy.hpp"

namespace frachole {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TraceRow {
  int iter = 0;
  double objective = 0.0;
  double step = 0.0;
  double residual = 0.0;
};

struct GroundState {
  Field phi;           // minimizer, ||phi||_p = 1, peak at the origin
  double M_inf = 0.0;  // ||phi||_s^2
  Field Q;             // M_inf^{1/(p-2)} phi, solves the limit problem
  double residual = 0.0;
  int iterations = 0;
  std::vector<TraceRow> trace;
};

/// Projected gradient descent for M_inf = inf { ||u||_s^2 : ||u||_p = 1 } on
/// the whole torus. Each step takes |u| (positivity), recenters the peak to
/// the origin, renormalizes in L^p, and backtracks (Armijo, initial step 1.0,
/// shrink 1/2, sufficient decrease 1e-4, Barzilai-Borwein restart). The
/// descent direction is the H^s-preconditioned tangent gradient. Terminates
/// when the relative objective decrease over 10 steps falls below 1e-10 and
/// the Euler-Lagrange residual is small; throws SolverError on
/// non-convergence or collapse. The returned Q must satisfy the limit problem
/// to params.tol_residual.
GroundState solve_ground_state(const ProblemParams& params, const GridSpec& spec,
                               const std::optional<Field>& init = std::nullopt);

struct SequenceRow {
  double dist = 0.0;         // |y - a_r| of the snapped center
  double psi_norm_sq = 0.0;  // ||Psi_y||^2 (restricted form)
  double c_y = 0.0;
};

/// Evaluates ||Psi_{y_n}||^2 and c_{y_n} along a schedule of centers with
/// |y_n - a_r| and y_N both increasing; the norm column must approach M_inf.
std::vector<SequenceRow> minimizing_sequence_check(const Field& phi, const DomainMask& mask,
                                                   const ProblemParams& params,
                                                   std::span<const std::array<double, 2>> schedule);

}  // namespace frachole
