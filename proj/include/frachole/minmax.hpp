#pragma once

#include <functional>
#include <vector>

#include "frachole/energy.hpp"
#include "frachole/ground_state.hpp"
#include "frachole/topology.hpp"

namespace frachole {

struct CrResult {
  Field u;                      // minimizer, ||u||_p = 1
  double c_r = 0.0;             // ||u||^2 (restricted)
  double lp_residual = 0.0;     // | ||u||_p - 1 |
  double pin_residual = 0.0;    // |center_of_mass(u) - a_r|
  std::array<double, 2> beta_literal{};
  std::array<double, 2> center{};
  int outer_iterations = 0;
  int inner_iterations = 0;
};

/// Augmented-Lagrangian minimization of the restricted norm over
/// { u >= 0 in X_0^s : ||u||_p = 1, pinned at a_r }. The L^p constraint is
/// enforced by exact renormalization each step; the position pin (plain
/// center of mass = a_r) carries the multipliers (penalty 10, grown x4 when
/// the constraint residual fails to halve). Initialized from the symmetrized
/// pair (Psi_{y+} + Psi_{y-})/2 with y+- mirrored about a_r at distance 2 rho.
/// When the geometry admits the mirror symmetries (a = 0; and r = L/2 in 2D)
/// the iterates are projected onto the symmetric subspace.
CrResult constrained_min_cr(const ProblemParams& params, const GroundState& gs,
                            const DomainMask& mask);

struct FamilySample {
  std::array<double, 2> y{};
  double psi_norm_sq = 0.0;
};

struct SolveReport {
  Field u;                        // the candidate solution (Nehari scale)
  double residual_rel = 0.0;      // ||(-D)^s u + u - |u|^{p-2}u||_2 / ||u||_2 on Omega_r
  double norm_sq = 0.0;           // ||u||^2 / ||u||_p^2 : the L^p-normalized window metric
  double norm_sq_raw = 0.0;       // ||u||^2 of the Nehari-scaled solution
  double level = 0.0;             // energy_I(u)
  double c_r = 0.0;
  double family_max = 0.0;        // stage A: max ||Psi_y||^2 over |y-a_r| <= r/2
  LevelWindow window;             // level window from M
  double norm_window_lower = 0.0; // M
  double norm_window_upper = 0.0; // 2^{(p-2)/p} M
  bool in_norm_window = false;
  bool in_level_window = false;
  bool escaped = false;           // ||u||^2/||u||_p^2 <= M (1 + 1e-3)
  bool accepted = false;
  double lp_constraint_residual = 0.0;  // at the c_r stage
  double pin_constraint_residual = 0.0;
  std::array<double, 2> beta_literal{};
  std::array<double, 2> center{};
  double min_value = 0.0;         // min of u over the grid
  double support_outside = 0.0;   // max |u| outside the mask (must be 0)
  int iterations = 0;
  double wall_time_sec = 0.0;
  std::vector<FamilySample> family;  // stage A table
};

using SnapshotSink = std::function<void(int iter, const Field& u)>;

/// Stage A evaluates the test-function family over a lattice of centers in
/// the closed ball |y - a_r| <= r/2 and records the max norm (an upper bound
/// for the min-max level). Stage B runs Nehari-reprojected, positivity-
/// clipped, H^s-preconditioned descent on I from nehari_project(u*),
/// symmetrized when the geometry allows, and accepts iff the relative
/// residual is below tol_residual, u >= 0, the support is exactly contained
/// in the mask, and M < ||u||^2/||u||_p^2 < 2^{(p-2)/p} M.
SolveReport mountain_pass_solve(const ProblemParams& params, const GroundState& gs,
                                const DomainMask& mask, const SnapshotSink& sink = nullptr);

struct BubbleLump {
  std::array<double, 2> center{};  // physical coordinates, final snapshot
  double width_cells = 0.0;        // max cell distance from center over the lump
  double energy = 0.0;             // localized I_inf estimate
  bool escaping = false;
};

struct BubbleReport {
  int k = 0;  // escaping lumps
  std::vector<BubbleLump> lumps;
  double base_energy = 0.0;       // I_inf of the final snapshot minus escaping lumps
  double total_energy = 0.0;      // I_inf of the final snapshot
  double splitting_defect = 0.0;  // |total - base - sum of escaping energies|
};

/// Sliding-window mass tracker over descent snapshots: connected lumps of
/// |u|^2 above 1e-4 of the peak are tracked across snapshots; a lump is
/// "escaping" when its center drifts monotonically by more than 5 cells
/// between consecutive snapshots. Per-lump energy is a localized energy_Iinf
/// on a window of radius 4x the lump width. Needs at least 3 snapshots.
BubbleReport ps_diagnostics(std::span<const Field> snapshots, const ProblemParams& params);

}  // namespace frachole
