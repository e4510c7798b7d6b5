#pragma once

#include <utility>

#include "frachole/grid.hpp"
#include "frachole/params.hpp"

namespace frachole {

struct DomainMask;

/// Components of ||u||_s^2. seminorm_sq is the operator-consistent Dirichlet
/// form <u, (-Delta)^s u> (spectral multiplier |k|^{2s}); its L^2 gradient is
/// exactly 2((-Delta)^s u + u) - 2u, which is what every solver here descends.
/// The unnormalized Gagliardo double integral equals
/// gagliardo_conversion(N,s) * seminorm_sq.
struct EnergyBreakdown {
  double seminorm_sq = 0.0;
  double l2_sq = 0.0;
  double lp_p = 0.0;
  double norm_sq = 0.0;
};

/// 2 * A(N,s) with A(N,s) = pi^{N/2} Gamma(1-s) / (s 4^s Gamma(N/2+s)),
/// the constant linking the spectral form to the raw double integral.
double gagliardo_conversion(int dim, double s);

/// |k|^2 for the flattened mode index, with k = pi*m/L per axis,
/// m in [-M/2, M/2) (the Nyquist line carries |m| = M/2).
double mode_k2(const GridSpec& spec, std::size_t mode);

/// Spectral (-Delta)^s: multiplies mode k by |k|^{2s}; output is real.
Field frac_laplacian(const Field& u, double s);

/// ((-Delta)^s + 1) u and its inverse; the inverse doubles as the H^s
/// preconditioner inside the solvers.
Field apply_operator(const Field& u, double s);
Field apply_inverse_operator(const Field& u, double s);

/// sign(u) |u|^{p-1}, with value 0 at u = 0.
Field pointwise_nonlinearity(const Field& u, double p);

double l2_sq(const Field& u, bool deterministic);
double lp_norm(const Field& u, double p, bool deterministic);
double dirichlet_form(const Field& u, double s, bool deterministic);

EnergyBreakdown norm_sq(const Field& u, double s, double p, bool deterministic);

/// Same quantities for u in X_0^s: the L^2/L^p sums run over the mask and the
/// double integral over Q reduces to the full-space form because u vanishes
/// outside. Rejects fields with |u| > 1e-12 * max|u| outside the mask.
EnergyBreakdown restricted_norm_sq(const Field& u, const DomainMask& mask, double s, double p,
                                   bool deterministic);

/// Gagliardo double integral, fast path (conversion constant times the
/// spectral form).
double gagliardo_seminorm_sq(const Field& u, double s, bool deterministic);

enum class PairFilter { all_pairs, both_inside, at_least_one_inside };

/// Direct double-sum oracle: h^{2N} sum over grid-point pairs (diagonal
/// excluded) against the periodized kernel sum_v |dx + 2Lv|^{-(N+2s)}.
/// Guarded to M^N <= 4096 points. The filters restrict pairs to the H^s(Omega)
/// form (both inside) or the Q form (at least one inside).
double gagliardo_seminorm_sq_direct(const Field& u, double s,
                                    PairFilter filter = PairFilter::all_pairs,
                                    const DomainMask* mask = nullptr);

/// R = (-Delta)^s u + u - |u|^{p-2} u and its relative L^2 size
/// ||R||_2 / max(||u||_2, 1e-30).
std::pair<Field, double> residual_field(const Field& u, const ProblemParams& params);

namespace internal {

// Fixed-frame variants: deterministic mode still reduces through the fixed
// pairwise tree but skips the canonical rotation, so results are rerun-stable
// without the translate-invariance guarantee. Solver inner loops use these;
// the public entry points above keep the full contract.
double l2_sq_fixed(const Field& u, bool deterministic);
double lp_norm_fixed(const Field& u, double p, bool deterministic);
EnergyBreakdown norm_sq_fixed(const Field& u, double s, double p, bool deterministic);

}  // namespace internal

}  // namespace frachole
