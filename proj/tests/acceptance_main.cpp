// Acceptance suite: runs every verification criterion end to end at the
// shipped geometry and prints one pass/fail line per criterion. Exit code 0
// iff all pass.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "frachole/campaigns.hpp"

using namespace frachole;

namespace {

int g_failures = 0;
int g_index = 0;

void record(const char* name, bool pass, const std::string& qoi = "") {
  ++g_index;
  if (!pass) ++g_failures;
  std::printf("[%s] %2d %s %s\n", pass ? "PASS" : "FAIL", g_index, name,
              qoi.empty() ? "" : qoi.c_str());
  std::fflush(stdout);
}

template <class... Args>
std::string qoi(const char* fmt, Args... args) {
  char buf[192];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

ProblemParams acceptance_params() {
  ProblemParams prm;
  prm.dim = 2;
  prm.s = 0.5;
  prm.p = 3.0;
  prm.rho = 0.125;
  prm.r = 16.0;
  prm.a = 0.0;
  prm.tol_residual = 1e-5;
  prm.tol_constraint = 1e-6;
  prm.max_iters = 5000;
  prm.deterministic_reduction = true;
  return prm;
}

const GridSpec kAcceptanceGrid = make_grid(2, 32.0, 1024);

Field bump_field(const GridSpec& g, unsigned seed, double wmin, double wmax, double margin) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(-margin, margin);
  std::uniform_real_distribution<double> width(wmin, wmax);
  std::uniform_real_distribution<double> amp(0.5, 1.5);
  std::uniform_int_distribution<int> nb(1, 3);
  std::uniform_int_distribution<int> sgn(0, 1);
  Field u(g);
  const int n = nb(rng);
  for (int b = 0; b < n; ++b) {
    const double cx = pos(rng), cy = g.dim == 2 ? pos(rng) : 0.0;
    const double w = width(rng);
    const double a = amp(rng) * (sgn(rng) ? 1.0 : -1.0);
    for (int i = 0; i < g.points_per_dim; ++i) {
      const double x = g.coord(i);
      if (g.dim == 1) {
        u.at(i) += a * std::exp(-(x - cx) * (x - cx) / (2 * w * w));
      } else {
        for (int j = 0; j < g.points_per_dim; ++j) {
          const double y = g.coord(j);
          u.at(i, j) += a * std::exp(-((x - cx) * (x - cx) + (y - cy) * (y - cy)) / (2 * w * w));
        }
      }
    }
  }
  return u;
}

// 1. single Fourier modes are eigenfunctions of (-Delta)^s
void criterion_operator() {
  double worst = 0.0;
  for (int M : {64, 256}) {
    const GridSpec g = make_grid(1, 10.0, M);
    for (double s : {0.25, 0.5, 0.75}) {
      for (int m : {1, 3, M / 4, M / 2}) {
        Field u(g);
        const double k = std::numbers::pi * m / g.half_extent;
        for (int i = 0; i < M; ++i) u.at(i) = std::cos(k * g.coord(i));
        const Field out = frac_laplacian(u, s);
        const double lam = std::pow(k * k, s);
        for (int i = 0; i < M; ++i)
          worst = std::max(worst, std::abs(out.at(i) - lam * u.at(i)) / lam);
      }
    }
  }
  {
    const GridSpec g = make_grid(2, 10.0, 64);
    for (double s : {0.25, 0.5, 0.75}) {
      for (auto [mi, mj] : {std::pair{1, 0}, {3, 2}, {16, 16}, {32, 0}}) {
        Field u(g);
        const double kx = std::numbers::pi * mi / g.half_extent;
        const double ky = std::numbers::pi * mj / g.half_extent;
        for (int i = 0; i < 64; ++i)
          for (int j = 0; j < 64; ++j)
            u.at(i, j) = std::cos(kx * g.coord(i) + ky * g.coord(j));
        const Field out = frac_laplacian(u, s);
        const double lam = std::pow(kx * kx + ky * ky, s);
        for (std::size_t i = 0; i < u.values.size(); ++i)
          worst = std::max(worst, std::abs(out.values[i] - lam * u.values[i]) / lam);
      }
    }
  }
  record("operator eigenfunctions |k|^{2s} (rel err < 1e-12)", worst < 1e-12,
         qoi("(worst=%.2e, thr=%.0e)", worst, 1e-12));
}

// 2. spectral vs direct-quadrature Gagliardo seminorm within 1%
void criterion_seminorm_oracle() {
  double worst = 0.0;
  {
    const GridSpec g = make_grid(1, 20.0, 2048);
    const double svals[] = {0.3, 0.4, 0.5};
    for (unsigned t = 0; t < 20; ++t) {
      const double s = svals[t % 3];
      const Field u = bump_field(g, 1000 + t, 16.0 * g.spacing(), g.half_extent / 8.0, 10.0);
      const double fast = gagliardo_seminorm_sq(u, s, true);
      const double oracle = gagliardo_seminorm_sq_direct(u, s);
      worst = std::max(worst, std::abs(fast - oracle) / oracle);
    }
  }
  {
    const GridSpec g = make_grid(2, 10.0, 64);
    for (unsigned t = 0; t < 20; ++t) {
      const Field u = bump_field(g, 2000 + t, 6.0 * g.spacing(), g.half_extent / 5.0, 5.0);
      const double fast = gagliardo_seminorm_sq(u, 0.3, true);
      const double oracle = gagliardo_seminorm_sq_direct(u, 0.3);
      worst = std::max(worst, std::abs(fast - oracle) / oracle);
    }
  }
  record("seminorm spectral vs direct oracle (rel diff < 1%)", worst < 0.01,
         qoi("(worst=%.4f%%, thr=%.0f%%)", worst * 100, 1.0));
}

// 3. closed form 2/(1+x^2): residual and solver recovery
void criterion_closed_form() {
  const GridSpec g = make_grid(1, 200.0, 8192);
  ProblemParams prm = acceptance_params();
  prm.dim = 1;
  prm.rho = 0.5;
  prm.r = 2.0;
  Field q(g);
  for (int i = 0; i < g.points_per_dim; ++i) {
    const double x = g.coord(i);
    q.at(i) = 2.0 / (1.0 + x * x);
  }
  const double rel = residual_field(q, prm).second;
  record("closed-form profile residual (rel L2 < 1e-3)", rel < 1e-3,
         qoi("(res=%.2e, thr=%.0e)", rel, 1e-3));

  const GroundState gs = solve_ground_state(prm, g);
  double linf = 0.0;
  for (int i = 0; i < g.points_per_dim; ++i)
    linf = std::max(linf, std::abs(gs.Q.at(i) - q.at(i)));
  record("ground-state solver recovers 2/(1+x^2) (Linf < 1e-2)", linf < 1e-2,
         qoi("(err=%.2e, thr=%.0e)", linf, 1e-2));
}

// 4. grad_I vs central finite differences
void criterion_gradient() {
  const GridSpec g = make_grid(2, 16.0, 128);
  ProblemParams prm = acceptance_params();
  prm.rho = 0.5;
  prm.r = 8.0;
  const DomainMask mask = build_domain(g, prm);
  double worst = 0.0;
  const double eps = 1e-5;
  for (unsigned t = 0; t < 10; ++t) {
    Field u = apply_mask(translate(bump_field(g, 3000 + t, 3 * g.spacing(), 2.0, 4.0), {0, 32}),
                         mask);
    Field v = apply_mask(translate(bump_field(g, 4000 + t, 3 * g.spacing(), 2.0, 4.0), {0, 32}),
                         mask);
    const Field grad = grad_I(u, mask, prm);
    Field up = u, dn = u;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
      up.values[i] += eps * v.values[i];
      dn.values[i] -= eps * v.values[i];
    }
    const double fd = (energy_I(up, mask, prm) - energy_I(dn, mask, prm)) / (2 * eps);
    double dot = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) dot += grad.values[i] * v.values[i];
    dot *= g.cell_measure();
    worst = std::max(worst, std::abs(fd - dot) / std::max(std::abs(dot), 1e-12));
  }
  record("gradient matches finite differences (rel < 1e-4)", worst < 1e-4,
         qoi("(worst=%.2e, thr=%.0e)", worst, 1e-4));
}

struct AcceptanceRun {
  ProblemParams prm = acceptance_params();
  GroundState gs;
  DomainMask mask;
  AcceptanceRun() : gs(solve_ground_state(prm, kAcceptanceGrid)), mask(build_domain(kAcceptanceGrid, prm)) {}
};

// 5. cutoff errors decrease across the r and rho sweeps and end small
void criterion_cutoff_sweep(const AcceptanceRun& run) {
  const auto& prm = run.prm;
  std::vector<std::array<double, 2>> r_err, rho_err;
  for (double rr : {4.0, 8.0, 16.0}) {
    ProblemParams q = prm;
    q.r = rr;
    const auto e = cutoff_error({q.a + 0.4 * rr, rr + 0.3 * rr}, run.gs.phi, q);
    r_err.push_back({e.first, e.second});
  }
  for (double rh : {0.25, 0.125, 0.0625}) {
    ProblemParams q = prm;
    q.rho = rh;
    const auto e = cutoff_error({q.a + 0.2 * prm.r, prm.r + 0.15 * prm.r}, run.gs.phi, q);
    rho_err.push_back({e.first, e.second});
  }
  bool mono = true;
  for (int i = 1; i < 3; ++i) {
    mono = mono && r_err[i][0] <= r_err[i - 1][0] && r_err[i][1] <= r_err[i - 1][1];
    mono = mono && rho_err[i][0] <= rho_err[i - 1][0] && rho_err[i][1] <= rho_err[i - 1][1];
  }
  const double phinorm = std::sqrt(run.gs.M_inf);
  const bool small = r_err[2][0] < 0.05 && r_err[2][1] < 0.05 * phinorm;
  record("cutoff defects monotone over r and rho sweeps", mono,
         qoi("(last r-sweep: lp=%.2e, norm=%.2e)", r_err[2][0], r_err[2][1]));
  record("cutoff defects end below 5% of the profile norms", small,
         qoi("(lp=%.2e, norm/||phi||_s=%.2e)", r_err[2][0], r_err[2][1] / phinorm));
}

// 6. the test-function family realizes M = M_inf
void criterion_m_equality(const AcceptanceRun& run) {
  const auto& prm = run.prm;
  const auto ar = prm.hole_center();
  std::vector<std::array<double, 2>> schedule;
  for (double d : {2.0, 4.0, 8.0, 12.0})
    schedule.push_back({ar[0] + 0.6 * d, ar[1] + 0.8 * d});
  const auto rows = minimizing_sequence_check(run.gs.phi, run.mask, prm, schedule);
  const double gap = std::abs(rows.back().psi_norm_sq - run.gs.M_inf) / run.gs.M_inf;
  const double cy_dev = std::abs(rows.back().c_y - 1.0);
  const bool first_above = rows.front().psi_norm_sq > rows.back().psi_norm_sq;
  record("family norm approaches M_inf (gap < 2%)", gap < 0.02 && first_above,
         qoi("(gap=%.2e, first-last=%.2e)", gap,
             rows.front().psi_norm_sq - rows.back().psi_norm_sq));
  record("normalizations c_y within 5% of 1", cy_dev < 0.05,
         qoi("(dev=%.2e, thr=%.2f)", cy_dev, 0.05));
}

struct SphereScan {
  std::vector<BarycenterReport> reports;
  std::vector<TestFunction> probes;
  std::vector<double> norms;
};

SphereScan scan_sphere(const AcceptanceRun& run) {
  SphereScan scan;
  const auto& prm = run.prm;
  const auto ar = prm.hole_center();
  for (int k = 0; k < 32; ++k) {
    const double th = 2.0 * std::numbers::pi * k / 32;
    const std::array<double, 2> y{ar[0] + (prm.r / 2) * std::cos(th),
                                  ar[1] + (prm.r / 2) * std::sin(th)};
    scan.reports.push_back(pushout_test(y, run.gs.phi, prm, run.mask));
    scan.probes.push_back(test_function(y, run.gs.phi, prm, run.mask));
    scan.norms.push_back(
        restricted_norm_sq(scan.probes.back().psi, run.mask, prm.s, prm.p, true).norm_sq);
  }
  return scan;
}

// 7. Remark 1: 1/2 <= ||f_y||_p <= 3/2 at qualifying probes
void criterion_remark1(const AcceptanceRun& run, const SphereScan& scan) {
  double lo = 1e300, hi = -1e300;
  for (std::size_t k = 0; k < scan.probes.size(); ++k) {
    if (scan.reports[k].y[1] < run.prm.r / 2) continue;  // y_N >= r/2 proviso
    lo = std::min(lo, scan.probes[k].raw_lp);
    hi = std::max(hi, scan.probes[k].raw_lp);
  }
  record("Remark 1: 1/2 <= ||f_y||_p <= 3/2 at qualifying probes", lo >= 0.5 && hi <= 1.5,
         qoi("(range=[%.4f, %.4f])", lo, hi));
}

// 8. c_r margin and the Remark 2 band (needs the solve stage's c_r)
void criterion_remark2(const AcceptanceRun& run, const SphereScan& scan, double c_r) {
  const double M = run.gs.M_inf;
  record("Lemma 4.1: c_r exceeds M with positive margin", c_r > M,
         qoi("(c_r=%.5f, M=%.5f)", c_r, M));
  double excess_min = 1e300, excess_max = -1e300;
  for (std::size_t k = 0; k < scan.norms.size(); ++k) {
    if (scan.reports[k].y[1] < run.prm.r / 2) continue;
    excess_min = std::min(excess_min, scan.norms[k] - M);
    excess_max = std::max(excess_max, scan.norms[k] - M);
  }
  const bool band = excess_min > 0.0 && excess_max < (c_r - M) / 2;
  record("Remark 2: M < ||Psi_y||^2 < (c_r + M)/2 at qualifying probes", band,
         qoi("(excess in [%.2e, %.2e])", excess_min, excess_max));
}

// 9. pushout positivity, degree 1, homotopy pairing
void criterion_topology(const AcceptanceRun& run, const SphereScan& scan) {
  const auto ar = run.prm.hole_center();
  double pushout_min = 1e300;
  std::vector<std::array<double, 2>> Hn, Hl;
  for (const auto& rep : scan.reports) {
    pushout_min = std::min(pushout_min, rep.pairing);
    Hn.push_back(rep.beta_norm);
    Hl.push_back(rep.beta);
  }
  record("Lemma 4.2: <beta(Psi_y), y> > 0 at 32 sphere samples", pushout_min > 0.0,
         qoi("(min=%.4f, thr=%.1f)", pushout_min, 0.0));

  const int deg = boundary_degree(Hn, {ar[0], ar[1]});
  int deg_lit = 0;
  bool deg_lit_ok = true;
  try {
    deg_lit = boundary_degree(Hl, {ar[0], ar[1]});
  } catch (const std::invalid_argument&) {
    deg_lit_ok = false;
  }
  record("Lemma 4.3: boundary degree at a_r equals 1", deg == 1,
         deg_lit_ok ? qoi("(degree=%d, raw-barycenter degree=%d)", deg, deg_lit)
                    : qoi("(degree=%d, raw-barycenter degree undefined)", deg));

  double hom_min = 1e300;
  for (std::size_t k = 0; k < Hn.size(); ++k) {
    const auto& y = scan.reports[k].y;
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const std::array<double, 2> F{(1 - t) * Hn[k][0] + t * y[0],
                                    (1 - t) * Hn[k][1] + t * y[1]};
      hom_min = std::min(hom_min, F[0] * y[0] + F[1] * y[1]);
    }
  }
  record("homotopy pairing <F(t,y), y> > 0 at all knots", hom_min > 0.0,
         qoi("(min=%.4f, thr=%.1f)", hom_min, 0.0));
}

// 10. end-to-end solve: accepted report, window membership, bit-identical rerun
SolveReport criterion_solve(const AcceptanceRun& run) {
  const SolveReport rep = mountain_pass_solve(run.prm, run.gs, run.mask);
  record("Theorem 1.1 solve: accepted (residual, positivity, support, window)",
         rep.accepted,
         qoi("(res=%.2e, norm/M=%.5f)", rep.residual_rel, rep.norm_sq / run.gs.M_inf));
  record("solve window: M < ||u||^2/||u||_p^2 < 2^{(p-2)/p} M",
         rep.in_norm_window && !rep.escaped,
         qoi("(value=%.5f, window=(%.5f, %.5f))", rep.norm_sq, rep.norm_window_lower,
             rep.norm_window_upper));

  const SolveReport rerun = mountain_pass_solve(run.prm, run.gs, run.mask);
  const bool identical = rerun.residual_rel == rep.residual_rel &&
                         rerun.norm_sq == rep.norm_sq && rerun.norm_sq_raw == rep.norm_sq_raw &&
                         rerun.level == rep.level && rerun.c_r == rep.c_r &&
                         rerun.family_max == rep.family_max &&
                         rerun.iterations == rep.iterations && rerun.u.values == rep.u.values;
  record("deterministic rerun is bit-identical", identical,
         qoi("(res delta=%.1e, norm delta=%.1e)",
             std::abs(rerun.residual_rel - rep.residual_rel),
             std::abs(rerun.norm_sq - rep.norm_sq)));
  return rep;
}

// 11. bubbling diagnostic oracle
void criterion_bubbling(const AcceptanceRun& run) {
  const GridSpec& g = kAcceptanceGrid;
  const int M = g.points_per_dim;
  Field u0(g);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      const double x = g.coord(i), y = g.coord(j);
      u0.at(i, j) = 0.6 * std::exp(-((x + 10) * (x + 10) + (y - 24) * (y - 24)) / 0.5);
    }
  std::vector<Field> snaps;
  for (int n = 0; n < 4; ++n) {
    Field un = u0;
    const Field qn = translate(run.gs.Q, {M / 4 + 16 * n, -M / 4});
    for (std::size_t i = 0; i < un.values.size(); ++i) un.values[i] += qn.values[i];
    snaps.push_back(un);
  }
  const BubbleReport rep = ps_diagnostics(snaps, run.prm);
  double bubble_energy = 0.0;
  for (const auto& l : rep.lumps)
    if (l.escaping) bubble_energy = l.energy;
  const double lev = level_from_norm(run.gs.M_inf, run.prm.p);
  const bool energy_ok = rep.k == 1 && std::abs(bubble_energy - lev) / lev < 0.05;
  record("bubbling oracle: k = 1 with energy within 5% of level(M_inf)", energy_ok,
         qoi("(k-energy rel err=%.2e, defect frac=%.2e)",
             std::abs(bubble_energy - lev) / lev,
             rep.splitting_defect / std::abs(rep.total_energy)));
  record("bubbling oracle: splitting defect < 10%",
         rep.splitting_defect < 0.10 * std::abs(rep.total_energy),
         qoi("(defect=%.2e, total=%.2e)", rep.splitting_defect, rep.total_energy));
}

}  // namespace

int main() {
  std::printf("== acceptance suite: N=2, s=0.5, p=3, rho=0.125, r=16, L=32, M=1024 ==\n");
  criterion_operator();
  criterion_seminorm_oracle();
  criterion_closed_form();
  criterion_gradient();

  const AcceptanceRun run;
  std::printf("   (2d ground state: M_inf=%.8f, residual=%.2e, %d iterations)\n", run.gs.M_inf,
              run.gs.residual, run.gs.iterations);
  criterion_cutoff_sweep(run);
  criterion_m_equality(run);
  const SphereScan scan = scan_sphere(run);
  criterion_remark1(run, scan);
  const SolveReport rep = criterion_solve(run);
  criterion_remark2(run, scan, rep.c_r);
  criterion_topology(run, scan);
  criterion_bubbling(run);

  std::printf("== %s: %d criterion checks, %d failed ==\n", g_failures == 0 ? "PASS" : "FAIL",
              g_index, g_failures);
  return g_failures == 0 ? 0 : 1;
}
