#include "frachole/minmax.hpp"

#include <chrono>
#include <cmath>
#include <queue>

#include "frachole/reduce.hpp"

namespace frachole {

namespace {

double dot_l2(const Field& a, const Field& b, bool det) {
  const double* pa = a.values.data();
  const double* pb = b.values.data();
  const double sum =
      map_sum(a.values.size(), [pa, pb](std::size_t i) { return pa[i] * pb[i]; }, det);
  return a.spec.cell_measure() * sum;
}

double energy_fixed(const Field& u, double s, double p, bool det) {
  const EnergyBreakdown b = internal::norm_sq_fixed(u, s, p, det);
  return 0.5 * b.norm_sq - b.lp_p / p;
}

Field nehari_fixed(Field u, double s, double p, bool det) {
  const EnergyBreakdown b = internal::norm_sq_fixed(u, s, p, det);
  if (b.lp_p <= 0.0) throw SolverError("nehari scaling: zero field");
  const double t = std::pow(b.norm_sq / b.lp_p, 1.0 / (p - 2.0));
  for (double& v : u.values) v *= t;
  return u;
}

struct Mirror {
  bool x = false;  // x1 -> -x1 (exact when a = 0)
  bool y = false;  // x_N -> 2r - x_N (exact when dim == 2 and r = L/2)
};

Mirror mirror_config(const ProblemParams& params, const GridSpec& spec) {
  Mirror m;
  if (params.dim == 2) {
    m.x = params.a == 0.0;
    m.y = params.r == spec.half_extent / 2.0;
  }
  return m;
}

void symmetrize(Field& u, const Mirror& m) {
  const int M = u.spec.points_per_dim;
  if (u.spec.dim != 2) return;
  if (m.x) {
    for (int i = 1; i < M / 2; ++i)
      for (int j = 0; j < M; ++j) {
        const double avg = 0.5 * (u.at(i, j) + u.at(M - i, j));
        u.at(i, j) = avg;
        u.at(M - i, j) = avg;
      }
  }
  if (m.y) {
    // j' = (3M/2 - j) mod M reflects x_N about r = L/2
    for (int j = 0; j < M; ++j) {
      const int jp = (3 * M / 2 - j) % M < 0 ? (3 * M / 2 - j) % M + M : (3 * M / 2 - j) % M;
      if (jp <= j) continue;
      for (int i = 0; i < M; ++i) {
        const double avg = 0.5 * (u.at(i, j) + u.at(i, jp));
        u.at(i, j) = avg;
        u.at(i, jp) = avg;
      }
    }
  }
}

void clip_and_mask(Field& u, const DomainMask& mask) {
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    if (!mask.inside[i] || u.values[i] < 0.0)
      u.values[i] = 0.0;
  }
}

Field masked_pde_gradient(const Field& u, const DomainMask& mask, const ProblemParams& params) {
  Field g = apply_operator(u, params.s);
  const Field nl = pointwise_nonlinearity(u, params.p);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    g.values[i] -= nl.values[i];
    if (!mask.inside[i]) g.values[i] = 0.0;
  }
  return g;
}

double residual_relative_on_mask(const Field& u, const DomainMask& mask,
                                 const ProblemParams& params) {
  const Field g = masked_pde_gradient(u, mask, params);
  const bool det = params.deterministic_reduction;
  return std::sqrt(internal::l2_sq_fixed(g, det)) /
         std::max(std::sqrt(internal::l2_sq_fixed(u, det)), 1e-30);
}

}  // namespace

CrResult constrained_min_cr(const ProblemParams& params, const GroundState& gs,
                            const DomainMask& mask) {
  params.validate();
  const double s = params.s, p = params.p;
  const bool det = params.deterministic_reduction;
  const auto ar = params.hole_center();
  const GridSpec& spec = gs.phi.spec;
  const Mirror mir = mirror_config(params, spec);

  // init: mirrored pair hugging the hole
  const double d0 = 2.0 * params.rho;
  Field v;
  {
    std::array<double, 2> yp{ar[0] + d0, ar[1]}, ym{ar[0] - d0, ar[1]};
    if (params.dim == 1) {
      yp = {ar[0] + d0, 0.0};
      ym = {ar[0] - d0, 0.0};
    }
    const TestFunction tp = test_function(yp, gs.phi, params, mask);
    const TestFunction tm = test_function(ym, gs.phi, params, mask);
    v = tp.psi;
    for (std::size_t i = 0; i < v.values.size(); ++i)
      v.values[i] = 0.5 * (v.values[i] + tm.psi.values[i]);
  }
  clip_and_mask(v, mask);
  symmetrize(v, mir);
  {
    const double n = internal::lp_norm_fixed(v, p, det);
    if (n < 1e-30) throw SolverError("constrained_min_cr: degenerate initialization");
    for (double& x : v.values) x /= n;
  }

  std::array<double, 2> lam{0.0, 0.0};
  double mu = 10.0;
  const int ncon = params.dim;
  auto pin_violation = [&](const Field& u) {
    const auto c = center_of_mass(u, det);
    std::array<double, 2> C{c[0] - ar[0], 0.0};
    if (params.dim == 2) C[1] = c[1] - ar[1];
    return C;
  };
  auto al_value = [&](const Field& u, const std::array<double, 2>& C) {
    double val = internal::norm_sq_fixed(u, s, p, det).norm_sq;
    for (int i = 0; i < ncon; ++i) val += lam[static_cast<std::size_t>(i)] * C[static_cast<std::size_t>(i)] +
                                         0.5 * mu * C[static_cast<std::size_t>(i)] * C[static_cast<std::size_t>(i)];
    return val;
  };

  CrResult out;
  double prev_nc = -1.0;
  double prev_obj = -1.0;
  int inner_total = 0;
  double stat = 1.0;
  std::array<double, 2> C = pin_violation(v);
  for (int outer = 0; outer < 15; ++outer) {
    double base = al_value(v, C);
    Field prev_u, prev_d;
    double tau = 0.5;
    int inner = 0;
    for (; inner < 120; ++inner) {
      const auto com = center_of_mass(v, det);
      C = {com[0] - ar[0], params.dim == 2 ? com[1] - ar[1] : 0.0};
      const double m_plain = dot_l2(v, v, det);
      Field Av = apply_operator(v, s);
      Field g = Av;
      for (double& x : g.values) x *= 2.0;
      // pin gradient: grad com_i = 2 u (x_i - com_i) / int u^2
      const int M = spec.points_per_dim;
      for (int ci = 0; ci < ncon; ++ci) {
        const double coef = lam[static_cast<std::size_t>(ci)] + mu * C[static_cast<std::size_t>(ci)];
        if (coef == 0.0) continue;
        if (spec.dim == 1) {
          for (int i = 0; i < M; ++i)
            g.at(i) += coef * 2.0 * v.at(i) * (spec.coord(i) - com[0]) * spec.cell_measure() / m_plain;
        } else {
          for (int i = 0; i < M; ++i) {
            const double x = spec.coord(i);
            for (int j = 0; j < M; ++j) {
              const double w = ci == 0 ? x : spec.coord(j);
              g.at(i, j) += coef * 2.0 * v.at(i, j) * (w - com[static_cast<std::size_t>(ci)]) *
                            spec.cell_measure() / m_plain;
            }
          }
        }
      }
      // project out the L^p-sphere normal
      Field w = pointwise_nonlinearity(v, p);
      const double proj = dot_l2(g, w, det) / dot_l2(w, w, det);
      for (std::size_t i = 0; i < g.values.size(); ++i) {
        g.values[i] -= proj * w.values[i];
        if (!mask.inside[i]) g.values[i] = 0.0;
      }
      stat = std::sqrt(internal::l2_sq_fixed(g, det)) /
             std::max(std::sqrt(internal::l2_sq_fixed(v, det)), 1e-30);
      if (stat < params.tol_residual) break;
      Field d = apply_inverse_operator(g, s);
      if (!prev_u.values.empty()) {
        Field du = v, dd = d;
        for (std::size_t i = 0; i < du.values.size(); ++i) {
          du.values[i] -= prev_u.values[i];
          dd.values[i] -= prev_d.values[i];
        }
        const double den = dot_l2(du, dd, det);
        if (den != 0.0) tau = std::min(std::max(std::abs(dot_l2(du, du, det) / den), 1e-5), 100.0);
      }
      prev_u = v;
      prev_d = d;
      const double m0 = dot_l2(g, d, det);
      bool accepted = false;
      for (int bt = 0; bt < 40; ++bt) {
        Field vt = v;
        for (std::size_t i = 0; i < vt.values.size(); ++i) vt.values[i] -= tau * d.values[i];
        clip_and_mask(vt, mask);
        symmetrize(vt, mir);
        clip_and_mask(vt, mask);
        const double n = internal::lp_norm_fixed(vt, p, det);
        if (n > 1e-30) {
          for (double& x : vt.values) x /= n;
          const auto Ct = pin_violation(vt);
          const double ft = al_value(vt, Ct);
          if (ft <= base - 1e-4 * tau * m0) {
            v = std::move(vt);
            base = ft;
            C = Ct;
            accepted = true;
            break;
          }
        }
        tau *= 0.5;
      }
      if (!accepted) break;
    }
    inner_total += inner;
    double nc = 0.0;
    for (int i = 0; i < ncon; ++i) nc = std::hypot(nc, C[static_cast<std::size_t>(i)]);
    const double obj = internal::norm_sq_fixed(v, s, p, det).norm_sq;
    // the positivity clip keeps the projected stationarity from vanishing at
    // the constrained minimum, so a stalled objective also counts as done
    const bool stalled = prev_obj >= 0.0 && std::abs(obj - prev_obj) < 1e-10 * obj;
    out.outer_iterations = outer + 1;
    if (nc < params.tol_constraint && (stat < 10.0 * params.tol_residual || stalled)) break;
    for (int i = 0; i < ncon; ++i) lam[static_cast<std::size_t>(i)] += mu * C[static_cast<std::size_t>(i)];
    if (prev_nc >= 0.0 && nc > 0.5 * prev_nc) mu = std::min(mu * 4.0, 1e8);
    prev_nc = nc;
    prev_obj = obj;
  }

  out.u = v;
  const EnergyBreakdown b = restricted_norm_sq(v, mask, s, p, det);
  out.c_r = b.norm_sq;
  out.lp_residual = std::abs(lp_norm(v, p, det) - 1.0);
  const auto com = center_of_mass(v, det);
  out.center = com;
  out.pin_residual = params.dim == 1 ? std::abs(com[0] - ar[0])
                                     : std::hypot(com[0] - ar[0], com[1] - ar[1]);
  out.beta_literal = barycenter(v, det);
  out.inner_iterations = inner_total;
  return out;
}

SolveReport mountain_pass_solve(const ProblemParams& params, const GroundState& gs,
                                const DomainMask& mask, const SnapshotSink& sink) {
  params.validate();
  const auto t_start = std::chrono::steady_clock::now();
  const double s = params.s, p = params.p;
  const bool det = params.deterministic_reduction;
  const auto ar = params.hole_center();
  const GridSpec& spec = gs.phi.spec;
  const double h = spec.spacing();

  SolveReport rep;
  rep.norm_window_lower = gs.M_inf;
  rep.norm_window_upper = std::pow(2.0, (p - 2.0) / p) * gs.M_inf;
  rep.window = level_window(gs.M_inf, p);

  // Stage A: family {Psi_y : |y - a_r| <= r/2} on a center lattice
  {
    const double rad = params.r / 2.0;
    const int cells = std::max(1, static_cast<int>(std::floor(rad / h)));
    const int stride = std::max(1, (2 * cells + 1) / 31);
    double fam_max = 0.0;
    std::vector<std::array<int, 2>> offsets;
    if (params.dim == 1) {
      for (int di = -cells; di <= cells; di += stride) offsets.push_back({di, 0});
    } else {
      for (int di = -cells; di <= cells; di += stride)
        for (int dj = -cells; dj <= cells; dj += stride)
          if (static_cast<double>(di) * di + static_cast<double>(dj) * dj <=
              (rad / h) * (rad / h))
            offsets.push_back({di, dj});
    }
    std::vector<FamilySample> table(offsets.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(offsets.size()); ++k) {
      const auto& off = offsets[static_cast<std::size_t>(k)];
      std::array<double, 2> y{ar[0] + off[0] * h, params.dim == 2 ? ar[1] + off[1] * h : 0.0};
      FamilySample samp;
      samp.y = snapped_point(spec, y);
      try {
        const TestFunction tf = test_function(y, gs.phi, params, mask);
        samp.psi_norm_sq = restricted_norm_sq(tf.psi, mask, s, p, det).norm_sq;
      } catch (const std::invalid_argument&) {
        samp.psi_norm_sq = std::numeric_limits<double>::quiet_NaN();
      }
      table[static_cast<std::size_t>(k)] = samp;
    }
    for (const auto& samp : table)
      if (std::isfinite(samp.psi_norm_sq)) fam_max = std::max(fam_max, samp.psi_norm_sq);
    rep.family = std::move(table);
    rep.family_max = fam_max;
  }

  // c_r stage
  CrResult cr = constrained_min_cr(params, gs, mask);
  rep.c_r = cr.c_r;
  rep.lp_constraint_residual = cr.lp_residual;
  rep.pin_constraint_residual = cr.pin_residual;
  rep.beta_literal = cr.beta_literal;
  rep.center = cr.center;

  // Stage B: Nehari-reprojected descent from nehari_project(u*)
  const Mirror mir = mirror_config(params, spec);
  Field u = cr.u;
  clip_and_mask(u, mask);
  symmetrize(u, mir);
  clip_and_mask(u, mask);
  u = nehari_fixed(std::move(u), s, p, det);
  double I = energy_fixed(u, s, p, det);
  double res = 1.0;
  Field prev_u, prev_d;
  double tau = 1.0;
  int it = 0;
  for (it = 1; it <= params.max_iters; ++it) {
    const Field g = masked_pde_gradient(u, mask, params);
    res = std::sqrt(internal::l2_sq_fixed(g, det)) /
          std::max(std::sqrt(internal::l2_sq_fixed(u, det)), 1e-30);
    if (sink) sink(it, u);
    if (res < params.tol_residual) break;
    Field d = apply_inverse_operator(g, s);
    for (std::size_t i = 0; i < d.values.size(); ++i)
      if (!mask.inside[i]) d.values[i] = 0.0;
    if (!prev_u.values.empty()) {
      Field du = u, dd = d;
      for (std::size_t i = 0; i < du.values.size(); ++i) {
        du.values[i] -= prev_u.values[i];
        dd.values[i] -= prev_d.values[i];
      }
      const double den = dot_l2(du, dd, det);
      if (den != 0.0) tau = std::min(std::max(std::abs(dot_l2(du, du, det) / den), 1e-4), 1e3);
    }
    prev_u = u;
    prev_d = d;
    const double m0 = dot_l2(g, d, det);
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      Field v = u;
      for (std::size_t i = 0; i < v.values.size(); ++i) v.values[i] -= tau * d.values[i];
      clip_and_mask(v, mask);
      symmetrize(v, mir);
      clip_and_mask(v, mask);
      const double n = internal::lp_norm_fixed(v, p, det);
      if (n > 1e-30) {
        v = nehari_fixed(std::move(v), s, p, det);
        const double Iv = energy_fixed(v, s, p, det);
        if (Iv <= I - 1e-4 * tau * m0) {
          u = std::move(v);
          I = Iv;
          accepted = true;
          break;
        }
      }
      tau *= 0.5;
    }
    if (!accepted) break;  // stalled; report the residual reached
  }

  rep.u = u;
  rep.residual_rel = residual_relative_on_mask(u, mask, params);
  rep.iterations = it;
  const EnergyBreakdown b = restricted_norm_sq(u, mask, s, p, det);
  rep.norm_sq_raw = b.norm_sq;
  const double lpn = std::pow(b.lp_p, 1.0 / p);
  rep.norm_sq = b.norm_sq / (lpn * lpn);
  rep.level = 0.5 * b.norm_sq - b.lp_p / p;
  rep.min_value = *std::min_element(u.values.begin(), u.values.end());
  double outside = 0.0;
  for (std::size_t i = 0; i < u.values.size(); ++i)
    if (!mask.inside[i]) outside = std::max(outside, std::abs(u.values[i]));
  rep.support_outside = outside;
  rep.escaped = rep.norm_sq <= gs.M_inf * (1.0 + 1e-3);
  rep.in_norm_window = rep.norm_sq > rep.norm_window_lower && rep.norm_sq < rep.norm_window_upper;
  rep.in_level_window = rep.level > rep.window.lower && rep.level < rep.window.upper;
  rep.accepted = rep.residual_rel < params.tol_residual && rep.min_value >= 0.0 &&
                 rep.support_outside == 0.0 && rep.in_norm_window;
  rep.wall_time_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return rep;
}

BubbleReport ps_diagnostics(std::span<const Field> snapshots, const ProblemParams& params) {
  if (snapshots.size() < 3)
    throw std::invalid_argument("ps_diagnostics: need at least 3 snapshots");
  const GridSpec& spec = snapshots[0].spec;
  const int M = spec.points_per_dim;
  const bool det = params.deterministic_reduction;

  struct Lump {
    std::array<int, 2> peak{};
    double width_cells = 0.0;
  };

  auto torus_delta = [M](int a, int b) {
    int d = a - b;
    if (d > M / 2) d -= M;
    if (d < -M / 2) d += M;
    return d;
  };

  auto find_lumps = [&](const Field& u) {
    std::vector<Lump> lumps;
    const std::size_t n = u.values.size();
    double peak = 0.0;
    for (double v : u.values) peak = std::max(peak, v * v);
    if (peak <= 0.0) return lumps;
    const double floor = 1e-4 * peak;
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
      if (seen[start] || u.values[start] * u.values[start] <= floor) continue;
      // BFS over the periodic 4-neighborhood
      std::vector<std::size_t> comp;
      std::queue<std::size_t> q;
      q.push(start);
      seen[start] = 1;
      while (!q.empty()) {
        const std::size_t c = q.front();
        q.pop();
        comp.push_back(c);
        const int ci = spec.dim == 1 ? static_cast<int>(c) : static_cast<int>(c) / M;
        const int cj = spec.dim == 1 ? 0 : static_cast<int>(c) % M;
        auto visit = [&](int i, int j) {
          i = (i % M + M) % M;
          j = (j % M + M) % M;
          const std::size_t idx = spec.dim == 1 ? static_cast<std::size_t>(i)
                                                : static_cast<std::size_t>(i) * M + j;
          if (!seen[idx] && u.values[idx] * u.values[idx] > floor) {
            seen[idx] = 1;
            q.push(idx);
          }
        };
        if (spec.dim == 1) {
          visit(ci - 1, 0);
          visit(ci + 1, 0);
        } else {
          visit(ci - 1, cj);
          visit(ci + 1, cj);
          visit(ci, cj - 1);
          visit(ci, cj + 1);
        }
      }
      Lump lump;
      double best = -1.0;
      for (std::size_t c : comp) {
        const double v2 = u.values[c] * u.values[c];
        if (v2 > best) {
          best = v2;
          lump.peak = spec.dim == 1
                          ? std::array<int, 2>{static_cast<int>(c), 0}
                          : std::array<int, 2>{static_cast<int>(c) / M, static_cast<int>(c) % M};
        }
      }
      for (std::size_t c : comp) {
        const int ci = spec.dim == 1 ? static_cast<int>(c) : static_cast<int>(c) / M;
        const int cj = spec.dim == 1 ? 0 : static_cast<int>(c) % M;
        const double di = torus_delta(ci, lump.peak[0]);
        const double dj = spec.dim == 1 ? 0.0 : torus_delta(cj, lump.peak[1]);
        lump.width_cells = std::max(lump.width_cells, std::hypot(di, dj));
      }
      lumps.push_back(lump);
    }
    return lumps;
  };

  // track lumps of the final snapshot backwards through all snapshots
  const std::size_t last = snapshots.size() - 1;
  std::vector<Lump> final_lumps = find_lumps(snapshots[last]);
  std::vector<std::vector<Lump>> per_snapshot;
  for (const Field& f : snapshots) per_snapshot.push_back(find_lumps(f));

  BubbleReport rep;
  rep.total_energy = energy_Iinf(snapshots[last], params);
  Field base = snapshots[last];

  for (const Lump& fl : final_lumps) {
    // nearest-center matching backwards in time
    std::vector<std::array<int, 2>> track(snapshots.size());
    track[last] = fl.peak;
    bool matched = true;
    for (std::size_t t = last; t-- > 0;) {
      const auto& cands = per_snapshot[t];
      if (cands.empty()) {
        matched = false;
        break;
      }
      double bestd = 1e300;
      std::array<int, 2> bestp{};
      for (const Lump& c : cands) {
        const double d = std::hypot(static_cast<double>(torus_delta(c.peak[0], track[t + 1][0])),
                                     static_cast<double>(torus_delta(c.peak[1], track[t + 1][1])));
        if (d < bestd) {
          bestd = d;
          bestp = c.peak;
        }
      }
      track[t] = bestp;
    }
    bool escaping = matched;
    if (matched) {
      std::array<double, 2> prev_step{0.0, 0.0};
      for (std::size_t t = 0; t + 1 < snapshots.size(); ++t) {
        const double di = torus_delta(track[t + 1][0], track[t][0]);
        const double dj = torus_delta(track[t + 1][1], track[t][1]);
        const double stepn = std::hypot(di, dj);
        if (stepn <= 5.0) {
          escaping = false;
          break;
        }
        if (t > 0 && prev_step[0] * di + prev_step[1] * dj <= 0.0) {
          escaping = false;
          break;
        }
        prev_step = {di, dj};
      }
    } else {
      escaping = false;
    }

    BubbleLump out;
    out.center = {spec.coord(fl.peak[0]), spec.dim == 2 ? spec.coord(fl.peak[1]) : 0.0};
    out.width_cells = fl.width_cells;
    out.escaping = escaping;
    // localized energy on a window of radius 4x the lump width
    {
      const int MM = spec.points_per_dim;
      Field patch = translate(snapshots[last], {MM / 2 - fl.peak[0],
                                                spec.dim == 2 ? MM / 2 - fl.peak[1] : 0});
      const double rad = 4.0 * std::max(fl.width_cells, 1.0);
      for (int i = 0; i < MM; ++i) {
        const double di = i - MM / 2;
        if (spec.dim == 1) {
          if (std::abs(di) > rad) patch.at(i) = 0.0;
        } else {
          for (int j = 0; j < MM; ++j) {
            const double dj = j - MM / 2;
            if (std::hypot(di, dj) > rad) patch.at(i, j) = 0.0;
          }
        }
      }
      out.energy = energy_Iinf(patch, params);
      if (escaping) {
        // remove the lump from the base field
        for (int i = 0; i < MM; ++i)
          for (int j = 0; j < (spec.dim == 2 ? MM : 1); ++j) {
            const double di = torus_delta(i, fl.peak[0]);
            const double dj = spec.dim == 2 ? torus_delta(j, fl.peak[1]) : 0;
            if (std::hypot(static_cast<double>(di), static_cast<double>(dj)) <= rad) {
              if (spec.dim == 1)
                base.at(i) = 0.0;
              else
                base.at(i, j) = 0.0;
            }
          }
      }
    }
    rep.lumps.push_back(out);
    if (escaping) ++rep.k;
  }

  rep.base_energy = energy_Iinf(base, params);
  double bubbles = 0.0;
  for (const auto& l : rep.lumps)
    if (l.escaping) bubbles += l.energy;
  rep.splitting_defect = std::abs(rep.total_energy - rep.base_energy - bubbles);
  (void)det;
  return rep;
}

}  // namespace frachole
