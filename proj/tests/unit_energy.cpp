#include <cmath>
#include <random>

#include "doctest.h"
#include "frachole/energy.hpp"

using namespace frachole;

namespace {

struct Setup {
  GridSpec grid = make_grid(2, 8.0, 32);
  ProblemParams prm;
  DomainMask mask;
  Setup() {
    prm.dim = 2;
    prm.s = 0.5;
    prm.p = 3.0;
    prm.rho = 0.5;
    prm.r = 4.0;
    mask = build_domain(grid, prm);
  }
  Field masked_bump(unsigned seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(-2.5, 2.5);
    std::uniform_real_distribution<double> width(3.0 * grid.spacing(), 1.2);
    Field u(grid);
    for (int b = 0; b < 2; ++b) {
      const double cx = pos(rng), cy = 4.0 + pos(rng), w = width(rng);
      for (int i = 0; i < grid.points_per_dim; ++i)
        for (int j = 0; j < grid.points_per_dim; ++j) {
          const double x = grid.coord(i), y = grid.coord(j);
          u.at(i, j) += std::exp(-((x - cx) * (x - cx) + (y - cy) * (y - cy)) / (2 * w * w));
        }
    }
    return apply_mask(u, mask);
  }
};

}  // namespace

TEST_CASE("level_from_norm arithmetic") {
  CHECK(level_from_norm(1.0, 4.0) == doctest::Approx(0.25));
  CHECK(level_from_norm(0.0, 3.0) == 0.0);
  CHECK_THROWS_AS(level_from_norm(1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(level_from_norm(-1.0, 3.0), std::invalid_argument);

  // strictly monotone on an increasing sample
  double prev = -1.0;
  for (int k = 1; k <= 100; ++k) {
    const double v = level_from_norm(0.05 * k, 3.0);
    CHECK(v > prev);
    prev = v;
  }

  // p = 3 window: the level ratio is (2^{1/3})^3 = 2
  const LevelWindow w = level_window(1.7, 3.0);
  CHECK(w.upper / w.lower == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(w.lower < w.upper);
}

TEST_CASE("energy functionals agree on X_0^s and vanish at zero") {
  const Setup st;
  const Field z(st.grid);
  CHECK(energy_I(z, st.mask, st.prm) == 0.0);
  CHECK(energy_Iinf(z, st.prm) == 0.0);

  const Field u = st.masked_bump(5);
  CHECK(energy_I(u, st.mask, st.prm) ==
        doctest::Approx(energy_Iinf(u, st.prm)).epsilon(1e-14));
}

TEST_CASE("energy_Iinf is exactly translation invariant in deterministic mode") {
  const Setup st;
  const Field u = st.masked_bump(6);
  const Field ut = translate(u, {7, -9});
  CHECK(energy_Iinf(ut, st.prm) == energy_Iinf(u, st.prm));
}

TEST_CASE("nehari projection") {
  const Setup st;
  const Field u = st.masked_bump(7);
  const Field n = nehari_project(u, st.mask, st.prm);

  const EnergyBreakdown b = restricted_norm_sq(n, st.mask, st.prm.s, st.prm.p, true);
  CHECK(std::abs(b.norm_sq - b.lp_p) / b.norm_sq < 1e-10);

  // fixed point and scale invariance
  const Field again = nehari_project(n, st.mask, st.prm);
  for (std::size_t i = 0; i < n.values.size(); ++i)
    CHECK(again.values[i] == doctest::Approx(n.values[i]).epsilon(1e-12));
  Field three = u;
  for (auto& v : three.values) v *= 3.0;
  const Field n3 = nehari_project(three, st.mask, st.prm);
  for (std::size_t i = 0; i < n.values.size(); ++i)
    CHECK(n3.values[i] == doctest::Approx(n.values[i]).epsilon(1e-12));

  // on the Nehari set, I = (1/2 - 1/p) ||u||^2
  CHECK(energy_I(n, st.mask, st.prm) ==
        doctest::Approx((0.5 - 1.0 / st.prm.p) * b.norm_sq).epsilon(1e-12));

  const Field z(st.grid);
  CHECK_THROWS_AS(nehari_project(z, st.mask, st.prm), std::invalid_argument);
}

TEST_CASE("grad_I matches central finite differences") {
  const Setup st;
  const double eps = 1e-5;
  for (unsigned seed = 0; seed < 10; ++seed) {
    const Field u = st.masked_bump(100 + seed);
    const Field v = st.masked_bump(200 + seed);
    const Field g = grad_I(u, st.mask, st.prm);
    Field up = u, dn = u;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
      up.values[i] += eps * v.values[i];
      dn.values[i] -= eps * v.values[i];
    }
    const double fd =
        (energy_I(up, st.mask, st.prm) - energy_I(dn, st.mask, st.prm)) / (2 * eps);
    double dot = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) dot += g.values[i] * v.values[i];
    dot *= st.grid.cell_measure();
    CHECK(std::abs(fd - dot) / std::max(std::abs(dot), 1e-12) < 1e-4);
  }

  const Field z(st.grid);
  const Field gz = grad_I(z, st.mask, st.prm);
  for (double x : gz.values) CHECK(x == 0.0);
}
