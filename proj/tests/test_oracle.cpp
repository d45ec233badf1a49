#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hcav/oracle.hpp"
#include "series_oracle.hpp"

using namespace hcav;
using namespace hcav::oracle;

namespace {
const double kAlpha = std::sqrt(15.0 / 16.0);
}

TEST_CASE("shooting matches the Schrodinger series oracle, including positive energies") {
  for (double E : {-0.4, 0.7, 3.0, 9.0}) {
    for (int l : {0, 2}) {
      const double R = 2.0;
      auto s = shoot_schrodinger(E, l, R);
      auto ref = series::schrodinger_at(E, l, R);
      // compare the angle of (psi, psi') through a normalized cross product
      const double rp = static_cast<double>(ref.u / R), rd = static_cast<double>((ref.du - ref.u / R) / R);
      const double cross = (s.at_R.psi * rd - s.at_R.dpsi * rp) / (std::hypot(s.at_R.psi, s.at_R.dpsi) * std::hypot(rp, rd));
      CAPTURE(E);
      CAPTURE(l);
      CHECK(std::fabs(cross) < 1e-10);
    }
  }
}

TEST_CASE("shooting matches the Dirac series oracle") {
  for (double E : {0.3, 1.2, 2.5}) {
    for (int k : {-1, 1, -2}) {
      const double R = 5.0;
      auto s = shoot_dirac(E, k, kAlpha, R);
      auto ref = series::dirac_at(E, k, kAlpha, R);
      const double a = static_cast<double>(ref.a), b = static_cast<double>(ref.b);
      const double cross = (s.at_R.psi * b - s.at_R.psi_b * a) / (std::hypot(s.at_R.psi, s.at_R.psi_b) * std::hypot(a, b));
      CAPTURE(E);
      CAPTURE(k);
      // RK4 at the default step count resolves the oscillating high-energy case to ~1e-9
      CHECK(std::fabs(cross) < (E > 2 ? 1e-9 : 1e-10));
    }
  }
}

TEST_CASE("node count includes a zero sitting on the wall") {
  // the 2s function (1 - r/2) e^{-r/2} vanishes exactly at r = 2
  CHECK(shoot_schrodinger(-0.125, 0, 2.0).node_count == 1);
  CHECK(shoot_schrodinger(-0.125 - 1e-6, 0, 2.0).node_count == 0);
  CHECK(shoot_schrodinger(-0.5, 0, 10.0).node_count == 0);
}

TEST_CASE("property: node count and phase are monotone in the energy") {
  int last = -1;
  double last_phase = -1e300;
  for (int i = 0; i <= 200; ++i) {
    const double E = -2.0 + 0.15 * i;
    auto s = shoot_schrodinger(E, 1, 3.0);
    CHECK(s.node_count >= last);
    CHECK(s.phase > last_phase);
    last = s.node_count;
    last_phase = s.phase;
  }
  last = -1;
  for (int i = 0; i <= 60; ++i) {
    auto s = shoot_dirac(0.1 + 0.1 * i, -1, kAlpha, 4.0);
    CHECK(s.node_count >= last);
    last = s.node_count;
  }
}

TEST_CASE("property: step halving and start point barely move the wall ratio") {
  IntegratorConfig base, fine, later;
  fine.step_count = 2 * base.step_count;
  later.start_fraction = 1e-5;
  for (double E : {-0.3, 1.5}) {
    auto a = shoot_schrodinger(E, 1, 4.0, base);
    auto b = shoot_schrodinger(E, 1, 4.0, fine);
    auto c = shoot_schrodinger(E, 1, 4.0, later);
    CHECK(std::fabs(a.phase - b.phase) < 1e-10);
    CHECK(std::fabs(a.phase - c.phase) < 1e-9);
    auto d1 = shoot_dirac(E + 1.0, 1, kAlpha, 4.0, base);
    auto d2 = shoot_dirac(E + 1.0, 1, kAlpha, 4.0, fine);
    CHECK(std::fabs(d1.phase - d2.phase) < 1e-10);
  }
}

TEST_CASE("integrate_dr is exact for power laws including the piece below r0") {
  IntegratorConfig cfg;
  RadialGrid grid(3.0, cfg);
  std::vector<double> f(grid.nodes().size());
  for (size_t i = 0; i < f.size(); ++i) f[i] = grid.rho(i) * grid.rho(i);
  CHECK(integrate_dr(grid, f) == doctest::Approx(9.0).epsilon(1e-12));
  cfg.step_count = 1001;  // odd count uses the 3/8 tail
  RadialGrid odd(3.0, cfg);
  std::vector<double> g(odd.nodes().size());
  for (size_t i = 0; i < g.size(); ++i) g[i] = std::exp(-odd.rho(i));
  CHECK(integrate_dr(odd, g) == doctest::Approx(1 - std::exp(-3.0)).epsilon(1e-9));
}

TEST_CASE("count_nodes ignores tiny samples") {
  CHECK(count_nodes({1, 2, -1, -3, 4}) == 2);
  CHECK(count_nodes({1, 1e-14, -1e-14, 1}) == 0);
  CHECK(count_nodes({0, 0, 0}) == 0);
}

TEST_CASE("integrator configuration and Dirac domain checks") {
  IntegratorConfig c;
  c.method_order = 2;
  CHECK_THROWS(c.validate());
  c = {};
  c.step_count = 10;
  CHECK_THROWS(c.validate());
  CHECK_THROWS_AS(RadialSystem::dirac(0.5, 1, 1.2), std::domain_error);
}

TEST_CASE("matched shot determinant vanishes at an eigenvalue") {
  const auto sys = RadialSystem::schrodinger(-0.5, 0);
  RadialGrid grid(40.0, IntegratorConfig{});
  auto m = matched_shot(sys, grid, BoundaryCondition::dirichlet());
  CHECK(std::fabs(m.determinant) < 1e-9);
  auto off = matched_shot(RadialSystem::schrodinger(-0.45, 0), grid, BoundaryCondition::dirichlet());
  CHECK(std::fabs(off.determinant) > 1e-3);
}
