#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hcav/eigensolve.hpp"
#include "hcav/radial.hpp"
#include "series_oracle.hpp"

using namespace hcav;
using namespace hcav::eigen;

namespace {

const double kAlpha = std::sqrt(15.0 / 16.0);
const EnergyWindow kWide{-200.0, 2000.0};

CavityProblem schr(int l, BoundaryCondition bc, double R) {
  return CavityProblem(UnitSystem::schrodinger(), Channel::schrodinger(l), bc, R);
}
CavityProblem dirac(int k, BoundaryCondition bc, double R) {
  return CavityProblem(UnitSystem::dirac(kAlpha), Channel::dirac(k), bc, R);
}

// m-th root of the wall condition from the quad-precision series.
double oracle_schrodinger(int l, double R, double gamma, bool dirichlet, int m, double lo, double hi) {
  std::function<series::quad(series::quad)> f = [&](series::quad E) {
    return series::schrodinger_bc(E, l, R, gamma, dirichlet);
  };
  return series::nth_root<series::quad>(f, lo, hi, m);
}

double oracle_dirac(int k, double R, double nu, bool wall_a, int m, double lo, double hi) {
  std::function<long double(long double)> f = [&](long double E) {
    auto s = series::dirac_at(E, k, kAlpha, R);
    return wall_a ? s.a : nu * s.a + s.b;
  };
  return series::nth_root<long double>(f, lo, hi, m);
}

}  // namespace

TEST_CASE("hydrogen spectrum is recovered in a large cavity") {
  auto s = scan_levels(schr(0, BoundaryCondition::dirichlet(), 40.0), EnergyWindow::defaults(Model::Schrodinger), 2);
  REQUIRE(s.levels.size() == 2);
  CHECK(std::fabs(s.levels[0].energy + 0.5) < 1e-8);
  CHECK(std::fabs(s.levels[1].energy + 0.125) < 1e-8);
  CHECK(s.levels[0].principal_label == 1);
  CHECK(s.levels[1].principal_label == 2);
  CHECK(to_string(s.levels[0].engine) == "both");
}

TEST_CASE("series oracle sanity: it reproduces the hydrogen ground state") {
  CHECK(oracle_schrodinger(0, 20.0, 0, true, 0, -0.7, -0.3) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(oracle_dirac(-1, 15.0, 0, true, 0, 0.05, 0.6) == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("R = 2 Dirichlet and Robin levels match the series oracle") {
  const auto D = BoundaryCondition::dirichlet();
  for (int l : {0, 2}) {
    for (int m = 0; m < 3 - l / 2; ++m) {
      const double ref = oracle_schrodinger(l, 2.0, 0, true, m, -1.0, 20.0);
      CAPTURE(l);
      CAPTURE(m);
      CHECK(std::fabs(find_level(schr(l, D, 2.0), m, kWide).energy - ref) < 1e-9);
    }
  }
  const auto G = BoundaryCondition::robin(1.0);
  for (int l : {0, 2}) {
    for (int m = 0; m < 3; ++m) {
      const double ref = oracle_schrodinger(l, 2.0, 1.0, false, m, -1.0, 20.0);
      CAPTURE(l);
      CAPTURE(m);
      CHECK(std::fabs(find_level(schr(l, G, 2.0), m, kWide).energy - ref) < 1e-9);
    }
  }
}

TEST_CASE("Dirac levels at R = 5 match the series oracle") {
  for (int k : {-1, 1, -2}) {
    for (double nu : {0.0, 1.5}) {
      auto lv = scan_levels(dirac(k, BoundaryCondition::dirac_nu(nu), 5.0), {-0.95, 6.0}, 2).levels;
      for (int m = 0; m < 2; ++m) {
        const double ref = oracle_dirac(k, 5.0, nu, false, m, -0.95, 6.0);
        CAPTURE(k);
        CAPTURE(nu);
        CHECK(std::fabs(lv[m].energy - ref) < 1e-9);
      }
    }
    auto lv = scan_levels(dirac(k, BoundaryCondition::dirichlet(), 5.0), {0.0, 6.0}, 2).levels;
    CHECK(std::fabs(lv[0].energy - oracle_dirac(k, 5.0, 0, true, 0, 0.0, 6.0)) < 1e-9);
  }
}

TEST_CASE("Pauli levels equal Schrodinger levels under the shifted Robin parameter") {
  const double R = 12.0, g = -1.0 / 12.0;
  CavityProblem p(UnitSystem::pauli(), Channel::pauli(1, -1), BoundaryCondition::robin(g), R);
  const double shifted = g + 2.0 / R;
  for (int m = 0; m < 3; ++m) {
    const double ref = oracle_schrodinger(1, R, shifted, false, m, -1.0, 1.0);
    CHECK(std::fabs(find_level(p, m, kWide).energy - ref) < 1e-9);
  }
}

TEST_CASE("property: levels are ordered by node count and the scan is complete") {
  for (double g : {HUGE_VAL, 0.0, -2.0, 3.0}) {
    auto p = schr(1, BoundaryCondition::robin(g), 3.0);
    auto lv = scan_levels(p, {-20.0, 60.0}, 0).levels;
    REQUIRE(!lv.empty());
    for (size_t i = 0; i < lv.size(); ++i) {
      if (i) CHECK(lv[i].energy > lv[i - 1].energy);
      if (i) CHECK(lv[i].node_count == lv[i - 1].node_count + 1);
      // the matched determinant brackets each refined energy
      const double d = 1e-9 * std::max(1.0, std::fabs(lv[i].energy));
      oracle::RadialGrid grid(3.0, {});
      auto det = [&](double e) {
        return oracle::matched_shot(oracle::RadialSystem::schrodinger(e, 1), grid, p.bc).determinant;
      };
      CHECK(det(lv[i].energy - d) * det(lv[i].energy + d) < 0.0);
    }
    // no level hides between consecutive ones: a finer independent scan agrees
    ScanOptions fine;
    fine.grid_points = 4000;
    CHECK(scan_levels(p, {-20.0, 60.0}, 0, fine).levels.size() == lv.size());
  }
}

TEST_CASE("window errors") {
  auto p = schr(0, BoundaryCondition::dirichlet(), 2.0);
  try {
    scan_levels(p, {-1.0, 5.0}, 4);
    FAIL("expected WindowTooSmall");
  } catch (const WindowTooSmall& e) {
    CHECK(e.requested() == 4);
    CHECK(e.partial().levels.size() == 2);
  }
  CHECK_THROWS_AS(find_level(p, 5, {-1.0, 5.0}), std::out_of_range);
  CHECK_THROWS(scan_levels(p, {1.0, -1.0}, 1));
}

TEST_CASE("eigenfunctions of one channel are orthogonal") {
  auto p = schr(0, BoundaryCondition::robin(-0.7), 3.0);
  auto lv = scan_levels(p, kWide, 4).levels;
  for (size_t i = 0; i < lv.size(); ++i) {
    for (size_t j = i + 1; j < lv.size(); ++j) CHECK(orthogonality_check(p, lv[i], lv[j]) < 1e-9);
  }
  auto d = dirac(1, BoundaryCondition::dirac_nu(0.0), 5.0);
  auto dl = scan_levels(d, {-0.95, 10.0}, 3).levels;
  CHECK(orthogonality_check(d, dl[0], dl[2]) < 1e-9);
}

TEST_CASE("property: sweeps are identical for any thread count") {
  auto p = schr(0, BoundaryCondition::neumann(), 1.0);
  std::vector<double> grid;
  for (int i = 0; i < 9; ++i) grid.push_back(1.0 + 0.5 * i);
  SweepOptions o;
  o.window = {-10.0, 100.0};
  o.max_levels = 3;
  auto a = sweep(p, SweepParameter::Radius, grid, o);
  o.threads = 4;
  auto b = sweep(p, SweepParameter::Radius, grid, o);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].levels.size() == b[i].levels.size());
    for (size_t k = 0; k < a[i].levels.size(); ++k) CHECK(a[i].levels[k].energy == b[i].levels[k].energy);
  }
  std::reverse(grid.begin(), grid.end());
  CHECK_THROWS(sweep(p, SweepParameter::Radius, grid, o));
}

TEST_CASE("sweep records per-point failures") {
  auto p = schr(0, BoundaryCondition::dirichlet(), 1.0);
  SweepOptions o;
  o.window = {-1.0, 10.0};
  o.nodes = {0, 1};
  auto pts = sweep(p, SweepParameter::Radius, {1.0, 8.0}, o);
  CHECK(!pts[0].error.empty());  // the node-1 level at R = 1 is far above 10
  CHECK(pts[1].error.empty());
  CHECK(pts[1].levels.size() == 2);
}

TEST_CASE("locate_degeneracy finds the Dirichlet crossing at R = 2") {
  const LevelRef a{Channel::schrodinger(0), 1}, b{Channel::schrodinger(2), 0};
  auto d = locate_degeneracy(schr(0, BoundaryCondition::dirichlet(), 1.0), a, b, Vary::Radius, 1.5, 3.0, kWide);
  CHECK(std::fabs(d.parameter - 2.0) < 1e-9);
  CHECK(std::fabs(d.splitting) < 1e-9);
}

TEST_CASE("locate_degeneracy in gamma, with and without a wrapping bracket") {
  const LevelRef a{Channel::schrodinger(0), 1}, b{Channel::schrodinger(2), 0};
  auto t = schr(0, BoundaryCondition::dirichlet(), 2.0);
  auto d = locate_degeneracy(t, a, b, Vary::Gamma, 0.5, 3.0, kWide);
  CHECK(std::fabs(d.parameter - 1.0) < 1e-8);
  auto w = locate_degeneracy(t, a, b, Vary::Gamma, 5.0, -50.0, kWide);  // passes through gamma = inf
  CHECK(std::isinf(w.parameter));
  CHECK(w.parameter > 0);
  CHECK(std::fabs(w.splitting) < 1e-9);
  CHECK_THROWS_AS(locate_degeneracy(t, a, b, Vary::Gamma, 2.0, 4.0, kWide), NoSignChange);
}

TEST_CASE("boundary_from_angle covers the Robin and Dirac families") {
  CHECK(boundary_from_angle(Model::Schrodinger, 1.5707963267948966, 3.0) == BoundaryCondition::dirichlet());
  CHECK(boundary_from_angle(Model::Schrodinger, 0.0, 3.0) == BoundaryCondition::neumann());
  CHECK(boundary_from_angle(Model::Schrodinger, std::atan(2.0), 2.0).gamma() == doctest::Approx(1.0));
  CHECK(boundary_from_angle(Model::Dirac, std::atan(0.5), 2.0).gamma() == doctest::Approx(0.5));
}
