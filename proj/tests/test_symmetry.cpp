#include <cmath>

#include "doctest.h"
#include "hcav/symmetry.hpp"

using namespace hcav;
using namespace hcav::symmetry;

namespace {

const double kAlpha = std::sqrt(15.0 / 16.0);

RadialProfile sample(double (*f)(double), double (*df)(double)) {
  RadialProfile p;
  for (int i = 1; i <= 400; ++i) {
    double r = 0.05 * i;
    p.r.push_back(r);
    p.psi.push_back(f(r));
    p.dpsi.push_back(df(r));
  }
  return p;
}

double s1(double r) { return std::exp(-r); }
double ds1(double r) { return -std::exp(-r); }
double s2(double r) { return (1 - r / 2) * std::exp(-r / 2); }
double ds2(double r) { return (-1 + r / 4) * std::exp(-r / 2); }
double s3(double r) { return (1 - 2 * r / 3 + 2 * r * r / 27) * std::exp(-r / 3); }
double ds3(double r) { return (-2.0 / 3 + 4 * r / 27) * std::exp(-r / 3) - s3(r) / 3; }

// constant ratio of a profile to a reference shape
double spread(const RadialProfile& p, double (*shape)(double)) {
  double lo = 1e300, hi = -1e300;
  for (size_t i = 0; i < p.r.size(); ++i) {
    double q = p.psi[i] / shape(p.r[i]);
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  return (hi - lo) / std::max(std::fabs(hi), std::fabs(lo));
}

double p2(double r) { return r * std::exp(-r / 2); }
double d3(double r) { return r * r * std::exp(-r / 3); }

}  // namespace

TEST_CASE("raising operator maps hydrogen states within their shell") {
  CHECK(spread(runge_lenz_raise(sample(s2, ds2), 0, -0.125), p2) < 1e-12);
  // cancellation near the origin, where the target vanishes like r^2
  CHECK(spread(runge_lenz_raise2(sample(s3, ds3), 0, -1.0 / 18.0), d3) < 1e-9);
  // the 1s state is the top of its shell
  auto chi = runge_lenz_raise(sample(s1, ds1), 0, -0.5);
  for (double v : chi.psi) CHECK(std::fabs(v) < 1e-15);
}

TEST_CASE("raising operator input checks") {
  RadialProfile bad;
  CHECK_THROWS(runge_lenz_raise(bad, 0, -0.5));
  CHECK_THROWS(runge_lenz_raise(sample(s1, ds1), -1, -0.5));
}

TEST_CASE("closed-form boundary residual matches the raised profile") {
  for (double g : {-0.5, 0.0, 1.0}) {
    for (int l : {0, 1}) {
      CavityProblem p(UnitSystem::schrodinger(), Channel::schrodinger(l), BoundaryCondition::robin(g), 4.0);
      auto lev = eigen::find_level(p, 1, {-50.0, 500.0});
      auto prof = profile_from(eigen::eigenfunction(p, lev));
      const double num = rl_boundary_residual_numeric(p, runge_lenz_raise(prof, l, lev.energy));
      const double cf = rl_boundary_residual_closed_form(p, lev.energy, prof.psi.back());
      CHECK(std::fabs(num - cf) < 1e-8 * (std::fabs(cf) + std::fabs(prof.psi.back())));
    }
  }
  CavityProblem d(UnitSystem::schrodinger(), Channel::schrodinger(0), BoundaryCondition::dirichlet(), 2.0);
  CHECK_THROWS(rl_boundary_residual_closed_form(d, -0.1, 1.0));
}

TEST_CASE("double raise re-enters the boundary family only at the predicted radius") {
  auto pred = predict_degeneracy_schrodinger(0);
  CHECK(pred.radius == 2.0);
  REQUIRE(pred.gamma_options.size() == 2);
  CHECK(std::isinf(pred.gamma_options[0]));
  CHECK(pred.gamma_options[1] == 1.0);
  for (double g : pred.gamma_options) {
    for (double R : {2.0, 2.2}) {
      CavityProblem p(UnitSystem::schrodinger(), Channel::schrodinger(0), BoundaryCondition::robin(g), R);
      auto lev = eigen::find_level(p, 1, {-50.0, 500.0});
      auto chi = runge_lenz_raise2(profile_from(eigen::eigenfunction(p, lev)), 0, lev.energy);
      const double res = reentry_residual(p.bc, chi);
      if (R == 2.0) {
        CHECK(res < 1e-9);
      } else {
        CHECK(res > 1e-4);
      }
    }
  }
}

TEST_CASE("Pauli predictions") {
  auto a = predict_degeneracy_pauli(1, 1, 1);
  REQUIRE(a.possible());
  CHECK(a.prediction->radius == doctest::Approx(42.0 / 5.0));
  CHECK(a.prediction->gamma_options[0] == doctest::Approx(-1.0 / 12.0));
  CHECK(a.prediction->gamma_options[1] == doctest::Approx(0.5));
  auto b = predict_degeneracy_pauli(1, -1, 1);
  CHECK(b.prediction->radius == doctest::Approx(12.0));
  CHECK(b.prediction->gamma_options[0] == doctest::Approx(-1.0 / 12.0));
  auto c = predict_degeneracy_pauli(1, -1, -1);
  CHECK(c.prediction->radius == doctest::Approx(18.0 / 5.0));
  for (int l = 0; l <= 3; ++l) {
    auto imp = predict_degeneracy_pauli(l, 1, -1);
    CHECK(!imp.possible());
    REQUIRE(imp.impossible.has_value());
    CHECK(imp.impossible->j_in == l + 0.5);
    CHECK(imp.impossible->j_out == l + 1.5);
  }
  CHECK_THROWS(predict_degeneracy_pauli(0, -1, 1));
  CHECK_THROWS(predict_degeneracy_pauli(1, 2, 1));
}

TEST_CASE("Dirac nu condition") {
  for (int k : {1, -1, 2, -3}) {
    auto [big, small] = dirac_nu_condition(k, kAlpha);
    CHECK(big * small == doctest::Approx(1.0));
    CHECK(std::fabs(big) >= std::fabs(small));
    for (double nu : {big, small}) CHECK(kAlpha * (nu * nu + 1) / (2 * nu) == doctest::Approx(k));
  }
  auto r = dirac_nu_condition(1, kAlpha);
  CHECK(r.first == doctest::Approx(1.25 / kAlpha));
  CHECK_THROWS(dirac_nu_condition(0, kAlpha));
  CHECK_THROWS(dirac_nu_condition(1, 1.5));
}

TEST_CASE("Dirac pair degenerate in a large cavity, lifted in a small one") {
  auto far = verify_dirac_lifting(kAlpha, 1, 60.0, INFINITY);
  CHECK(far.splitting < 1e-6);
  CHECK(far.e_minus == doctest::Approx(std::sqrt(5.0 / 8.0)).epsilon(1e-9));
  auto near = verify_dirac_lifting(kAlpha, 1, 5.0, 0.0);
  CHECK(near.splitting > 1e-4);
}
