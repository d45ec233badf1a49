#pragma once

// Fixed-step shooting integrator for the radial Schrodinger and Dirac
// equations. Works on a uniform grid in x = ln(r) from r0 = start_fraction * R
// to R with classical RK4, and tracks the Prufer angle of the solution so that
// eigenvalue counts below a given energy are exact integers.

#include <vector>

#include "hcav/problem.hpp"

namespace hcav::oracle {

struct IntegratorConfig {
  int step_count = 20000;
  double start_fraction = 1e-6;
  int method_order = 4;

  void validate() const;
};

/// Log-radial grid r_i = r0 * exp(i h), i = 0..n, with r_n = R.
class RadialGrid {
 public:
  RadialGrid(double radius, const IntegratorConfig& cfg);

  int steps() const { return steps_; }
  double h() const { return h_; }
  double radius() const { return rho_.back(); }
  double rho(int i) const { return rho_[i]; }
  double rho_mid(int i) const { return mid_[i]; }
  const std::vector<double>& nodes() const { return rho_; }

 private:
  int steps_;
  double h_;
  std::vector<double> rho_;
  std::vector<double> mid_;
};

/// Linear first-order system dy/dx = A(r) y on the log grid.
///
/// Schrodinger: y = (u, r u') with u = r psi.
/// Dirac:       y = (r psi_A, r psi_B).
class RadialSystem {
 public:
  static RadialSystem schrodinger(double eps, int l);
  /// k is the channel label (k < 0 holds the nodeless ground state).
  static RadialSystem dirac(double eps, int k, double alpha);
  static RadialSystem for_problem(const CavityProblem& p, double eps);

  bool is_dirac() const { return dirac_; }
  double energy() const { return eps_; }

  struct Matrix {
    double a00, a01, a10, a11;
  };
  Matrix coefficients(double rho) const;

  /// Regular solution near the origin from a truncated Frobenius series.
  void frobenius_start(double rho, double& y0, double& y1) const;

  /// Coefficients (c0, c1) with c0*y0 + c1*y1 = 0 at R equivalent to bc.
  void boundary_coefficients(const BoundaryCondition& bc, double radius, double& c0,
                             double& c1) const;

  RadialPoint to_point(double rho, double y0, double y1) const;

 private:
  bool dirac_ = false;
  double eps_ = 0.0;
  int l_ = 0;
  int kappa_ = 0;  // sign-flipped channel label entering the Dirac radial system
  double alpha_ = 0.0;
  double s_ = 0.0;
};

struct ShootResult {
  RadialPoint at_R;
  /// Zeros of the first component in (r0, R]; a zero sitting on R counts.
  int node_count = 0;
  /// Continuous Prufer angle of (y0, y1) at R; increases with the energy.
  double phase = 0.0;
  /// log of the accumulated rescaling applied to keep |y| bounded.
  double log_scale = 0.0;
};

/// Solution samples on every grid node, all on a common scale.
struct Trajectory {
  std::vector<double> r;
  std::vector<double> psi;
  std::vector<double> dpsi;
  std::vector<double> psi_b;
  std::vector<double> y0;
  std::vector<double> y1;
};

ShootResult shoot(const RadialSystem& sys, const RadialGrid& grid, Trajectory* record = nullptr);

ShootResult shoot_schrodinger(double eps, int l, double radius, const IntegratorConfig& cfg = {});
ShootResult shoot_dirac(double eps, int k, double alpha, double radius,
                        const IntegratorConfig& cfg = {});

/// Prufer angle modulo pi selected by the boundary condition, in (0, pi].
double boundary_phase(const RadialSystem& sys, const BoundaryCondition& bc, double radius);

/// Two-sided evaluation: outward from the origin and inward from R (starting on
/// the boundary condition), matched at the outer classical turning point.
struct MatchedShot {
  /// Normalized Wronskian sin(theta_out - theta_in) at the matching node.
  double determinant = 0.0;
  int match_index = 0;
};
MatchedShot matched_shot(const RadialSystem& sys, const RadialGrid& grid,
                         const BoundaryCondition& bc, Trajectory* record = nullptr);

/// Sign changes of the first component strictly inside (r0, R), ignoring
/// samples below rel_floor * max|y0|.
int count_nodes(const std::vector<double>& values, double rel_floor = 1e-10);

/// Composite Simpson rule for the integral of f(r) dr over the grid, given f at
/// every node (uses the 3/8 rule on the tail when the step count is odd). The
/// piece below r0 is added assuming a power law there.
double integrate_dr(const RadialGrid& grid, const std::vector<double>& f);

}  // namespace hcav::oracle
