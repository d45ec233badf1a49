#pragma once

// Runge-Lenz raising operators on radial profiles, remnant degeneracy
// predictions and the Dirac lifting check.

#include <optional>
#include <utility>
#include <vector>

#include "hcav/eigensolve.hpp"
#include "hcav/problem.hpp"

namespace hcav::symmetry {

/// Radial samples with derivatives.
struct RadialProfile {
  std::vector<double> r;
  std::vector<double> psi;
  std::vector<double> dpsi;
};

RadialProfile profile_from(const oracle::Trajectory& tr);

/// chi = (l+1) psi' + (1 - l(l+1)/r) psi in channel l+1; chi' uses the radial
/// equation for psi''.
RadialProfile runge_lenz_raise(const RadialProfile& psi, int l, double eps);

/// Two raising steps, landing in channel l+2.
RadialProfile runge_lenz_raise2(const RadialProfile& psi, int l, double eps);

/// gamma chi(R) + chi'(R) predicted for an eigenstate with value psi_R at the
/// wall: (l+1) [-gamma (gamma - 2/R) + l(l+2)/R^2 - 2/R - 2 eps] psi_R.
/// Finite gamma only.
double rl_boundary_residual_closed_form(const CavityProblem& p, double eps, double psi_R);

/// Same quantity from a raised profile.
double rl_boundary_residual_numeric(const CavityProblem& p, const RadialProfile& chi);

/// How far chi is from satisfying the boundary condition, relative to its
/// size near the wall: |chi(R)| / max|chi| on [R/2, R] for Dirichlet, and
/// |u chi(R) + v chi'(R)| / max |(chi, chi')| on [R/2, R] otherwise.
double reentry_residual(const BoundaryCondition& bc, const RadialProfile& chi);

struct DegeneracyPrediction {
  Model model = Model::Schrodinger;
  int l = 0;
  std::optional<double> j_in;
  std::optional<double> j_out;
  double radius = 0.0;
  std::vector<double> gamma_options;  // +inf encodes Dirichlet
};

DegeneracyPrediction predict_degeneracy_schrodinger(int l);

struct Impossible {
  int l;
  double j_in;
  double j_out;
};

/// j_in = l + j_in_sign/2, j_out = l + 2 + j_out_sign/2.
struct PauliPrediction {
  std::optional<DegeneracyPrediction> prediction;
  std::optional<Impossible> impossible;
  bool possible() const { return prediction.has_value(); }
};
PauliPrediction predict_degeneracy_pauli(int l, int j_in_sign, int j_out_sign);

/// Both roots nu of alpha (nu^2 + 1) / (2 nu) = k, larger first.
std::pair<double, double> dirac_nu_condition(int k, double alpha);

struct DiracLifting {
  double e_minus;  // channel -|k|
  double e_plus;   // channel +|k|
  double splitting;
};

/// Lowest pair of levels with principal label |k| + 1 in channels -|k| and
/// +|k| under the boundary nu*psi_A + psi_B = 0.
DiracLifting verify_dirac_lifting(double alpha, int k, double radius, double nu,
                                  const eigen::ScanOptions& opts = {});

}  // namespace hcav::symmetry
