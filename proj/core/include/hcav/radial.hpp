#pragma once

// Closed-form radial solutions, boundary determinants and infinite-volume
// reference energies.

#include "hcav/oracle.hpp"
#include "hcav/problem.hpp"

namespace hcav::radial {

/// Regular Coulomb solution for eps < 0, normalized so that psi ~ rho^l at the
/// origin. Throws std::domain_error for eps >= 0.
RadialPoint schrodinger_closed_form(double eps, int l, double rho);

/// Robin shift that turns a Pauli channel into a Schrodinger one:
/// -l/R for j = l + 1/2, (l + 1)/R for j = l - 1/2.
double pauli_gamma_shift(int l, int j_sign, double radius);

/// Boundary pair actually imposed on the radial solution (the Pauli shift
/// applied, otherwise unchanged).
BoundaryCondition effective_boundary(const CavityProblem& p);

/// Normalized determinant (u psi + v psi') / |(psi, psi')| at R. Closed form
/// for eps < 0, shooting otherwise.
double boundary_fn_schrodinger(const CavityProblem& p, double eps,
                               const oracle::IntegratorConfig& cfg = {});
/// Same with the shifted Robin pair.
double boundary_fn_pauli(const CavityProblem& p, double eps,
                         const oracle::IntegratorConfig& cfg = {});
/// (u psi_A + v psi_B) / |(psi_A, psi_B)| at R, by shooting.
double boundary_fn_dirac(const CavityProblem& p, double eps,
                         const oracle::IntegratorConfig& cfg = {});
/// Dispatch on the problem's model.
double boundary_fn(const CavityProblem& p, double eps, const oracle::IntegratorConfig& cfg = {});

/// Closed-form determinant only (Schrodinger/Pauli, eps < 0).
double closed_form_determinant(const CavityProblem& p, double eps);

/// Laguerre form of the Robin quantization condition as a function of the
/// continuous principal number n > l (eps = -1/(2 n^2)):
///   u (n/2) L1 + v ((l n/(2R) - 1/2) L1 - L2),
/// L1 = L^{2l+1}_{n-l-1}(2R/n), L2 = L^{2l+2}_{n-l-2}(2R/n).
double quantization_residual_laguerre(const CavityProblem& p, double n);

/// Dirac-Coulomb bound state energy in units of M c^2. Channel label k < 0
/// requires n >= |k|, k > 0 requires n > |k|.
double dirac_energy_infinite(int n, int k, double alpha);

/// Order alpha^4 expansion of the Dirac energy.
double fine_structure_energy(int n, double j, double alpha);

/// Eigenvalue of A^2 for the Johnson-Lippmann operator. Depends only on |k|;
/// n >= |k| is accepted for either sign.
double jl_eigenvalue_sq(int n, int k, double alpha);

/// |k^2 (E^2 - 1) + alpha^2 - a^2| with E from dirac_energy_infinite.
double jl_identity_residual(int n, int k, double alpha);

}  // namespace hcav::radial
