#include "hcav/radial.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "hcav/specfun.hpp"

namespace hcav::radial {
namespace {

double normalized(double u, double v, double a, double b) {
  double n = std::hypot(a, b);
  if (n == 0.0 || !std::isfinite(n)) throw std::runtime_error("boundary determinant: degenerate solution");
  return (u * (a / n) + v * (b / n));
}

void require_schrodinger_like(const CavityProblem& p, const char* what) {
  if (p.model() == Model::Dirac) throw std::invalid_argument(std::string(what) + ": Dirac problem");
}

double shooting_determinant(const CavityProblem& p, const BoundaryCondition& bc, double eps,
                            const oracle::IntegratorConfig& cfg) {
  oracle::RadialGrid grid(p.radius, cfg);
  auto sys = oracle::RadialSystem::for_problem(p, eps);
  auto r = oracle::shoot(sys, grid);
  if (sys.is_dirac()) return normalized(bc.u(), bc.v(), r.at_R.psi, r.at_R.psi_b);
  return normalized(bc.u(), bc.v(), r.at_R.psi, r.at_R.dpsi);
}

double closed_or_shoot(const CavityProblem& p, const BoundaryCondition& bc, double eps,
                       const oracle::IntegratorConfig& cfg) {
  if (eps < 0.0) {
    try {
      RadialPoint pt = schrodinger_closed_form(eps, p.channel.l(), p.radius);
      if (std::isfinite(pt.psi) && std::isfinite(pt.dpsi)) {
        return normalized(bc.u(), bc.v(), pt.psi, pt.dpsi);
      }
    } catch (const std::domain_error&) {
      // |z| beyond the series bound; fall through to shooting
    }
  }
  return shooting_determinant(p, bc, eps, cfg);
}

}  // namespace

RadialPoint schrodinger_closed_form(double eps, int l, double rho) {
  if (!(eps < 0.0)) throw std::domain_error("closed form needs eps < 0");
  if (!(rho > 0.0)) throw std::invalid_argument("closed form needs rho > 0");
  if (l < 0) throw std::invalid_argument("closed form needs l >= 0");
  const double n = 1.0 / std::sqrt(-2.0 * eps);
  const double a = l + 1.0 - n;
  const double b = 2.0 * l + 2.0;
  const double z = 2.0 * rho / n;
  const double pre = std::pow(rho, l) * std::exp(-rho / n);
  const double m0 = specfun::kummer_m(a, b, z);
  const double m1 = specfun::kummer_m(a + 1.0, b + 1.0, z);
  RadialPoint p;
  p.r = rho;
  p.psi = pre * m0;
  p.dpsi = p.psi * (l / rho - 1.0 / n) + pre * (2.0 / n) * (a / b) * m1;
  return p;
}

double pauli_gamma_shift(int l, int j_sign, double radius) {
  if (j_sign == 1) return -static_cast<double>(l) / radius;
  if (j_sign == -1) return (l + 1.0) / radius;
  throw std::invalid_argument("pauli_gamma_shift: j_sign must be +-1");
}

BoundaryCondition effective_boundary(const CavityProblem& p) {
  if (p.model() != Model::Pauli) return p.bc;
  return p.bc.shifted(pauli_gamma_shift(p.channel.l(), p.channel.j_sign(), p.radius));
}

double boundary_fn_schrodinger(const CavityProblem& p, double eps, const oracle::IntegratorConfig& cfg) {
  if (p.model() != Model::Schrodinger) throw std::invalid_argument("boundary_fn_schrodinger: wrong model");
  return closed_or_shoot(p, p.bc, eps, cfg);
}

double boundary_fn_pauli(const CavityProblem& p, double eps, const oracle::IntegratorConfig& cfg) {
  if (p.model() != Model::Pauli) throw std::invalid_argument("boundary_fn_pauli: wrong model");
  return closed_or_shoot(p, effective_boundary(p), eps, cfg);
}

double boundary_fn_dirac(const CavityProblem& p, double eps, const oracle::IntegratorConfig& cfg) {
  if (p.model() != Model::Dirac) throw std::invalid_argument("boundary_fn_dirac: wrong model");
  return shooting_determinant(p, p.bc, eps, cfg);
}

double boundary_fn(const CavityProblem& p, double eps, const oracle::IntegratorConfig& cfg) {
  switch (p.model()) {
    case Model::Schrodinger:
      return boundary_fn_schrodinger(p, eps, cfg);
    case Model::Pauli:
      return boundary_fn_pauli(p, eps, cfg);
    case Model::Dirac:
      return boundary_fn_dirac(p, eps, cfg);
  }
  throw std::logic_error("boundary_fn: unknown model");
}

double closed_form_determinant(const CavityProblem& p, double eps) {
  require_schrodinger_like(p, "closed_form_determinant");
  BoundaryCondition bc = effective_boundary(p);
  RadialPoint pt = schrodinger_closed_form(eps, p.channel.l(), p.radius);
  return normalized(bc.u(), bc.v(), pt.psi, pt.dpsi);
}

double quantization_residual_laguerre(const CavityProblem& p, double n) {
  require_schrodinger_like(p, "quantization_residual_laguerre");
  const int l = p.channel.l();
  if (!(n > l)) throw std::domain_error("quantization_residual_laguerre: need n > l");
  BoundaryCondition bc = effective_boundary(p);
  const double R = p.radius;
  const double x = 2.0 * R / n;
  const double l1 = specfun::laguerre_general(n - l - 1.0, 2.0 * l + 1.0, x);
  const double l2 = specfun::laguerre_general(n - l - 2.0, 2.0 * l + 2.0, x);
  return bc.u() * 0.5 * n * l1 + bc.v() * ((l * n / (2.0 * R) - 0.5) * l1 - l2);
}

double dirac_energy_infinite(int n, int k, double alpha) {
  if (k == 0) throw std::invalid_argument("dirac_energy_infinite: k must be nonzero");
  const int ak = std::abs(k);
  if (n < 1 || n < ak || (k > 0 && n == ak)) {
    throw std::invalid_argument("dirac_energy_infinite: invalid (n, k) combination");
  }
  if (!(alpha > 0.0 && alpha < ak)) throw std::domain_error("dirac_energy_infinite: need 0 < alpha < |k|");
  const double s = std::sqrt(static_cast<double>(ak) * ak - alpha * alpha);
  const double d = n - ak + s;
  return 1.0 / std::sqrt(1.0 + alpha * alpha / (d * d));
}

double fine_structure_energy(int n, double j, double alpha) {
  if (n < 1) throw std::invalid_argument("fine_structure_energy: n must be >= 1");
  double twice = 2.0 * j;
  if (!(j > 0.0) || std::floor(twice) != twice || static_cast<long>(twice) % 2 != 1) {
    throw std::invalid_argument("fine_structure_energy: j must be a positive half-integer");
  }
  if (j + 0.5 > n) throw std::invalid_argument("fine_structure_energy: need j + 1/2 <= n");
  if (!(alpha >= 0.0)) throw std::invalid_argument("fine_structure_energy: alpha must be >= 0");
  const double a2 = alpha * alpha;
  const double nn = n;
  return 1.0 - a2 / (2.0 * nn * nn) - a2 * a2 / (2.0 * nn * nn * nn) * (1.0 / (j + 0.5) - 3.0 / (4.0 * nn));
}

double jl_eigenvalue_sq(int n, int k, double alpha) {
  if (k == 0) throw std::invalid_argument("jl_eigenvalue_sq: k must be nonzero");
  const int ak = std::abs(k);
  if (n < ak) throw std::invalid_argument("jl_eigenvalue_sq: need n >= |k|");
  if (!(alpha > 0.0 && alpha < ak)) throw std::domain_error("jl_eigenvalue_sq: need 0 < alpha < |k|");
  const double s = std::sqrt(static_cast<double>(ak) * ak - alpha * alpha);
  const double d = n - ak;
  // (d + s)^2 + alpha^2 = d^2 + 2 d s + k^2, so the numerator carries an
  // explicit factor d and vanishes exactly for n = |k|.
  const double den = d * d + 2.0 * d * s + static_cast<double>(ak) * ak;
  return alpha * alpha * d * (d + 2.0 * s) / den;
}

double jl_identity_residual(int n, int k, double alpha) {
  const int ak = std::abs(k);
  const double e = dirac_energy_infinite(n, -ak, alpha);
  const double lhs = static_cast<double>(ak) * ak * (e * e - 1.0) + alpha * alpha;
  return std::fabs(lhs - jl_eigenvalue_sq(n, k, alpha));
}

}  // namespace hcav::radial
