#include "hcav/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hcav::symmetry {
namespace {

void check_profile(const RadialProfile& p) {
  if (p.r.empty() || p.psi.size() != p.r.size() || p.dpsi.size() != p.r.size()) {
    throw std::invalid_argument("radial profile: inconsistent sample arrays");
  }
  if (!(p.r.front() > 0.0)) throw std::invalid_argument("radial profile: radii must be positive");
}

void require_finite_gamma(const BoundaryCondition& bc) {
  if (bc.is_dirichlet()) {
    throw std::invalid_argument("Runge-Lenz boundary residual: Dirichlet needs the chi(R) form");
  }
}

}  // namespace

RadialProfile profile_from(const oracle::Trajectory& tr) { return {tr.r, tr.psi, tr.dpsi}; }

RadialProfile runge_lenz_raise(const RadialProfile& psi, int l, double eps) {
  check_profile(psi);
  if (l < 0) throw std::invalid_argument("runge_lenz_raise: l must be >= 0");
  const double ll = l * (l + 1.0);
  RadialProfile out;
  out.r = psi.r;
  out.psi.resize(psi.r.size());
  out.dpsi.resize(psi.r.size());
  for (size_t i = 0; i < psi.r.size(); ++i) {
    const double r = psi.r[i];
    const double f = psi.psi[i];
    const double df = psi.dpsi[i];
    const double d2f = -2.0 * df / r + ll * f / (r * r) - 2.0 * f / r - 2.0 * eps * f;
    const double c = 1.0 - ll / r;
    out.psi[i] = (l + 1.0) * df + c * f;
    out.dpsi[i] = (l + 1.0) * d2f + ll * f / (r * r) + c * df;
  }
  return out;
}

RadialProfile runge_lenz_raise2(const RadialProfile& psi, int l, double eps) {
  return runge_lenz_raise(runge_lenz_raise(psi, l, eps), l + 1, eps);
}

double rl_boundary_residual_closed_form(const CavityProblem& p, double eps, double psi_R) {
  if (p.model() != Model::Schrodinger) throw std::invalid_argument("rl residual: Schrodinger channel required");
  require_finite_gamma(p.bc);
  const double g = p.bc.gamma();
  const double R = p.radius;
  const int l = p.channel.l();
  const double bracket = -g * (g - 2.0 / R) + l * (l + 2.0) / (R * R) - 2.0 / R - 2.0 * eps;
  return (l + 1.0) * bracket * psi_R;
}

double rl_boundary_residual_numeric(const CavityProblem& p, const RadialProfile& chi) {
  check_profile(chi);
  require_finite_gamma(p.bc);
  return p.bc.gamma() * chi.psi.back() + chi.dpsi.back();
}

double reentry_residual(const BoundaryCondition& bc, const RadialProfile& chi) {
  check_profile(chi);
  const double R = chi.r.back();
  double scale = 0.0;
  for (size_t i = 0; i < chi.r.size(); ++i) {
    if (chi.r[i] < 0.5 * R) continue;
    scale = std::max(scale, bc.is_dirichlet() ? std::fabs(chi.psi[i]) : std::hypot(chi.psi[i], chi.dpsi[i]));
  }
  if (!(scale > 0.0)) throw std::runtime_error("reentry_residual: profile vanishes near the wall");
  if (bc.is_dirichlet()) return std::fabs(chi.psi.back()) / scale;
  return std::fabs(bc.u() * chi.psi.back() + bc.v() * chi.dpsi.back()) / scale;
}

DegeneracyPrediction predict_degeneracy_schrodinger(int l) {
  if (l < 0) throw std::invalid_argument("predict_degeneracy_schrodinger: l must be >= 0");
  DegeneracyPrediction d;
  d.model = Model::Schrodinger;
  d.l = l;
  d.radius = (l + 1.0) * (l + 2.0);
  d.gamma_options = {INFINITY, 2.0 / d.radius};
  return d;
}

PauliPrediction predict_degeneracy_pauli(int l, int j_in_sign, int j_out_sign) {
  if (l < 0) throw std::invalid_argument("predict_degeneracy_pauli: l must be >= 0");
  if (std::abs(j_in_sign) != 1 || std::abs(j_out_sign) != 1) {
    throw std::invalid_argument("predict_degeneracy_pauli: signs must be +-1");
  }
  if (l == 0 && j_in_sign == -1) throw std::invalid_argument("predict_degeneracy_pauli: l = 0 has only j = 1/2");
  const double j_in = l + 0.5 * j_in_sign;
  const double j_out = l + 2 + 0.5 * j_out_sign;
  const double a = (l + 1.0) * (l + 2.0);
  PauliPrediction out;
  if (j_in_sign == 1 && j_out_sign == -1) {
    out.impossible = Impossible{l, j_in, j_out};
    return out;
  }
  DegeneracyPrediction d;
  d.model = Model::Pauli;
  d.l = l;
  d.j_in = j_in;
  d.j_out = j_out;
  if (j_in_sign == 1) {
    d.radius = a * (2.0 * l + 5.0) / (2.0 * l + 3.0);
    d.gamma_options = {-1.0 / (2.0 * a), 1.0 / (l + 1.0)};
  } else if (j_out_sign == 1) {
    d.radius = 2.0 * a;
    d.gamma_options = {-1.0 / d.radius, 3.0 / d.radius};
  } else {
    d.radius = a * (2.0 * l + 1.0) / (2.0 * l + 3.0);
    d.gamma_options = {-1.0 / (2.0 * a), -1.0 / (l + 2.0)};
  }
  out.prediction = d;
  return out;
}

std::pair<double, double> dirac_nu_condition(int k, double alpha) {
  if (k == 0) throw std::invalid_argument("dirac_nu_condition: k must be nonzero");
  if (!(alpha > 0.0)) throw std::invalid_argument("dirac_nu_condition: alpha must be positive");
  if (!(alpha < std::abs(k))) throw std::domain_error("dirac_nu_condition: need alpha < |k|");
  const double s = std::sqrt(static_cast<double>(k) * k - alpha * alpha);
  // Product of the roots is 1; take the well-conditioned one first.
  const double big = (k + (k > 0 ? s : -s)) / alpha;
  const double small = 1.0 / big;
  if (std::fabs(big) >= std::fabs(small)) return {big, small};
  return {small, big};
}

DiracLifting verify_dirac_lifting(double alpha, int k, double radius, double nu, const eigen::ScanOptions& opts) {
  if (k == 0) throw std::invalid_argument("verify_dirac_lifting: k must be nonzero");
  const int ak = std::abs(k);
  const BoundaryCondition bc = BoundaryCondition::dirac_nu(nu);
  const UnitSystem units = UnitSystem::dirac(alpha);
  const auto window = eigen::EnergyWindow::defaults(Model::Dirac);
  auto level_for = [&](int channel_k) {
    CavityProblem p(units, Channel::dirac(channel_k), bc, radius);
    auto s = eigen::scan_levels(p, window, 0, opts);
    for (const auto& lev : s.levels) {
      if (lev.principal_label == ak + 1) return lev.energy;
    }
    throw std::runtime_error("verify_dirac_lifting: no level with principal label " + std::to_string(ak + 1) +
                             " in channel k=" + std::to_string(channel_k));
  };
  DiracLifting out;
  out.e_minus = level_for(-ak);
  out.e_plus = level_for(ak);
  out.splitting = std::fabs(out.e_minus - out.e_plus);
  return out;
}

}  // namespace hcav::symmetry
