#include "hcav/problem.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace hcav {

std::string to_string(Model m) {
  switch (m) {
    case Model::Schrodinger:
      return "schrodinger";
    case Model::Dirac:
      return "dirac";
    case Model::Pauli:
      return "pauli";
  }
  return "unknown";
}

Model model_from_string(const std::string& s) {
  if (s == "schrodinger") return Model::Schrodinger;
  if (s == "dirac") return Model::Dirac;
  if (s == "pauli") return Model::Pauli;
  throw std::invalid_argument("unknown model '" + s + "'");
}

UnitSystem UnitSystem::dirac(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("dirac units need 0 < alpha < 1");
  }
  return UnitSystem(Model::Dirac, alpha);
}

Channel Channel::schrodinger(int l) {
  if (l < 0) throw std::invalid_argument("channel: l must be non-negative");
  return Channel(Model::Schrodinger, l, 0, 0);
}

Channel Channel::dirac(int k) {
  if (k == 0) throw std::invalid_argument("channel: Dirac k must be nonzero");
  return Channel(Model::Dirac, 0, k, 0);
}

Channel Channel::pauli(int l, int j_sign) {
  if (l < 0) throw std::invalid_argument("channel: l must be non-negative");
  if (j_sign != 1 && j_sign != -1) throw std::invalid_argument("channel: j_sign must be +-1");
  if (l == 0 && j_sign == -1) throw std::invalid_argument("channel: l = 0 admits only j = 1/2");
  return Channel(Model::Pauli, l, 0, j_sign);
}

int Channel::l() const { return model_ == Model::Dirac ? l_upper() : l_; }

double Channel::j() const {
  switch (model_) {
    case Model::Dirac:
      return std::abs(k_) - 0.5;
    case Model::Pauli:
      return l_ + 0.5 * j_sign_;
    case Model::Schrodinger:
      break;
  }
  throw std::logic_error("channel: j undefined for the spinless model");
}

int Channel::l_upper() const {
  if (model_ != Model::Dirac) return l_;
  return k_ < 0 ? std::abs(k_) - 1 : std::abs(k_);
}

int Channel::l_lower() const {
  if (model_ != Model::Dirac) return l_;
  return k_ < 0 ? std::abs(k_) : std::abs(k_) - 1;
}

std::string Channel::label() const {
  switch (model_) {
    case Model::Schrodinger:
      return "l=" + std::to_string(l_);
    case Model::Dirac:
      return "k=" + std::to_string(k_);
    case Model::Pauli:
      return "l=" + std::to_string(l_) + ",j=" + std::to_string(2 * l_ + j_sign_) + "/2";
  }
  return {};
}

BoundaryCondition::BoundaryCondition(double u, double v) {
  if (!std::isfinite(u) || !std::isfinite(v)) {
    throw std::invalid_argument("boundary condition: non-finite pair");
  }
  double n = std::hypot(u, v);
  if (n == 0.0) throw std::invalid_argument("boundary condition: (u, v) = (0, 0)");
  u /= n;
  v /= n;
  if (u < 0.0 || (u == 0.0 && v < 0.0)) {
    u = -u;
    v = -v;
  }
  // -0.0 would make otherwise equal conditions print differently
  u_ = u + 0.0;
  v_ = v + 0.0;
}

BoundaryCondition BoundaryCondition::robin(double gamma) {
  if (std::isnan(gamma)) throw std::invalid_argument("boundary condition: gamma is NaN");
  if (std::isinf(gamma)) return dirichlet();
  return BoundaryCondition(gamma, 1.0);
}

BoundaryCondition BoundaryCondition::dirac_nu(double nu) {
  if (std::isnan(nu)) throw std::invalid_argument("boundary condition: nu is NaN");
  if (std::isinf(nu)) return dirichlet();
  return BoundaryCondition(nu, 1.0);
}

BoundaryCondition BoundaryCondition::from_angle(double theta, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("boundary condition: radius must be positive");
  double c = std::cos(theta);
  if (std::fabs(c) < 1e-15) return dirichlet();
  return BoundaryCondition(std::sin(theta), radius * c);
}

BoundaryCondition BoundaryCondition::from_nu_angle(double theta) {
  double c = std::cos(theta);
  if (std::fabs(c) < 1e-15) return dirichlet();
  return BoundaryCondition(std::sin(theta), c);
}

BoundaryCondition BoundaryCondition::from_pair(double u, double v) { return BoundaryCondition(u, v); }

double BoundaryCondition::gamma() const {
  if (v_ == 0.0) return INFINITY;
  return u_ / v_;
}

BoundaryCondition BoundaryCondition::shifted(double delta) const {
  if (v_ == 0.0) return *this;
  return BoundaryCondition(u_ + delta * v_, v_);
}

std::string BoundaryCondition::describe() const {
  if (is_dirichlet()) return "dirichlet";
  char buf[64];
  std::snprintf(buf, sizeof buf, "gamma=%.17g", gamma());
  return buf;
}

CavityProblem::CavityProblem(UnitSystem u, Channel c, BoundaryCondition b, double r)
    : units(u), channel(c), bc(b), radius(r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("cavity problem: radius must be positive and finite");
  }
  if (u.model() != c.model()) {
    throw std::invalid_argument("cavity problem: channel model does not match units");
  }
  if (u.model() == Model::Dirac && !(u.alpha() < std::abs(c.k()))) {
    throw std::domain_error("cavity problem: alpha >= |k| is not supported");
  }
}

}  // namespace hcav
