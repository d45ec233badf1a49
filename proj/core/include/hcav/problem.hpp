#pragma once

#include <string>

namespace hcav {

enum class Model { Schrodinger, Dirac, Pauli };

std::string to_string(Model m);
Model model_from_string(const std::string& s);

/// Dimensionless conventions. Schrodinger and Pauli: energies in M e^4, lengths
/// in Bohr radii, rest mass excluded. Dirac: energies in M c^2, lengths in Bohr
/// radii 1/(M c alpha), with 0 < alpha < 1.
class UnitSystem {
 public:
  static UnitSystem schrodinger() { return UnitSystem(Model::Schrodinger, 0.0); }
  static UnitSystem pauli() { return UnitSystem(Model::Pauli, 0.0); }
  static UnitSystem dirac(double alpha);

  Model model() const { return model_; }
  double alpha() const { return alpha_; }

 private:
  UnitSystem(Model m, double alpha) : model_(m), alpha_(alpha) {}
  Model model_;
  double alpha_;
};

/// Angular/spin sector.
///
/// Dirac channels use the sign convention in which k < 0 carries the nodeless
/// ground state: k = -1 is S1/2, k = +1 is P1/2, k = -2 is P3/2. The upper
/// component then has l_A = |k| - 1 for k < 0 and l_A = |k| for k > 0.
class Channel {
 public:
  static Channel schrodinger(int l);
  static Channel dirac(int k);
  /// j_sign = +1 for j = l + 1/2, -1 for j = l - 1/2.
  static Channel pauli(int l, int j_sign);

  Model model() const { return model_; }
  int l() const;  // orbital l; for Dirac the upper-component l_A
  int k() const { return k_; }
  int j_sign() const { return j_sign_; }
  double j() const;
  int l_upper() const;
  int l_lower() const;
  /// Spectroscopic-style tag, e.g. "l=1", "k=-1", "l=1,j=3/2".
  std::string label() const;

  bool operator==(const Channel&) const = default;

 private:
  Channel(Model m, int l, int k, int js) : model_(m), l_(l), k_(k), j_sign_(js) {}
  Model model_;
  int l_;
  int k_;
  int j_sign_;
};

/// Homogeneous boundary pair u*psi(R) + v*psi'(R) = 0 (Schrodinger, Pauli) or
/// u*psi_A(R) + v*psi_B(R) = 0 (Dirac). Stored normalized with u^2 + v^2 = 1,
/// u >= 0, and (0, 1) when u vanishes.
class BoundaryCondition {
 public:
  static BoundaryCondition dirichlet() { return BoundaryCondition(1.0, 0.0); }
  static BoundaryCondition neumann() { return BoundaryCondition(0.0, 1.0); }
  /// gamma*psi + psi' = 0; +-inf gives Dirichlet.
  static BoundaryCondition robin(double gamma);
  /// nu*psi_A + psi_B = 0; +-inf gives psi_A(R) = 0.
  static BoundaryCondition dirac_nu(double nu);
  /// theta = arctan(gamma R), so (u, v) is proportional to (sin theta, R cos theta).
  static BoundaryCondition from_angle(double theta, double radius);
  /// theta = arctan(nu) for the Dirac family.
  static BoundaryCondition from_nu_angle(double theta);
  static BoundaryCondition from_pair(double u, double v);

  double u() const { return u_; }
  double v() const { return v_; }
  bool is_dirichlet() const { return v_ == 0.0; }
  /// u / v, +inf for Dirichlet.
  double gamma() const;
  /// Adds delta to gamma while keeping the Dirichlet point fixed.
  BoundaryCondition shifted(double delta) const;
  std::string describe() const;

  bool operator==(const BoundaryCondition&) const = default;

 private:
  BoundaryCondition(double u, double v);
  double u_;
  double v_;
};

struct CavityProblem {
  UnitSystem units;
  Channel channel;
  BoundaryCondition bc;
  double radius;

  CavityProblem(UnitSystem units, Channel channel, BoundaryCondition bc, double radius);

  Model model() const { return units.model(); }
  CavityProblem with_radius(double r) const { return {units, channel, bc, r}; }
  CavityProblem with_bc(BoundaryCondition b) const { return {units, channel, b, radius}; }
  CavityProblem with_channel(Channel c) const { return {units, c, bc, radius}; }
};

/// Radial solution sample. For Dirac, psi is the upper component psi_A and
/// psi_b the lower component; dpsi is always d(psi)/dr.
struct RadialPoint {
  double r = 0.0;
  double psi = 0.0;
  double dpsi = 0.0;
  double psi_b = 0.0;
};

}  // namespace hcav
