#pragma once

// Cavity spectra: bracketing and refinement of levels, sweeps, degeneracy
// location and orthogonality checks.

#include <stdexcept>
#include <string>
#include <vector>

#include "hcav/oracle.hpp"
#include "hcav/problem.hpp"

namespace hcav::eigen {

enum class Engine { ClosedForm, Shooting, Both };
std::string to_string(Engine e);

struct EnergyLevel {
  Channel channel;
  int node_count = 0;
  int principal_label = 0;
  double energy = 0.0;
  double residual = 0.0;
  Engine engine = Engine::Shooting;
};

struct Spectrum {
  CavityProblem problem;
  std::vector<EnergyLevel> levels;
};

struct EnergyWindow {
  double lo;
  double hi;
  /// (-0.6, 2.0) for Schrodinger/Pauli, (0, 5) for Dirac.
  static EnergyWindow defaults(Model m);
  void validate() const;
};

struct ScanOptions {
  oracle::IntegratorConfig integrator;
  int grid_points = 400;
  double energy_tol = 1e-12;
  double residual_tol = 1e-9;
};

/// Fewer levels in the window than requested; carries what was found.
class WindowTooSmall : public std::runtime_error {
 public:
  WindowTooSmall(Spectrum partial, int requested);
  const Spectrum& partial() const { return partial_; }
  int requested() const { return requested_; }

 private:
  Spectrum partial_;
  int requested_;
};

class NoSignChange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lowest max_levels levels inside the window (max_levels = 0: all of them).
Spectrum scan_levels(const CavityProblem& p, EnergyWindow window, int max_levels,
                     const ScanOptions& opts = {});

/// Level with the given node count; throws std::out_of_range when it is not
/// inside the window.
EnergyLevel find_level(const CavityProblem& p, int node_count, EnergyWindow window,
                       const ScanOptions& opts = {});

/// Eigenfunction of a refined level on the integrator grid.
oracle::Trajectory eigenfunction(const CavityProblem& p, const EnergyLevel& level,
                                 const ScanOptions& opts = {});

/// |<psi_i|psi_j>| / (|psi_i| |psi_j|) with r^2 dr weight.
double orthogonality_check(const CavityProblem& p, const EnergyLevel& a, const EnergyLevel& b,
                           const ScanOptions& opts = {});

enum class SweepParameter { Radius, GammaAngle };

/// Boundary pair for angle theta = arctan(gamma R) (Schrodinger, Pauli) or
/// arctan(nu) (Dirac).
BoundaryCondition boundary_from_angle(Model m, double theta, double radius);

struct SweepPoint {
  double value = 0.0;
  std::vector<EnergyLevel> levels;
  std::string error;  // empty on success
};

struct SweepOptions {
  EnergyWindow window{-0.6, 2.0};
  int max_levels = 0;
  /// Keep only these node counts (empty keeps all).
  std::vector<int> nodes;
  int threads = 1;
  ScanOptions scan;
};

/// One entry per grid value, in grid order regardless of thread count.
std::vector<SweepPoint> sweep(const CavityProblem& tmpl, SweepParameter parameter,
                              const std::vector<double>& grid, const SweepOptions& opts);

struct LevelRef {
  Channel channel;
  int node_count;
};

enum class Vary { Radius, Gamma };

struct Degeneracy {
  /// Radius, or gamma (+inf for the Dirichlet point).
  double parameter = 0.0;
  double energy = 0.0;
  double splitting = 0.0;
  int evaluations = 0;
};

/// Root of E_a - E_b in the varied parameter on [lo, hi]. For Vary::Gamma the
/// bracket is in gamma and may contain +-inf; lo > hi means the bracket wraps
/// through gamma = infinity.
Degeneracy locate_degeneracy(const CavityProblem& tmpl, const LevelRef& a, const LevelRef& b,
                             Vary vary, double lo, double hi, EnergyWindow window,
                             const ScanOptions& opts = {}, double tol = 1e-9);

/// E_a - E_b at one parameter value.
double level_splitting(const CavityProblem& p, const LevelRef& a, const LevelRef& b,
                       EnergyWindow window, const ScanOptions& opts = {});

}  // namespace hcav::eigen
