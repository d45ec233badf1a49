#include "hcav/eigensolve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <thread>

#include "hcav/radial.hpp"

namespace hcav::eigen {
namespace {

constexpr double kPi = std::numbers::pi;

// Prufer angle at R as a function of the energy, with a lazily filled
// bracketing grid across the window.
class PhaseScanner {
 public:
  PhaseScanner(const CavityProblem& p, EnergyWindow w, const ScanOptions& o)
      : problem_(p), window_(w), opts_(o), grid_(p.radius, o.integrator), bc_(radial::effective_boundary(p)) {
    w.validate();
    if (o.grid_points < 2) throw std::invalid_argument("scan: grid_points must be >= 2");
    memo_.assign(o.grid_points, std::nullopt);
    auto sys = oracle::RadialSystem::for_problem(p, w.lo);
    theta_b_ = oracle::boundary_phase(sys, bc_, p.radius);
  }

  double phase(double eps) const {
    return oracle::shoot(oracle::RadialSystem::for_problem(problem_, eps), grid_).phase;
  }

  double grid_energy(int i) const {
    if (i == opts_.grid_points - 1) return window_.hi;
    return window_.lo + (window_.hi - window_.lo) * i / (opts_.grid_points - 1);
  }

  double grid_phase(int i) {
    if (!memo_[i]) memo_[i] = phase(grid_energy(i));
    return *memo_[i];
  }

  double lo_phase() { return grid_phase(0); }
  double hi_phase() { return grid_phase(opts_.grid_points - 1); }
  double theta_b() const { return theta_b_; }

  // Smallest index m with theta_b + m pi above the phase at the window floor.
  int first_index() {
    double m = std::floor((lo_phase() - theta_b_) / kPi) + 1.0;
    return std::max(0, static_cast<int>(m));
  }

  bool inside(double target) { return target > lo_phase() && target <= hi_phase(); }

  // Energy where the phase reaches the target. The phase is increasing in
  // the energy, so the first grid point at or above the target brackets it.
  double solve(double target) {
    int a = 0;
    int b = opts_.grid_points - 1;
    while (b - a > 1) {
      int mid = (a + b) / 2;
      if (grid_phase(mid) >= target) {
        b = mid;
      } else {
        a = mid;
      }
    }
    double lo = grid_energy(a);
    double hi = grid_energy(b);
    while (hi - lo > opts_.energy_tol) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (phase(mid) >= target) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return 0.5 * (lo + hi);
  }

  EnergyLevel make_level(double eps, int index) const {
    EnergyLevel lev{problem_.channel, 0, 0, eps, 0.0, Engine::Shooting};
    auto sys = oracle::RadialSystem::for_problem(problem_, eps);
    if (sys.is_dirac()) {
      oracle::Trajectory tr;
      lev.residual = oracle::matched_shot(sys, grid_, bc_, &tr).determinant;
      lev.node_count = oracle::count_nodes(tr.y0);
      lev.principal_label = lev.node_count + problem_.channel.l_upper() + 1;
    } else {
      lev.residual = oracle::matched_shot(sys, grid_, bc_).determinant;
      lev.node_count = index;
      lev.principal_label = index + problem_.channel.l() + 1;
      if (eps < 0.0 && closed_form_agrees(eps)) lev.engine = Engine::Both;
    }
    return lev;
  }

 private:
  bool closed_form_agrees(double eps) const {
    double d = 1e-9 * std::max(1.0, std::fabs(eps));
    if (!(eps + d < 0.0)) return false;
    try {
      double f0 = radial::closed_form_determinant(problem_, eps - d);
      double f1 = radial::closed_form_determinant(problem_, eps + d);
      return (f0 <= 0.0 && f1 >= 0.0) || (f0 >= 0.0 && f1 <= 0.0);
    } catch (const std::exception&) {
      return false;
    }
  }

  CavityProblem problem_;
  EnergyWindow window_;
  ScanOptions opts_;
  oracle::RadialGrid grid_;
  BoundaryCondition bc_;
  double theta_b_ = 0.0;
  std::vector<std::optional<double>> memo_;
};

double angle_of_gamma(double gamma, double radius) {
  if (std::isinf(gamma)) return gamma > 0 ? kPi / 2 : -kPi / 2;
  return std::atan(gamma * radius);
}

}  // namespace

std::string to_string(Engine e) {
  switch (e) {
    case Engine::ClosedForm:
      return "closed_form";
    case Engine::Shooting:
      return "shooting";
    case Engine::Both:
      return "both";
  }
  return "unknown";
}

EnergyWindow EnergyWindow::defaults(Model m) {
  if (m == Model::Dirac) return {0.0, 5.0};
  return {-0.6, 2.0};
}

void EnergyWindow::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("energy window must be finite with lo < hi");
  }
}

WindowTooSmall::WindowTooSmall(Spectrum partial, int requested)
    : std::runtime_error("window too small: found " + std::to_string(partial.levels.size()) + " of " +
                         std::to_string(requested) + " levels"),
      partial_(std::move(partial)),
      requested_(requested) {}

Spectrum scan_levels(const CavityProblem& p, EnergyWindow window, int max_levels, const ScanOptions& opts) {
  if (max_levels < 0) throw std::invalid_argument("scan_levels: max_levels must be >= 0");
  PhaseScanner scan(p, window, opts);
  Spectrum out{p, {}};
  for (int m = scan.first_index();; ++m) {
    if (max_levels > 0 && static_cast<int>(out.levels.size()) >= max_levels) break;
    double target = scan.theta_b() + m * kPi;
    if (!scan.inside(target)) break;
    out.levels.push_back(scan.make_level(scan.solve(target), m));
  }
  if (max_levels > 0 && static_cast<int>(out.levels.size()) < max_levels) {
    throw WindowTooSmall(std::move(out), max_levels);
  }
  return out;
}

EnergyLevel find_level(const CavityProblem& p, int node_count, EnergyWindow window, const ScanOptions& opts) {
  if (node_count < 0) throw std::invalid_argument("find_level: node_count must be >= 0");
  if (p.model() == Model::Dirac) {
    Spectrum s = scan_levels(p, window, 0, opts);
    for (const auto& lev : s.levels) {
      if (lev.node_count == node_count) return lev;
    }
    throw std::out_of_range("find_level: no level with " + std::to_string(node_count) + " nodes in window");
  }
  PhaseScanner scan(p, window, opts);
  double target = scan.theta_b() + node_count * kPi;
  if (!scan.inside(target)) {
    throw std::out_of_range("find_level: level with " + std::to_string(node_count) + " nodes is outside the window");
  }
  return scan.make_level(scan.solve(target), node_count);
}

oracle::Trajectory eigenfunction(const CavityProblem& p, const EnergyLevel& level, const ScanOptions& opts) {
  oracle::RadialGrid grid(p.radius, opts.integrator);
  oracle::Trajectory tr;
  oracle::matched_shot(oracle::RadialSystem::for_problem(p, level.energy), grid, radial::effective_boundary(p),
                       &tr);
  return tr;
}

double orthogonality_check(const CavityProblem& p, const EnergyLevel& a, const EnergyLevel& b,
                           const ScanOptions& opts) {
  if (!(a.channel == p.channel) || !(b.channel == p.channel)) {
    throw std::invalid_argument("orthogonality_check: levels must belong to the problem's channel");
  }
  oracle::RadialGrid grid(p.radius, opts.integrator);
  auto ta = eigenfunction(p, a, opts);
  auto tb = eigenfunction(p, b, opts);
  const bool dirac = p.model() == Model::Dirac;
  const size_t n = ta.r.size();
  std::vector<double> fab(n), faa(n), fbb(n);
  for (size_t i = 0; i < n; ++i) {
    double r2 = ta.r[i] * ta.r[i];
    double xa = ta.psi[i], xb = tb.psi[i];
    double ya = dirac ? ta.psi_b[i] : 0.0;
    double yb = dirac ? tb.psi_b[i] : 0.0;
    fab[i] = (xa * xb + ya * yb) * r2;
    faa[i] = (xa * xa + ya * ya) * r2;
    fbb[i] = (xb * xb + yb * yb) * r2;
  }
  double sab = oracle::integrate_dr(grid, fab);
  double saa = oracle::integrate_dr(grid, faa);
  double sbb = oracle::integrate_dr(grid, fbb);
  if (!(saa > 0.0) || !(sbb > 0.0)) throw std::runtime_error("orthogonality_check: quadrature failed");
  return std::fabs(sab) / std::sqrt(saa * sbb);
}

BoundaryCondition boundary_from_angle(Model m, double theta, double radius) {
  if (m == Model::Dirac) return BoundaryCondition::from_nu_angle(theta);
  return BoundaryCondition::from_angle(theta, radius);
}

std::vector<SweepPoint> sweep(const CavityProblem& tmpl, SweepParameter parameter, const std::vector<double>& grid,
                              const SweepOptions& opts) {
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("sweep: grid must be sorted");
  std::vector<SweepPoint> out(grid.size());

  auto run = [&](size_t i) {
    SweepPoint& pt = out[i];
    pt.value = grid[i];
    try {
      CavityProblem p = parameter == SweepParameter::Radius
                            ? tmpl.with_radius(grid[i])
                            : tmpl.with_bc(boundary_from_angle(tmpl.model(), grid[i], tmpl.radius));
      if (!opts.nodes.empty()) {
        std::string missing;
        for (int node : opts.nodes) {
          try {
            pt.levels.push_back(find_level(p, node, opts.window, opts.scan));
          } catch (const std::out_of_range&) {
            missing += (missing.empty() ? "" : ",") + std::to_string(node);
          }
        }
        if (!missing.empty()) pt.error = "nodes outside window: " + missing;
      } else {
        try {
          pt.levels = scan_levels(p, opts.window, opts.max_levels, opts.scan).levels;
        } catch (const WindowTooSmall& e) {
          pt.levels = e.partial().levels;
          pt.error = e.what();
        }
      }
    } catch (const std::exception& e) {
      pt.error = e.what();
    }
  };

  const int threads = std::max(1, opts.threads);
  if (threads == 1 || grid.size() < 2) {
    for (size_t i = 0; i < grid.size(); ++i) run(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  const int count = std::min<int>(threads, static_cast<int>(grid.size()));
  for (int t = 0; t < count; ++t) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < grid.size(); i = next++) run(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

double level_splitting(const CavityProblem& p, const LevelRef& a, const LevelRef& b, EnergyWindow window,
                       const ScanOptions& opts) {
  double ea = find_level(p.with_channel(a.channel), a.node_count, window, opts).energy;
  double eb = find_level(p.with_channel(b.channel), b.node_count, window, opts).energy;
  return ea - eb;
}

Degeneracy locate_degeneracy(const CavityProblem& tmpl, const LevelRef& a, const LevelRef& b, Vary vary, double lo,
                             double hi, EnergyWindow window, const ScanOptions& opts, double tol) {
  if (std::isnan(lo) || std::isnan(hi)) throw std::invalid_argument("locate_degeneracy: NaN bracket");
  const bool schrodinger_like = tmpl.model() != Model::Dirac;
  int evaluations = 0;

  // Everything is solved in a coordinate t; value_of maps it back.
  double t0, t1, ttol;
  std::function<CavityProblem(double, int&)> problem_at;
  std::function<double(double)> value_of;
  if (vary == Vary::Radius) {
    if (!(lo > 0.0) || !(lo < hi) || !std::isfinite(hi)) {
      throw std::invalid_argument("locate_degeneracy: radius bracket must satisfy 0 < lo < hi");
    }
    t0 = lo;
    t1 = hi;
    ttol = tol;
    problem_at = [&](double t, int& shift) {
      shift = 0;
      return tmpl.with_radius(t);
    };
    value_of = [](double t) { return t; };
  } else {
    const double R = tmpl.radius;
    t0 = angle_of_gamma(lo, R);
    t1 = angle_of_gamma(hi, R);
    if (lo > hi) {
      if (!schrodinger_like) throw std::invalid_argument("locate_degeneracy: wrapping brackets need a Robin family");
      t1 += kPi;
    }
    if (!(t0 < t1)) throw std::invalid_argument("locate_degeneracy: empty gamma bracket");
    // gamma tolerance tol corresponds to roughly tol * R cos^2 in angle
    ttol = 0.1 * tol * std::min(1.0, R);
    problem_at = [&, R](double t, int& shift) {
      shift = 0;
      double th = t;
      if (th > kPi / 2) {
        th -= kPi;
        shift = 1;
      }
      return tmpl.with_bc(boundary_from_angle(tmpl.model(), th, R));
    };
    value_of = [R](double t) {
      if (t == kPi / 2) return std::numeric_limits<double>::infinity();
      double th = t > kPi / 2 ? t - kPi : t;
      return std::tan(th) / R;
    };
  }

  struct Eval {
    double f;
    double ea;
    double eb;
  };
  auto eval = [&](double t) {
    int shift = 0;
    CavityProblem p = problem_at(t, shift);
    ++evaluations;
    double ea = find_level(p.with_channel(a.channel), a.node_count + shift, window, opts).energy;
    double eb = find_level(p.with_channel(b.channel), b.node_count + shift, window, opts).energy;
    return Eval{ea - eb, ea, eb};
  };
  auto finish = [&](double t, const Eval& e) {
    return Degeneracy{value_of(t), 0.5 * (e.ea + e.eb), e.f, evaluations};
  };

  Eval fa = eval(t0);
  Eval fb = eval(t1);
  constexpr double kZero = 1e-11;
  if (std::fabs(fa.f) <= kZero) return finish(t0, fa);
  if (std::fabs(fb.f) <= kZero) return finish(t1, fb);
  if ((fa.f > 0) == (fb.f > 0)) throw NoSignChange("locate_degeneracy: no sign change of the splitting on the bracket");

  // Illinois regula falsi with a bisection step every fourth iteration.
  double a_t = t0, b_t = t1;
  double a_f = fa.f, b_f = fb.f;
  Eval best = std::fabs(fa.f) < std::fabs(fb.f) ? fa : fb;
  double best_t = std::fabs(fa.f) < std::fabs(fb.f) ? t0 : t1;
  for (int it = 0; it < 200 && std::fabs(b_t - a_t) > ttol; ++it) {
    double c = (it % 4 == 3) ? 0.5 * (a_t + b_t) : (a_t * b_f - b_t * a_f) / (b_f - a_f);
    if (!(c > std::min(a_t, b_t) && c < std::max(a_t, b_t))) c = 0.5 * (a_t + b_t);
    Eval fc = eval(c);
    if (std::fabs(fc.f) < std::fabs(best.f)) {
      best = fc;
      best_t = c;
    }
    if (fc.f == 0.0) break;
    if ((fc.f > 0) != (b_f > 0)) {
      a_t = b_t;
      a_f = b_f;
    } else {
      a_f *= 0.5;
    }
    b_t = c;
    b_f = fc.f;
  }
  // A root this close to the Dirichlet point is the Dirichlet point when the
  // splitting there is no worse.
  if (vary == Vary::Gamma && best_t != kPi / 2 && std::fabs(best_t - kPi / 2) <= 10 * ttol) {
    Eval fd = eval(kPi / 2);
    if (std::fabs(fd.f) <= std::max(std::fabs(best.f), kZero)) return finish(kPi / 2, fd);
  }
  return finish(best_t, best);
}

}  // namespace hcav::eigen
