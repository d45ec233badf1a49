#include "hcav_app/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "hcav/radial.hpp"
#include "hcav/symmetry.hpp"
#include "hcav_app/commands.hpp"
#include "hcav_app/config.hpp"
#include "hcav_app/presets.hpp"
#include "json.hpp"

namespace hcav::app {
namespace {

using eigen::EnergyLevel;
using eigen::EnergyWindow;
using eigen::ScanOptions;

const double kAlpha = std::sqrt(15.0 / 16.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

CavityProblem schrodinger(int l, BoundaryCondition bc, double R) {
  return CavityProblem(UnitSystem::schrodinger(), Channel::schrodinger(l), bc, R);
}
CavityProblem pauli(int l, int js, BoundaryCondition bc, double R) {
  return CavityProblem(UnitSystem::pauli(), Channel::pauli(l, js), bc, R);
}
CavityProblem dirac(int k, BoundaryCondition bc, double R, double alpha = kAlpha) {
  return CavityProblem(UnitSystem::dirac(alpha), Channel::dirac(k), bc, R);
}

double energy(const CavityProblem& p, int node, const ScanOptions& o = {}) {
  return eigen::find_level(p, node, {-200.0, 2000.0}, o).energy;
}

void set(CheckResult& r, double measured, double tol, bool extra_ok = true, const std::string& cmp = "<=") {
  r.measured = measured;
  r.tolerance = tol;
  r.comparison = cmp;
  r.passed = extra_ok && (cmp == "<=" ? measured <= tol : measured > tol);
}

// ---------------------------------------------------------------- 1
void check_hydrogen_limit(CheckResult& r, int) {
  auto t0 = std::chrono::steady_clock::now();
  auto s = eigen::scan_levels(schrodinger(0, BoundaryCondition::dirichlet(), 40.0),
                              EnergyWindow::defaults(Model::Schrodinger), 2);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double err = std::max(std::fabs(s.levels[0].energy + 0.5), std::fabs(s.levels[1].energy + 0.125));
  r.detail = "E = " + fmt("%.13f", s.levels[0].energy) + ", " + fmt("%.13f", s.levels[1].energy) + " in " +
             fmt("%.3f", secs) + " s (limit 1 s)";
  set(r, err, 1e-8, secs < 1.0);
}

// ---------------------------------------------------------------- 2
// Sign changes of f on a uniform grid in the principal number, bisected.
std::vector<double> roots_in_n(const std::function<double(double)>& f, double lo, double hi, int samples) {
  std::vector<double> roots;
  double a = lo, fa = f(a);
  for (int i = 1; i <= samples; ++i) {
    double b = lo + (hi - lo) * i / samples, fb = f(b);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) {
      double x0 = a, x1 = b, f0 = fa;
      for (int it = 0; it < 200 && x1 - x0 > 1e-15 * x1; ++it) {
        double m = 0.5 * (x0 + x1), fm = f(m);
        if ((fm < 0.0) == (f0 < 0.0)) {
          x0 = m;
          f0 = fm;
        } else {
          x1 = m;
        }
      }
      roots.push_back(0.5 * (x0 + x1));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

void check_laguerre_form(CheckResult& r, int) {
  double worst = 0.0;
  int pairs = 0;
  std::string bad;
  for (double R : {2.0, 6.0}) {
    for (double g : {kInf, 0.0, 1.0}) {
      for (int l : {0, 1}) {
        CavityProblem p = schrodinger(l, BoundaryCondition::robin(g), R);
        auto lag = [&](double n) { return radial::quantization_residual_laguerre(p, n); };
        auto det = [&](double n) { return radial::closed_form_determinant(p, -0.5 / (n * n)); };
        const double lo = l + 0.05, hi = 60.0;  // keeps 2R/n inside the Kummer range
        auto a = roots_in_n(lag, lo, hi, 6000);
        auto b = roots_in_n(det, lo, hi, 6000);
        if (a.size() != b.size()) {
          worst = kInf;
          bad += " count mismatch at R=" + fmt("%g", R) + " gamma=" + fmt("%g", g) + " l=" + std::to_string(l);
          continue;
        }
        for (size_t i = 0; i < a.size(); ++i) {
          worst = std::max(worst, std::fabs(0.5 / (a[i] * a[i]) - 0.5 / (b[i] * b[i])));
          ++pairs;
        }
      }
    }
  }
  r.detail = std::to_string(pairs) + " bound-state roots compared over 12 configurations" + bad;
  set(r, worst, 1e-9, pairs > 0);
}

// ---------------------------------------------------------------- 3
void check_dirichlet_degeneracy(CheckResult& r, int) {
  const auto D = BoundaryCondition::dirichlet();
  // the 2s state has its node on the wall at R = 2
  const double e2s = energy(schrodinger(0, D, 2.0), 0);
  const int wall_nodes = oracle::shoot_schrodinger(-0.125, 0, 2.0).node_count;
  const double s_pair = std::fabs(energy(schrodinger(0, D, 2.0), 1) - energy(schrodinger(2, D, 2.0), 0));
  const double p_pair = std::fabs(energy(schrodinger(1, D, 6.0), 1) - energy(schrodinger(3, D, 6.0), 0));
  const double dev = std::fabs(e2s + 0.125);
  r.detail = "R=2: E(-0.125 level) off by " + fmt("%.2e", dev) + " with " + std::to_string(wall_nodes) +
             " node counted on (0,R]; |E(l=0,node 1) - E(l=2,node 0)| = " + fmt("%.2e", s_pair) +
             "; R=6: |E(l=1,node 1) - E(l=3,node 0)| = " + fmt("%.2e", p_pair);
  set(r, std::max({dev, s_pair, p_pair}), 1e-9, wall_nodes == 1);
}

// ---------------------------------------------------------------- 4
void check_robin_degeneracy(CheckResult& r, int) {
  const double R = 2.0;
  const EnergyWindow w{-200.0, 2000.0};
  const eigen::LevelRef s{Channel::schrodinger(0), 2}, d{Channel::schrodinger(2), 1};
  const CavityProblem tmpl = schrodinger(0, BoundaryCondition::dirichlet(), R);
  const double at_one = std::fabs(eigen::level_splitting(tmpl.with_bc(BoundaryCondition::robin(1.0)), s, d, w));
  const double at_wall = std::fabs(eigen::level_splitting(tmpl, s, d, w));

  // scan arctan(gamma R) over (-pi/2, pi/2); the endpoint is the Dirichlet wall
  const double half_pi = 2.0 * std::atan(1.0);
  const int n = 240;
  const double step = 2.0 * half_pi / n;
  std::vector<double> th, sp;
  for (int i = 1; i < n; ++i) {
    th.push_back(-half_pi + i * step);
    sp.push_back(eigen::level_splitting(tmpl.with_bc(BoundaryCondition::from_angle(th.back(), R)), s, d, w));
  }
  std::vector<double> crossings;
  for (size_t i = 1; i < sp.size(); ++i) {
    if ((sp[i - 1] < 0.0) != (sp[i] < 0.0)) crossings.push_back(0.5 * (th[i - 1] + th[i]));
  }
  bool located = crossings.size() == 1 && std::fabs(crossings[0] - std::atan(R * 1.0)) <= step;
  double gamma_root = NAN;
  if (located) {
    auto deg = eigen::locate_degeneracy(tmpl, s, d, eigen::Vary::Gamma, std::tan(crossings[0] - step) / R,
                                        std::tan(crossings[0] + step) / R, w);
    gamma_root = deg.parameter;
  }
  r.detail = "|dE| at gamma=1: " + fmt("%.2e", at_one) + ", at Dirichlet: " + fmt("%.2e", at_wall) + "; " +
             std::to_string(crossings.size()) + " interior crossing(s) on a " + std::to_string(n) +
             "-point angle grid, refined gamma = " + fmt("%.10f", gamma_root);
  set(r, std::max(at_one, at_wall), 1e-9, located && std::fabs(gamma_root - 1.0) <= 1e-6);
}

// ---------------------------------------------------------------- 5
double level_with_label(const CavityProblem& p, int label, const EnergyWindow& w) {
  for (const auto& lev : eigen::scan_levels(p, w, 0).levels) {
    if (lev.principal_label == label) return lev.energy;
  }
  throw std::runtime_error("no level with principal label " + std::to_string(label));
}

void check_dirac_limit(CheckResult& r, int) {
  const double exact1 = radial::dirac_energy_infinite(1, -1, kAlpha);
  const double exact2 = std::sqrt(5.0 / 8.0);
  const EnergyWindow w{0.0, 0.95};
  const auto D = BoundaryCondition::dirichlet();
  const double e1 = level_with_label(dirac(-1, D, 60.0), 1, w);
  const double e2m = level_with_label(dirac(-1, D, 60.0), 2, w);
  const double e2p = level_with_label(dirac(1, D, 60.0), 2, w);
  const double formula_err = std::max(std::fabs(exact1 - 0.25), std::fabs(radial::dirac_energy_infinite(2, 1, kAlpha) - exact2));
  const double cavity_err = std::max({std::fabs(e1 - 0.25), std::fabs(e2m - exact2), std::fabs(e2p - exact2)});
  r.detail = "formula: |E(1,-1) - 1/4| = " + fmt("%.1e", std::fabs(exact1 - 0.25)) + "; R=60: E = " + fmt("%.12f", e1) +
             ", " + fmt("%.12f", e2m) + " (k=-1), " + fmt("%.12f", e2p) + " (k=+1)";
  set(r, cavity_err, 1e-6, formula_err <= 1e-15);
}

// ---------------------------------------------------------------- 6
void check_dirac_lifting(CheckResult& r, int) {
  auto t0 = std::chrono::steady_clock::now();
  auto roots = symmetry::dirac_nu_condition(1, kAlpha);
  double smallest = kInf;
  std::string parts;
  for (double nu : {kInf, 0.0, roots.first, roots.second}) {
    auto lift = symmetry::verify_dirac_lifting(kAlpha, 1, 5.0, nu);
    smallest = std::min(smallest, lift.splitting);
    parts += " nu=" + fmt("%.6g", nu) + ": " + fmt("%.3e", lift.splitting) + ";";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.detail = "R=5 splittings" + parts + " " + fmt("%.1f", secs) + " s (limit 30 s)";
  set(r, smallest, 1e-4, secs < 30.0, ">");
}

// ---------------------------------------------------------------- 7
struct PairHit {
  int node_a;
  int node_b;
  double split;
};

// Levels of the l+2 channel (nodes 0, 1) matched to the nearest l-channel level.
std::vector<PairHit> match_pauli(const CavityProblem& in, const CavityProblem& out) {
  std::vector<double> ea;
  for (int n = 0; n < 6; ++n) ea.push_back(energy(in, n));
  std::vector<PairHit> hits;
  for (int nb = 0; nb < 2; ++nb) {
    const double eb = energy(out, nb);
    PairHit h{-1, nb, kInf};
    for (int na = 0; na < 6; ++na) {
      if (std::fabs(ea[na] - eb) < h.split) h = {na, nb, std::fabs(ea[na] - eb)};
    }
    hits.push_back(h);
  }
  return hits;
}

struct Detuning {
  double radius;
  double gamma;
};

Detuning detune(const CavityProblem& in, const PairHit& h, const CavityProblem& out) {
  const eigen::LevelRef a{in.channel, h.node_a}, b{out.channel, h.node_b};
  const EnergyWindow w{-200.0, 2000.0};
  return {std::fabs(eigen::level_splitting(in.with_radius(1.01 * in.radius), a, b, w)),
          std::fabs(eigen::level_splitting(in.with_bc(BoundaryCondition::robin(1.01 * in.bc.gamma())), a, b, w))};
}

void check_pauli(CheckResult& r, int) {
  double worst = 0.0, weakest_r = kInf, weakest_g = kInf;
  int predictions = 0, impossible = 0;
  for (int l = 0; l <= 2; ++l) {
    for (int jin : {1, -1}) {
      if (l == 0 && jin == -1) continue;
      for (int jout : {1, -1}) {
        auto pr = symmetry::predict_degeneracy_pauli(l, jin, jout);
        if (!pr.possible()) {
          if (jin == 1 && jout == -1) ++impossible;
          continue;
        }
        const auto& d = *pr.prediction;
        for (double g : d.gamma_options) {
          auto bc = BoundaryCondition::robin(g);
          auto in = pauli(l, jin, bc, d.radius);
          auto out = pauli(l + 2, jout, bc, d.radius);
          for (const auto& h : match_pauli(in, out)) {
            worst = std::max(worst, h.split);
            ++predictions;
            auto dt = detune(in, h, out);
            weakest_r = std::min(weakest_r, dt.radius);
            weakest_g = std::min(weakest_g, dt.gamma);
          }
        }
      }
    }
  }
  // The three pairs drawn in the figure, found from the F level's principal
  // label (4F is node 0, 5F node 1). Both detunings must split these.
  const auto g = BoundaryCondition::robin(-1.0 / 12.0);
  const auto p32 = pauli(1, 1, g, 42.0 / 5.0), f72a = pauli(3, 1, g, 42.0 / 5.0);
  const auto p12 = pauli(1, -1, g, 12.0), f72b = pauli(3, 1, g, 12.0);
  auto hit_a = match_pauli(p32, f72a);
  auto hit_b = match_pauli(p12, f72b);
  const double fig = std::max({hit_a[0].split, hit_b[0].split, hit_b[1].split});
  double fig_detune = kInf;
  for (auto dt : {detune(p32, hit_a[0], f72a), detune(p12, hit_b[0], f72b), detune(p12, hit_b[1], f72b)}) {
    fig_detune = std::min({fig_detune, dt.radius, dt.gamma});
  }
  r.detail = std::to_string(predictions) + " predicted pairs, worst " + fmt("%.2e", worst) +
             "; 1% R detuning splits every pair by >= " + fmt("%.2e", weakest_r) + " (1% gamma: >= " +
             fmt("%.2e", weakest_g) + "); figure pairs: R=42/5 4F7/2 ~ P3/2 node " + std::to_string(hit_a[0].node_a) +
             ", R=12 4F7/2 ~ P1/2 node " + std::to_string(hit_b[0].node_a) + " and 5F7/2 ~ P1/2 node " +
             std::to_string(hit_b[1].node_a) + ", worst " + fmt("%.1e", fig) + ", detuned by R or gamma >= " +
             fmt("%.2e", fig_detune) + "; " + std::to_string(impossible) + "/3 j=l+1/2 -> l+3/2 cases Impossible";
  set(r, std::max(worst, fig), 1e-9,
      weakest_r > 1e-5 && fig_detune > 1e-5 && impossible == 3 && predictions == 28);
}

// ---------------------------------------------------------------- 8
void check_runge_lenz(CheckResult& r, int) {
  double worst_rel = 0.0;
  int compared = 0;
  for (double R : {2.0, 6.0, 12.0}) {
    for (double g : {-0.5, 0.0, 1.0, 2.0 / R}) {
      for (int l : {0, 1, 2}) {
        auto p = schrodinger(l, BoundaryCondition::robin(g), R);
        for (int node = 0; node < 3; ++node) {
          auto lev = eigen::find_level(p, node, {-200.0, 2000.0});
          auto prof = symmetry::profile_from(eigen::eigenfunction(p, lev));
          const double psiR = prof.psi.back();
          const double num = symmetry::rl_boundary_residual_numeric(p, symmetry::runge_lenz_raise(prof, l, lev.energy));
          const double cf = symmetry::rl_boundary_residual_closed_form(p, lev.energy, psiR);
          const double scale = (l + 1.0) * std::fabs(psiR) *
                               (g * g + std::fabs(2.0 * g / R) + l * (l + 2.0) / (R * R) + 2.0 / R + 2.0 * std::fabs(lev.energy));
          worst_rel = std::max(worst_rel, std::fabs(num - cf) / scale);
          ++compared;
        }
      }
    }
  }
  double on = 0.0, off = kInf;
  for (int l : {0, 1}) {
    auto pred = symmetry::predict_degeneracy_schrodinger(l);
    for (double g : pred.gamma_options) {
      for (double factor : {1.0, 1.1}) {
        auto p = schrodinger(l, BoundaryCondition::robin(g), factor * pred.radius);
        // node 0 can be an exact top-of-shell hydrogen state, which the double raise kills
        for (int node : {1, 2}) {
          auto lev = eigen::find_level(p, node, {-200.0, 2000.0});
          auto chi = symmetry::runge_lenz_raise2(symmetry::profile_from(eigen::eigenfunction(p, lev)), l, lev.energy);
          const double res = symmetry::reentry_residual(p.bc, chi);
          if (factor == 1.0) {
            on = std::max(on, res);
          } else {
            off = std::min(off, res);
          }
        }
      }
    }
  }
  r.detail = std::to_string(compared) + " closed-form/numeric residual pairs, worst relative " + fmt("%.2e", worst_rel) +
             "; re-entry at R=(l+1)(l+2): " + fmt("%.2e", on) + ", at 1.1 R: >= " + fmt("%.2e", off);
  set(r, worst_rel, 1e-8, on <= 1e-9 && off > 1e-4);
}

// ---------------------------------------------------------------- 9
double shooting_determinant(const CavityProblem& p, double eps, const oracle::IntegratorConfig& cfg) {
  auto sys = oracle::RadialSystem::for_problem(p, eps);
  oracle::RadialGrid grid(p.radius, cfg);
  auto s = oracle::shoot(sys, grid);
  const auto bc = radial::effective_boundary(p);
  return (bc.u() * s.at_R.psi + bc.v() * s.at_R.dpsi) / std::hypot(s.at_R.psi, s.at_R.dpsi);
}

void check_engines(CheckResult& r, int) {
  double worst_det = 0.0;
  int points = 0;
  const oracle::IntegratorConfig cfg;
  for (double R : {1.0, 2.0, 6.0, 12.0}) {
    for (double g : {kInf, 0.0, 1.0, -0.5}) {
      std::vector<CavityProblem> ps;
      for (int l = 0; l <= 3; ++l) ps.push_back(schrodinger(l, BoundaryCondition::robin(g), R));
      ps.push_back(pauli(1, -1, BoundaryCondition::robin(g), R));
      ps.push_back(pauli(3, 1, BoundaryCondition::robin(g), R));
      for (const auto& p : ps) {
        // off the hydrogen energies -1/(2n^2): there the regular solution is purely
        // recessive and any outward integration loses its wall ratio
        for (double eps : {-2.0, -0.45, -0.3, -0.1, -0.03}) {
          const double d = std::fabs(shooting_determinant(p, eps, cfg) - radial::closed_form_determinant(p, eps));
          worst_det = std::max(worst_det, d);
          ++points;
        }
      }
    }
  }

  // step halving on a spread of accepted levels
  ScanOptions fine;
  fine.integrator.step_count = 2 * fine.integrator.step_count;
  double worst_e = 0.0;
  int levels = 0;
  auto compare = [&](const CavityProblem& p, int node) {
    worst_e = std::max(worst_e, std::fabs(energy(p, node) - energy(p, node, fine)));
    ++levels;
  };
  const auto D = BoundaryCondition::dirichlet();
  for (int n = 0; n < 2; ++n) compare(schrodinger(0, D, 40.0), n);
  for (int n = 0; n < 3; ++n) compare(schrodinger(0, D, 2.0), n);
  for (int n = 0; n < 4; ++n) compare(schrodinger(0, BoundaryCondition::robin(1.0), 2.0), n);
  for (int n = 0; n < 2; ++n) compare(schrodinger(2, BoundaryCondition::robin(1.0), 2.0), n);
  for (int n = 0; n < 3; ++n) compare(pauli(1, -1, BoundaryCondition::robin(-1.0 / 12.0), 12.0), n);
  for (int n = 0; n < 2; ++n) compare(pauli(3, 1, BoundaryCondition::robin(-1.0 / 12.0), 12.0), n);
  for (int k : {-1, 1}) {
    for (double nu : {kInf, 0.0}) {
      for (double R : {5.0, 60.0}) {
        auto p = dirac(k, BoundaryCondition::dirac_nu(nu), R);
        const EnergyWindow w{-0.95, 15.0};
        auto coarse = eigen::scan_levels(p, w, 2).levels;
        auto finer = eigen::scan_levels(p, w, 2, fine).levels;
        for (size_t i = 0; i < coarse.size(); ++i) {
          worst_e = std::max(worst_e, std::fabs(coarse[i].energy - finer[i].energy));
          ++levels;
        }
      }
    }
  }
  r.detail = std::to_string(points) + " determinant points, worst |shoot - closed form| " + fmt("%.2e", worst_det) +
             "; " + std::to_string(levels) + " levels under step halving, worst shift " + fmt("%.2e", worst_e) +
             " (limit 1e-9)";
  set(r, worst_det, 1e-8, worst_e <= 1e-9);
}

// ---------------------------------------------------------------- 10
void check_orthogonality(CheckResult& r, int) {
  double worst = 0.0;
  int pairs = 0;
  auto family = [&](const CavityProblem& p, const EnergyWindow& w, int count) {
    auto lv = eigen::scan_levels(p, w, count).levels;
    for (size_t i = 0; i < lv.size(); ++i) {
      for (size_t j = i + 1; j < lv.size(); ++j) {
        worst = std::max(worst, eigen::orthogonality_check(p, lv[i], lv[j]));
        ++pairs;
      }
    }
  };
  const EnergyWindow sw{-60.0, 200.0};
  for (double g : {kInf, 1.0, 0.0, -0.5, -3.0}) {
    for (int l : {0, 1, 2}) family(schrodinger(l, BoundaryCondition::robin(g), 2.0), sw, 4);
  }
  auto roots = symmetry::dirac_nu_condition(1, kAlpha);
  for (double nu : {kInf, 0.0, roots.first, roots.second, -1.0}) {
    for (int k : {-1, 1, -2}) family(dirac(k, BoundaryCondition::dirac_nu(nu), 5.0), {-0.95, 15.0}, 3);
  }
  for (double g : {-1.0 / 12.0, 0.5}) {
    for (auto [l, js] : {std::pair{1, -1}, std::pair{1, 1}, std::pair{3, 1}}) {
      family(pauli(l, js, BoundaryCondition::robin(g), 12.0), {-2.0, 5.0}, 3);
    }
  }
  r.detail = std::to_string(pairs) + " same-channel pairs across Robin, Dirac nu and Pauli boundaries";
  set(r, worst, 1e-7, pairs > 0);
}

// ---------------------------------------------------------------- 11
void check_jl(CheckResult& r, int) {
  double worst = 0.0;
  bool top_zero = true;
  int cases = 0;
  for (double alpha : {0.1, 0.5, kAlpha}) {
    for (int ak = 1; ak <= 4; ++ak) {
      for (int n = ak; n <= 5; ++n) {
        for (int k : {-ak, ak}) {
          worst = std::max(worst, radial::jl_identity_residual(n, k, alpha));
          ++cases;
        }
      }
      // n = j + 1/2 = |k|: the maximal-j state
      top_zero = top_zero && radial::jl_eigenvalue_sq(ak, -ak, alpha) == 0.0 && radial::jl_eigenvalue_sq(ak, ak, alpha) == 0.0;
    }
  }
  r.detail = std::to_string(cases) + " (n, k, alpha) cases; a^2 at n = |k| is " + (top_zero ? "exactly 0" : "nonzero");
  set(r, worst, 1e-12, top_zero);
}

// ---------------------------------------------------------------- 12
struct PresetExpect {
  std::string name;
  std::set<std::string> channels;
  std::string axis;
  enum { Rising, SomeFalling, None } trend;
};

void check_presets(CheckResult& r, int threads) {
  const std::vector<PresetExpect> expect = {
      {"fig1", {"l=0", "l=1", "l=2"}, "inv_R", PresetExpect::Rising},
      {"fig2", {"l=0", "l=1", "l=2"}, "inv_R", PresetExpect::SomeFalling},
      {"fig3-top", {"l=0", "l=2"}, "inv_R", PresetExpect::None},
      {"fig3-bottom", {"l=0", "l=2"}, "angle", PresetExpect::None},
      {"fig4", {"k=-1", "k=1", "k=-2"}, "inv_R", PresetExpect::Rising},
      {"fig5", {"k=-1", "k=1", "k=-2"}, "inv_R", PresetExpect::SomeFalling},
      {"fig6", {"l=0,j=1/2", "l=1,j=1/2", "l=1,j=3/2", "l=2,j=3/2", "l=2,j=5/2"}, "inv_R", PresetExpect::SomeFalling},
      {"fig7-top-left", {"l=1,j=1/2", "l=1,j=3/2", "l=3,j=5/2", "l=3,j=7/2"}, "inv_R", PresetExpect::None},
      {"fig7-top-right", {"l=1,j=3/2", "l=3,j=7/2"}, "angle", PresetExpect::None},
      {"fig7-bottom-left", {"l=1,j=1/2", "l=3,j=7/2"}, "angle", PresetExpect::None},
      {"fig7-bottom-right", {"l=1,j=1/2", "l=3,j=5/2"}, "angle", PresetExpect::None},
  };
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> failures;
  int rows = 0;
  for (const auto& e : expect) {
    RawConfig raw{{"preset", e.name}, {"threads", std::to_string(threads)}};
    const ResolvedConfig cfg = resolve("sweep", raw);
    const auto out = run_sweep(cfg);
    rows += static_cast<int>(out.data.rows.size());

    std::ostringstream csv;
    write_csv(csv, out.data);
    std::istringstream back(csv.str());
    const Dataset reread = read_csv(back);
    if (reread.rows != out.data.rows) failures.push_back(e.name + ": csv round trip differs");

    std::set<std::string> channels;
    std::set<double> xs;
    int errors = 0;
    // (series, rank within the point) -> energies in sweep order
    std::map<std::pair<std::string, int>, std::vector<std::pair<double, double>>> tracks;
    std::map<std::pair<std::string, double>, int> rank;
    for (const auto& row : reread.rows) {
      channels.insert(row.channel);
      xs.insert(row.sweep_value);
      if (row.status != "ok") {
        ++errors;
        continue;
      }
      int k = rank[{row.series, row.sweep_value}]++;
      tracks[{row.series, k}].push_back({row.sweep_value, row.energy});
    }
    if (channels != e.channels) failures.push_back(e.name + ": channel set");
    if (out.data.axis != e.axis) failures.push_back(e.name + ": axis " + out.data.axis);
    const auto& spec = *cfg.sweep;
    if (static_cast<int>(xs.size()) != spec.steps || *xs.begin() != std::min(spec.start, spec.stop) ||
        *xs.rbegin() != std::max(spec.start, spec.stop)) {
      failures.push_back(e.name + ": axis range");
    }
    if (errors) failures.push_back(e.name + ": " + std::to_string(errors) + " error rows");

    bool all_rise = true, some_fall = false;
    for (auto& [key, tr] : tracks) {
      std::sort(tr.begin(), tr.end());
      if (tr.size() > 1 && !(tr.back().second > tr.front().second)) all_rise = false;
      for (size_t i = 1; i < tr.size(); ++i) {
        // far from the wall the levels sit on their hydrogen values to ~1e-12
        const double slack = 1e-9 * std::max(1.0, std::fabs(tr[i].second));
        if (tr[i].second < tr[i - 1].second - slack) all_rise = false;
        if (tr[i].second < tr[i - 1].second - slack) some_fall = true;
      }
    }
    if (e.trend == PresetExpect::Rising && !all_rise) failures.push_back(e.name + ": a level does not rise as R shrinks");
    if (e.trend == PresetExpect::SomeFalling && !some_fall) failures.push_back(e.name + ": no level falls as R shrinks");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string why;
  for (const auto& f : failures) why += "; " + f;
  r.detail = std::to_string(expect.size()) + " presets, " + std::to_string(rows) + " rows in " + fmt("%.1f", secs) +
             " s (limit 300 s)" + why;
  set(r, static_cast<double>(failures.size()), 0.0, secs < 300.0);
}

}  // namespace

const std::vector<Check>& acceptance_checks() {
  static const std::vector<Check> checks = {
      {1, "hydrogen limit at R=40", {"schrodinger"}, check_hydrogen_limit},
      {2, "Laguerre form matches boundary determinant", {"schrodinger"}, check_laguerre_form},
      {3, "Dirichlet degeneracies at R=2 and R=6", {"schrodinger"}, check_dirichlet_degeneracy},
      {4, "Robin degeneracy at R=2, gamma=1", {"schrodinger"}, check_robin_degeneracy},
      {5, "Dirac infinite-volume limit", {"dirac"}, check_dirac_limit},
      {6, "Dirac finite-volume lifting", {"dirac"}, check_dirac_lifting},
      {7, "Pauli remnant degeneracies", {"pauli"}, check_pauli},
      {8, "Runge-Lenz residuals and re-entry", {"symmetry"}, check_runge_lenz},
      {9, "engine cross-validation and step halving", {"schrodinger"}, check_engines},
      {10, "orthogonality across boundary families", {"symmetry"}, check_orthogonality},
      {11, "Johnson-Lippmann algebra", {"symmetry", "dirac"}, check_jl},
      {12, "figure preset datasets", {}, check_presets},
  };
  return checks;
}

std::vector<CheckResult> run_checks(const std::string& suite, int threads) {
  if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CheckResult> out;
  for (const auto& c : acceptance_checks()) {
    if (suite != "all" && std::find(c.suites.begin(), c.suites.end(), suite) == c.suites.end()) continue;
    CheckResult r;
    r.id = c.id;
    r.name = c.name;
    r.suites = c.suites;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(r, threads);
    } catch (const std::exception& e) {
      r.passed = false;
      r.measured = NAN;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(r);
  }
  return out;
}

void write_report_json(std::ostream& os, const std::string& suite, const std::vector<CheckResult>& results) {
  auto num = [](double x) -> nlohmann::json {
    if (std::isfinite(x)) return x;
    return format_real(x);
  };
  auto arr = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"suites", r.suites},
                   {"passed", r.passed},
                   {"measured", num(r.measured)},
                   {"tolerance", num(r.tolerance)},
                   {"comparison", r.comparison},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
  }
  os << nlohmann::json{{"suite", suite}, {"passed", ok}, {"checks", arr}}.dump(2) << "\n";
}

void write_report_text(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": measured " << format_real(r.measured)
       << " (" << r.comparison << " " << format_real(r.tolerance) << ", " << fmt("%.2f", r.seconds) << " s) "
       << r.detail << "\n";
  }
}

}  // namespace hcav::app
