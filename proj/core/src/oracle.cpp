#include "hcav/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hcav::oracle {
namespace {

constexpr double kRescaleHigh = 1e200;
constexpr double kRescaleLow = 1e-200;
constexpr int kFrobeniusTerms = 6;

struct State {
  double y0;
  double y1;
  double log_scale;
};

inline void rk4_step(const RadialSystem& sys, double rho_a, double rho_m, double rho_b, double h,
                     double& y0, double& y1) {
  auto a = sys.coefficients(rho_a);
  auto m = sys.coefficients(rho_m);
  auto b = sys.coefficients(rho_b);
  double k10 = a.a00 * y0 + a.a01 * y1;
  double k11 = a.a10 * y0 + a.a11 * y1;
  double t0 = y0 + 0.5 * h * k10;
  double t1 = y1 + 0.5 * h * k11;
  double k20 = m.a00 * t0 + m.a01 * t1;
  double k21 = m.a10 * t0 + m.a11 * t1;
  t0 = y0 + 0.5 * h * k20;
  t1 = y1 + 0.5 * h * k21;
  double k30 = m.a00 * t0 + m.a01 * t1;
  double k31 = m.a10 * t0 + m.a11 * t1;
  t0 = y0 + h * k30;
  t1 = y1 + h * k31;
  double k40 = b.a00 * t0 + b.a01 * t1;
  double k41 = b.a10 * t0 + b.a11 * t1;
  y0 += h / 6.0 * (k10 + 2.0 * k20 + 2.0 * k30 + k40);
  y1 += h / 6.0 * (k11 + 2.0 * k21 + 2.0 * k31 + k41);
}

inline void renormalize(State& s) {
  double m = std::max(std::fabs(s.y0), std::fabs(s.y1));
  if (m > kRescaleHigh || (m < kRescaleLow && m > 0.0)) {
    double lm = std::log(m);
    s.y0 /= m;
    s.y1 /= m;
    s.log_scale += lm;
  }
}

// Line angle of (y0, y1) reduced to [0, pi).
double line_angle(double y0, double y1) {
  double phi = std::atan2(y0, y1);
  if (y0 < 0.0) phi += std::numbers::pi;
  return phi;
}

struct Recorder {
  std::vector<double> y0, y1, ls;
  void resize(int n) {
    y0.assign(n, 0.0);
    y1.assign(n, 0.0);
    ls.assign(n, 0.0);
  }
  void put(int i, const State& s) {
    y0[i] = s.y0;
    y1[i] = s.y1;
    ls[i] = s.log_scale;
  }
};

// Integrates from node `from` to node `to` (either direction), returning the
// final state and the net count of upward crossings of y0 through zero.
State integrate(const RadialSystem& sys, const RadialGrid& grid, int from, int to, State s,
                int* crossings, Recorder* rec) {
  if (rec) rec->put(from, s);
  int net = 0;
  const int dir = to >= from ? 1 : -1;
  const double h = dir * grid.h();
  for (int i = from; i != to; i += dir) {
    int j = i + dir;
    int mid = std::min(i, j);
    double prev0 = s.y0;
    double prev1 = s.y1;
    rk4_step(sys, grid.rho(i), grid.rho_mid(mid), grid.rho(j), h, s.y0, s.y1);
    if ((prev0 < 0.0) != (s.y0 < 0.0)) {
      double dy = s.y0 - prev0;
      double y1 = 0.5 * (prev1 + s.y1);
      // Upward passage through a multiple of pi has dy0 and y1 of equal sign.
      net += ((dy > 0.0) == (y1 > 0.0)) ? 1 : -1;
    }
    renormalize(s);
    if (rec) rec->put(j, s);
  }
  if (crossings) *crossings = net;
  return s;
}

State outward_start(const RadialSystem& sys, const RadialGrid& grid) {
  State s{};
  sys.frobenius_start(grid.rho(0), s.y0, s.y1);
  double m = std::max(std::fabs(s.y0), std::fabs(s.y1));
  s.y0 /= m;
  s.y1 /= m;
  s.log_scale = std::log(m);
  return s;
}

void fill_trajectory(const RadialSystem& sys, const RadialGrid& grid, const Recorder& rec,
                     double ref_scale, Trajectory& out) {
  const int n = grid.steps() + 1;
  out.r = grid.nodes();
  out.psi.resize(n);
  out.dpsi.resize(n);
  out.psi_b.resize(n);
  out.y0.resize(n);
  out.y1.resize(n);
  for (int i = 0; i < n; ++i) {
    double f = std::exp(rec.ls[i] - ref_scale);
    double y0 = rec.y0[i] * f;
    double y1 = rec.y1[i] * f;
    out.y0[i] = y0;
    out.y1[i] = y1;
    RadialPoint p = sys.to_point(grid.rho(i), y0, y1);
    out.psi[i] = p.psi;
    out.dpsi[i] = p.dpsi;
    out.psi_b[i] = p.psi_b;
  }
}

}  // namespace

void IntegratorConfig::validate() const {
  if (step_count < 1000) throw std::invalid_argument("integrator: step_count must be >= 1000");
  if (!(start_fraction > 0.0 && start_fraction <= 1e-3)) {
    throw std::invalid_argument("integrator: start_fraction must lie in (0, 1e-3]");
  }
  if (method_order != 4) throw std::invalid_argument("integrator: only method_order 4 (RK4) is available");
}

RadialGrid::RadialGrid(double radius, const IntegratorConfig& cfg) : steps_(cfg.step_count) {
  cfg.validate();
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("grid: radius must be positive and finite");
  }
  const double x0 = std::log(cfg.start_fraction * radius);
  const double x1 = std::log(radius);
  h_ = (x1 - x0) / steps_;
  rho_.resize(steps_ + 1);
  mid_.resize(steps_);
  for (int i = 0; i <= steps_; ++i) rho_[i] = std::exp(x0 + i * h_);
  for (int i = 0; i < steps_; ++i) mid_[i] = std::exp(x0 + (i + 0.5) * h_);
  rho_.back() = radius;
}

RadialSystem RadialSystem::schrodinger(double eps, int l) {
  if (!std::isfinite(eps)) throw std::invalid_argument("radial system: non-finite energy");
  if (l < 0) throw std::invalid_argument("radial system: l must be non-negative");
  RadialSystem s;
  s.eps_ = eps;
  s.l_ = l;
  return s;
}

RadialSystem RadialSystem::dirac(double eps, int k, double alpha) {
  if (!std::isfinite(eps)) throw std::invalid_argument("radial system: non-finite energy");
  if (k == 0) throw std::invalid_argument("radial system: k must be nonzero");
  if (!(alpha > 0.0)) throw std::invalid_argument("radial system: alpha must be positive");
  if (!(alpha < std::abs(k))) throw std::domain_error("radial system: alpha >= |k| is not supported");
  RadialSystem s;
  s.dirac_ = true;
  s.eps_ = eps;
  s.kappa_ = -k;
  s.alpha_ = alpha;
  s.s_ = std::sqrt(static_cast<double>(k) * k - alpha * alpha);
  return s;
}

RadialSystem RadialSystem::for_problem(const CavityProblem& p, double eps) {
  if (p.model() == Model::Dirac) return dirac(eps, p.channel.k(), p.units.alpha());
  return schrodinger(eps, p.channel.l());
}

RadialSystem::Matrix RadialSystem::coefficients(double rho) const {
  if (dirac_) {
    return {static_cast<double>(kappa_), (eps_ + 1.0) * rho / alpha_ + alpha_,
            -((eps_ - 1.0) * rho / alpha_ + alpha_), -static_cast<double>(kappa_)};
  }
  return {0.0, 1.0, l_ * (l_ + 1.0) - 2.0 * rho - 2.0 * eps_ * rho * rho, 1.0};
}

void RadialSystem::frobenius_start(double rho, double& y0, double& y1) const {
  // Power prefactor rho^(l+1) or rho^s is dropped; only the ratio y1/y0 and
  // the overall sign matter to the shooting.
  if (dirac_) {
    double a[kFrobeniusTerms];
    double b[kFrobeniusTerms];
    a[0] = 1.0;
    b[0] = (s_ - kappa_) / alpha_;
    for (int j = 1; j < kFrobeniusTerms; ++j) {
      double det = j * (2.0 * s_ + j);
      double p = (eps_ + 1.0) / alpha_ * b[j - 1];
      double q = -(eps_ - 1.0) / alpha_ * a[j - 1];
      a[j] = ((s_ + j + kappa_) * p + alpha_ * q) / det;
      b[j] = ((s_ + j - kappa_) * q - alpha_ * p) / det;
    }
    double sa = 0.0, sb = 0.0, pw = 1.0;
    for (int j = 0; j < kFrobeniusTerms; ++j) {
      sa += a[j] * pw;
      sb += b[j] * pw;
      pw *= rho;
    }
    y0 = sa;
    y1 = sb;
    return;
  }
  double c[kFrobeniusTerms];
  c[0] = 1.0;
  for (int j = 1; j < kFrobeniusTerms; ++j) {
    double prev2 = j >= 2 ? c[j - 2] : 0.0;
    c[j] = (-2.0 * c[j - 1] - 2.0 * eps_ * prev2) / (j * (j + 2.0 * l_ + 1.0));
  }
  double su = 0.0, sp = 0.0, pw = 1.0;
  for (int j = 0; j < kFrobeniusTerms; ++j) {
    su += c[j] * pw;
    sp += (j + l_ + 1.0) * c[j] * pw;
    pw *= rho;
  }
  y0 = su;
  y1 = sp;
}

void RadialSystem::boundary_coefficients(const BoundaryCondition& bc, double radius, double& c0,
                                         double& c1) const {
  if (dirac_) {
    c0 = bc.u();
    c1 = bc.v();
  } else {
    // u psi + v psi' = 0 with psi = y0/R and psi' = (y1 - y0)/R^2.
    c0 = bc.u() * radius - bc.v();
    c1 = bc.v();
  }
}

RadialPoint RadialSystem::to_point(double rho, double y0, double y1) const {
  RadialPoint p;
  p.r = rho;
  if (dirac_) {
    auto a = coefficients(rho);
    p.psi = y0 / rho;
    p.psi_b = y1 / rho;
    p.dpsi = (a.a00 * y0 + a.a01 * y1 - y0) / (rho * rho);
  } else {
    p.psi = y0 / rho;
    p.dpsi = (y1 - y0) / (rho * rho);
  }
  return p;
}

ShootResult shoot(const RadialSystem& sys, const RadialGrid& grid, Trajectory* record) {
  State s = outward_start(sys, grid);
  Recorder rec;
  if (record) rec.resize(grid.steps() + 1);
  int crossings = 0;
  s = integrate(sys, grid, 0, grid.steps(), s, &crossings, record ? &rec : nullptr);

  ShootResult r;
  r.at_R = sys.to_point(grid.radius(), s.y0, s.y1);
  r.log_scale = s.log_scale;
  r.phase = crossings * std::numbers::pi + line_angle(s.y0, s.y1);
  // The start angle lies in (0, pi) and the angle only moves up through
  // multiples of pi, so each multiple passed is one zero of y0 in (r0, R].
  r.node_count = std::max(0, static_cast<int>(std::floor(r.phase / std::numbers::pi + 1e-9)));
  if (record) fill_trajectory(sys, grid, rec, s.log_scale, *record);
  return r;
}

ShootResult shoot_schrodinger(double eps, int l, double radius, const IntegratorConfig& cfg) {
  RadialGrid grid(radius, cfg);
  return shoot(RadialSystem::schrodinger(eps, l), grid);
}

ShootResult shoot_dirac(double eps, int k, double alpha, double radius,
                        const IntegratorConfig& cfg) {
  RadialGrid grid(radius, cfg);
  return shoot(RadialSystem::dirac(eps, k, alpha), grid);
}

double boundary_phase(const RadialSystem& sys, const BoundaryCondition& bc, double radius) {
  double c0, c1;
  sys.boundary_coefficients(bc, radius, c0, c1);
  double phi = std::atan2(c1, -c0);
  while (phi <= 0.0) phi += std::numbers::pi;
  while (phi > std::numbers::pi) phi -= std::numbers::pi;
  return phi;
}

namespace {

// Local squared momentum in x; positive where the solution oscillates.
double local_momentum(const RadialSystem& sys, double rho) {
  auto a = sys.coefficients(rho);
  if (sys.is_dirac()) return -a.a01 * a.a10 - a.a00 * a.a00;
  return -a.a10;
}

// Outermost classically allowed node. Without any allowed node, match where
// the barrier is thinnest.
int matching_index(const RadialSystem& sys, const RadialGrid& grid) {
  int best = grid.steps();
  double best_q = -INFINITY;
  for (int i = grid.steps(); i >= 0; --i) {
    double q = local_momentum(sys, grid.rho(i));
    if (q > 0.0) return i;
    if (q > best_q) {
      best_q = q;
      best = i;
    }
  }
  return best;
}

}  // namespace

MatchedShot matched_shot(const RadialSystem& sys, const RadialGrid& grid,
                         const BoundaryCondition& bc, Trajectory* record) {
  const int n = grid.steps();
  const int m = matching_index(sys, grid);

  Recorder rec_out;
  Recorder rec_in;
  if (record) {
    rec_out.resize(n + 1);
    rec_in.resize(n + 1);
  }
  State out = integrate(sys, grid, 0, m, outward_start(sys, grid), nullptr,
                        record ? &rec_out : nullptr);

  double c0, c1;
  sys.boundary_coefficients(bc, grid.radius(), c0, c1);
  State in{c1, -c0, 0.0};
  in = integrate(sys, grid, n, m, in, nullptr, record ? &rec_in : nullptr);

  double no = std::hypot(out.y0, out.y1);
  double ni = std::hypot(in.y0, in.y1);
  MatchedShot res;
  res.match_index = m;
  res.determinant = (out.y0 * in.y1 - out.y1 * in.y0) / (no * ni);

  if (record) {
    // Scale the inward branch onto the outward one at the matching node.
    double lam = (out.y0 * in.y0 + out.y1 * in.y1) / (ni * ni);
    Recorder merged;
    merged.resize(n + 1);
    for (int i = 0; i <= m; ++i) {
      merged.y0[i] = rec_out.y0[i];
      merged.y1[i] = rec_out.y1[i];
      merged.ls[i] = rec_out.ls[i];
    }
    for (int i = m + 1; i <= n; ++i) {
      merged.y0[i] = rec_in.y0[i] * lam;
      merged.y1[i] = rec_in.y1[i] * lam;
      merged.ls[i] = rec_in.ls[i] - in.log_scale + out.log_scale;
    }
    double ref = *std::max_element(merged.ls.begin(), merged.ls.end());
    fill_trajectory(sys, grid, merged, ref, *record);
  }
  return res;
}

int count_nodes(const std::vector<double>& values, double rel_floor) {
  double mx = 0.0;
  for (double v : values) mx = std::max(mx, std::fabs(v));
  if (mx == 0.0) return 0;
  const double floor = rel_floor * mx;
  int count = 0;
  int last_sign = 0;
  for (double v : values) {
    if (std::fabs(v) <= floor) continue;
    int sg = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sg != last_sign) ++count;
    last_sign = sg;
  }
  return count;
}

double integrate_dr(const RadialGrid& grid, const std::vector<double>& f) {
  const int n = grid.steps();
  if (static_cast<int>(f.size()) != n + 1) {
    throw std::invalid_argument("integrate_dr: sample count does not match the grid");
  }
  auto g = [&](int i) { return f[i] * grid.rho(i); };
  const double h = grid.h();
  double total = 0.0;
  // Piece [0, r0]: assume f ~ r^p there, with p read off the first step.
  if (f[0] != 0.0 && f[1] != 0.0 && (f[0] > 0.0) == (f[1] > 0.0)) {
    double p = std::log(f[1] / f[0]) / h;
    if (p > -1.0) total += f[0] * grid.rho(0) / (p + 1.0);
  }
  int simpson_end = (n % 2 == 0) ? n : n - 3;
  for (int i = 0; i + 2 <= simpson_end; i += 2) {
    total += h / 3.0 * (g(i) + 4.0 * g(i + 1) + g(i + 2));
  }
  if (simpson_end != n) {
    int i = simpson_end;
    total += 3.0 * h / 8.0 * (g(i) + 3.0 * g(i + 1) + 3.0 * g(i + 2) + g(i + 3));
  }
  return total;
}

}  // namespace hcav::oracle
