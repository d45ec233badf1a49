#include "hcav_app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hcav::app {
namespace {

std::string ref_label(const eigen::LevelRef& r) { return r.channel.label() + ",node=" + std::to_string(r.node_count); }

double splitting_or_nan(const CavityProblem& p, const ResolvedConfig& c) {
  try {
    return eigen::level_splitting(p, *c.level_a, *c.level_b, c.window, c.scan);
  } catch (const std::exception&) {
    return NAN;
  }
}

CavityProblem template_problem(const ResolvedConfig& c, const Channel& ch) {
  return CavityProblem(c.units, ch, c.bc_at(c.radius), c.radius);
}

}  // namespace

Row row_from(const std::string& series, double sweep_value, const eigen::EnergyLevel& level) {
  return {series,          sweep_value,        level.channel.label(), level.node_count, level.principal_label,
          level.energy,    level.residual,     eigen::to_string(level.engine), "ok"};
}

Row error_row(const std::string& series, double sweep_value, const Channel& channel, const std::string& message) {
  return {series, sweep_value, channel.label(), -1, -1, NAN, NAN, "", "error: " + message};
}

CommandOutput run_spectrum(const ResolvedConfig& c) {
  CommandOutput out;
  out.data.command = "spectrum";
  out.data.model = to_string(c.model);
  out.data.axis = "R";
  for (const auto& s : c.series) {
    CavityProblem p = template_problem(c, s.channel);
    if (!s.nodes.empty()) {
      for (int node : s.nodes) {
        try {
          out.data.rows.push_back(row_from(s.name, c.radius, eigen::find_level(p, node, c.window, c.scan)));
        } catch (const std::out_of_range& e) {
          out.data.rows.push_back(error_row(s.name, c.radius, s.channel, e.what()));
          out.complete = false;
        }
      }
      continue;
    }
    try {
      for (const auto& lev : eigen::scan_levels(p, c.window, s.levels, c.scan).levels) {
        out.data.rows.push_back(row_from(s.name, c.radius, lev));
      }
    } catch (const eigen::WindowTooSmall& e) {
      for (const auto& lev : e.partial().levels) out.data.rows.push_back(row_from(s.name, c.radius, lev));
      out.data.rows.push_back(error_row(s.name, c.radius, s.channel, e.what()));
      out.complete = false;
    }
  }
  return out;
}

CommandOutput run_sweep(const ResolvedConfig& c) {
  CommandOutput out;
  out.data.command = "sweep";
  out.data.model = to_string(c.model);
  out.data.axis = to_string(c.sweep->axis);

  const std::vector<double> values = c.sweep->values();
  std::vector<double> core(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    core[i] = c.sweep->axis == Axis::InverseRadius ? 1.0 / values[i] : values[i];
  }
  // the core wants an ascending grid; remember where each value came from
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return core[a] < core[b]; });
  std::vector<double> grid(order.size());
  for (size_t i = 0; i < order.size(); ++i) grid[i] = core[order[i]];
  std::vector<size_t> slot(order.size());
  for (size_t i = 0; i < order.size(); ++i) slot[order[i]] = i;

  const auto param = c.sweep->axis == Axis::Angle ? eigen::SweepParameter::GammaAngle : eigen::SweepParameter::Radius;
  std::vector<std::vector<eigen::SweepPoint>> per_series;
  for (const auto& s : c.series) {
    eigen::SweepOptions so;
    so.window = c.window;
    so.max_levels = s.nodes.empty() ? s.levels : 0;
    so.nodes = s.nodes;
    so.threads = c.threads;
    so.scan = c.scan;
    per_series.push_back(eigen::sweep(template_problem(c, s.channel), param, grid, so));
  }

  for (size_t i = 0; i < values.size(); ++i) {
    for (size_t k = 0; k < c.series.size(); ++k) {
      const auto& s = c.series[k];
      const auto& pt = per_series[k][slot[i]];
      for (const auto& lev : pt.levels) out.data.rows.push_back(row_from(s.name, values[i], lev));
      if (!pt.error.empty()) {
        out.data.rows.push_back(error_row(s.name, values[i], s.channel, pt.error));
        out.complete = false;
      }
    }
  }
  return out;
}

DegeneracyOutput run_find_degeneracy(const ResolvedConfig& c) {
  DegeneracyOutput out;
  const eigen::LevelRef& a = *c.level_a;
  const eigen::LevelRef& b = *c.level_b;
  const bool by_radius = c.vary == eigen::Vary::Radius;
  const std::string vary = by_radius ? "radius" : "gamma";
  const CavityProblem tmpl = template_problem(c, a.channel);

  auto emit = [&](const eigen::Degeneracy& d) {
    out.rows.push_back({vary, d.parameter, d.energy, d.splitting, ref_label(a), ref_label(b), "ok"});
  };
  auto refine = [&](double lo, double hi) {
    try {
      emit(eigen::locate_degeneracy(tmpl, a, b, c.vary, lo, hi, c.window, c.scan));
    } catch (const std::exception& e) {
      out.rows.push_back({vary, NAN, NAN, NAN, ref_label(a), ref_label(b), std::string("error: ") + e.what()});
      out.complete = false;
    }
  };

  if (c.bracket) {
    refine(c.bracket->first, c.bracket->second);
    return out;
  }

  // Coarse scan: geometric in R, uniform in arctan(gamma R) ending on Dirichlet.
  constexpr int kPoints = 40;
  std::vector<double> params(kPoints + 1);
  std::vector<double> split(kPoints + 1);
  const double half_pi = 2.0 * std::atan(1.0);
  for (int i = 0; i <= kPoints; ++i) {
    double x;
    if (by_radius) {
      x = 0.5 * std::pow(60.0, static_cast<double>(i) / kPoints);
      split[i] = splitting_or_nan(tmpl.with_radius(x), c);
    } else {
      const double theta = -half_pi + 2.0 * half_pi * (i + 1) / (kPoints + 1);
      x = i == kPoints ? INFINITY : std::tan(theta) / c.radius;
      split[i] = splitting_or_nan(tmpl.with_bc(BoundaryCondition::robin(x)), c);
    }
    params[i] = x;
  }
  constexpr double kOnGrid = 1e-9;
  for (int i = 0; i <= kPoints; ++i) {
    if (std::fabs(split[i]) <= kOnGrid) {
      CavityProblem p = by_radius ? tmpl.with_radius(params[i]) : tmpl.with_bc(BoundaryCondition::robin(params[i]));
      eigen::Degeneracy d;
      d.parameter = params[i];
      d.energy = eigen::find_level(p.with_channel(a.channel), a.node_count, c.window, c.scan).energy;
      d.splitting = split[i];
      emit(d);
      continue;
    }
    if (i == 0 || !std::isfinite(split[i]) || !std::isfinite(split[i - 1])) continue;
    if (std::fabs(split[i - 1]) <= kOnGrid) continue;
    if ((split[i - 1] < 0.0) != (split[i] < 0.0)) refine(params[i - 1], params[i]);
  }
  std::stable_sort(out.rows.begin(), out.rows.end(),
                   [](const DegeneracyRow& x, const DegeneracyRow& y) {
                     auto key = [](double v) { return std::isnan(v) ? INFINITY : v; };
                     return key(x.parameter) < key(y.parameter);
                   });
  return out;
}

}  // namespace hcav::app
