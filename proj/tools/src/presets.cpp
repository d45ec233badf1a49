#include "hcav_app/presets.hpp"

#include <cmath>

namespace hcav::app {
namespace {

Series by_nodes(Channel ch, std::vector<int> nodes) { return {ch.label(), ch, std::move(nodes), 0}; }
Series lowest(Channel ch, int n) { return {ch.label(), ch, {}, n}; }

std::vector<Series> fig1_series() {
  return {by_nodes(Channel::schrodinger(0), {0, 1, 2}), by_nodes(Channel::schrodinger(1), {0, 1}),
          by_nodes(Channel::schrodinger(2), {0})};
}

std::vector<Series> fig3_series() {
  return {by_nodes(Channel::schrodinger(0), {0, 1, 2, 3}), by_nodes(Channel::schrodinger(2), {0, 1})};
}

std::vector<Series> fig4_series() {
  return {lowest(Channel::dirac(-1), 2), lowest(Channel::dirac(1), 1), lowest(Channel::dirac(-2), 1)};
}

std::vector<Series> fig7_series(bool p_half, bool p_three_half, bool f_five_half, bool f_seven_half) {
  std::vector<Series> s;
  if (p_half) s.push_back(by_nodes(Channel::pauli(1, -1), {0, 1, 2, 3}));
  if (p_three_half) s.push_back(by_nodes(Channel::pauli(1, 1), {0, 1, 2, 3}));
  if (f_five_half) s.push_back(by_nodes(Channel::pauli(3, -1), {0, 1}));
  if (f_seven_half) s.push_back(by_nodes(Channel::pauli(3, 1), {0, 1}));
  return s;
}

std::vector<Preset> build() {
  const double half_pi = 2.0 * std::atan(1.0);
  const double alpha = std::sqrt(15.0 / 16.0);
  const SweepSpec inv_r{Axis::InverseRadius, 0.02, 1.2, 60};
  const SweepSpec angle{Axis::Angle, -1.5, half_pi, 64};
  std::vector<Preset> p;

  p.push_back({"fig1", "Schrodinger, Dirichlet wall, levels against a/R", Model::Schrodinger, 0.0, "dirichlet",
               1.0, inv_r, {-0.6, 200.0}, fig1_series()});
  p.push_back({"fig2", "Schrodinger, Neumann wall, levels against a/R", Model::Schrodinger, 0.0, "neumann", 1.0,
               inv_r, {-10.0, 200.0}, fig1_series()});
  p.push_back({"fig3-top", "Schrodinger, gamma = 1, s and d levels against a/R", Model::Schrodinger, 0.0, "gamma=1",
               1.0, inv_r, {-10.0, 300.0}, fig3_series()});
  p.push_back({"fig3-bottom", "Schrodinger, R = 2, s and d levels against arctan(gamma R)", Model::Schrodinger, 0.0,
               "dirichlet", 2.0, angle, {-100.0, 200.0}, fig3_series()});

  const SweepSpec inv_r_dirac{Axis::InverseRadius, 0.02, 1.0, 50};
  p.push_back({"fig4", "Dirac, psi_A(R) = 0, levels against a/R", Model::Dirac, alpha, "dirichlet", 1.0, inv_r_dirac,
               {0.0, 15.0}, fig4_series()});
  p.push_back({"fig5", "Dirac, nu = 0, levels against a/R", Model::Dirac, alpha, "nu=0", 1.0, inv_r_dirac,
               {-0.95, 15.0}, fig4_series()});

  p.push_back({"fig6", "Pauli, Neumann wall, fine-structure levels against a/R", Model::Pauli, 0.0, "neumann", 1.0,
               inv_r,
               {-10.0, 200.0},
               {by_nodes(Channel::pauli(0, 1), {0, 1, 2}), by_nodes(Channel::pauli(1, -1), {0, 1}),
                by_nodes(Channel::pauli(1, 1), {0, 1}), by_nodes(Channel::pauli(2, -1), {0}),
                by_nodes(Channel::pauli(2, 1), {0})}});

  p.push_back({"fig7-top-left", "Pauli, gamma = -1/12, P and F levels against a/R", Model::Pauli, 0.0,
               "gamma=-1/12", 1.0, SweepSpec{Axis::InverseRadius, 0.05, 0.2, 61}, {-1.0, 5.0},
               fig7_series(true, true, true, true)});
  p.push_back({"fig7-top-right", "Pauli, R = 42/5, P3/2 and F7/2 against arctan(gamma R)", Model::Pauli, 0.0,
               "dirichlet", 42.0 / 5.0, angle, {-100.0, 20.0}, fig7_series(false, true, false, true)});
  p.push_back({"fig7-bottom-left", "Pauli, R = 12, P1/2 and F7/2 against arctan(gamma R)", Model::Pauli, 0.0,
               "dirichlet", 12.0, angle, {-100.0, 20.0}, fig7_series(true, false, false, true)});
  p.push_back({"fig7-bottom-right", "Pauli, R = 18/5, P1/2 and F5/2 against arctan(gamma R)", Model::Pauli, 0.0,
               "dirichlet", 18.0 / 5.0, angle, {-100.0, 40.0}, fig7_series(true, false, true, false)});
  return p;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build();
  return all;
}

const Preset& find_preset(const std::string& name) {
  std::string names;
  for (const auto& p : presets()) {
    if (p.name == name) return p;
    names += (names.empty() ? "" : ", ") + p.name;
  }
  throw ConfigError("unknown preset '" + name + "' (known: " + names + ")");
}

}  // namespace hcav::app
