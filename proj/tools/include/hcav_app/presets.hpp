#pragma once

// Built-in sweep setups that regenerate the figure datasets.

#include <string>
#include <vector>

#include "hcav_app/config.hpp"

namespace hcav::app {

struct Preset {
  std::string name;
  std::string description;
  Model model = Model::Schrodinger;
  double alpha = 0.0;  // Dirac only; overridable with --alpha
  std::string bc;
  double radius = 1.0;  // used by angle sweeps
  SweepSpec sweep;
  eigen::EnergyWindow window{-0.6, 2.0};
  std::vector<Series> series;
};

const std::vector<Preset>& presets();
/// Throws ConfigError listing the known names.
const Preset& find_preset(const std::string& name);

}  // namespace hcav::app
