#pragma once

#include <vector>

#include "hcav_app/config.hpp"
#include "hcav_app/dataset.hpp"

namespace hcav::app {

/// A dataset plus whether every requested level was found.
struct CommandOutput {
  Dataset data;
  bool complete = true;
};

CommandOutput run_spectrum(const ResolvedConfig& c);
/// Failed points become rows whose status starts with "error:".
CommandOutput run_sweep(const ResolvedConfig& c);

struct DegeneracyOutput {
  std::vector<DegeneracyRow> rows;
  bool complete = true;
};
/// With a bracket: one root of E_a - E_b inside it. Without: every crossing
/// found on a coarse scan of the default range, each refined.
DegeneracyOutput run_find_degeneracy(const ResolvedConfig& c);

Row row_from(const std::string& series, double sweep_value, const eigen::EnergyLevel& level);
Row error_row(const std::string& series, double sweep_value, const Channel& channel, const std::string& message);

}  // namespace hcav::app
