#pragma once

// Run configuration for the command-line tool: raw key/value settings from
// flags and an optional JSON file, resolved into typed problem descriptions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcav/eigensolve.hpp"
#include "hcav/problem.hpp"

namespace hcav::app {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flag name (without dashes) -> textual value. Lists are comma separated.
using RawConfig = std::map<std::string, std::string>;

/// Fills keys missing from `raw` with the values of a JSON object file.
void merge_json_config(RawConfig& raw, const std::string& path);
void merge_json_text(RawConfig& raw, const std::string& text);

/// Number with optional a/b fraction and sqrt(...) wrapper, plus inf/-inf.
double parse_real(const std::string& text);
int parse_int(const std::string& text);
std::vector<std::string> split(const std::string& text, char sep);

/// Boundary spec: dirichlet | neumann | gamma=<x> | nu=<x> | angle=<theta>.
/// Angles are arctan(gamma R) (Schrodinger, Pauli) or arctan(nu) (Dirac).
BoundaryCondition parse_bc(const std::string& text, Model model, double radius);

enum class Axis { Radius, InverseRadius, Angle };
std::string to_string(Axis a);

struct SweepSpec {
  Axis axis = Axis::Radius;
  double start = 0.0;
  double stop = 0.0;
  int steps = 2;
  std::vector<double> values() const;
};
/// axis=start:stop:steps with axis in {R, inv_R, angle} and steps >= 2.
SweepSpec parse_sweep(const std::string& text);

eigen::EnergyWindow parse_window(const std::string& text);

/// One line of output: a channel and which of its levels to report.
struct Series {
  std::string name;
  Channel channel;
  std::vector<int> nodes;  // empty: lowest `levels` levels
  int levels = 0;
};

/// "l=0,node=1", "l=1,j=3/2,node=0", "k=-1,node=1".
eigen::LevelRef parse_level_ref(const std::string& text, Model model);

struct ResolvedConfig {
  std::string command;
  Model model = Model::Schrodinger;
  UnitSystem units = UnitSystem::schrodinger();
  std::vector<Series> series;
  std::string bc_text = "dirichlet";
  double radius = 1.0;
  std::optional<SweepSpec> sweep;
  eigen::EnergyWindow window{-0.6, 2.0};
  int threads = 1;
  eigen::ScanOptions scan;
  std::string out;
  std::string format = "csv";
  std::string preset;
  // find-degeneracy
  std::optional<eigen::LevelRef> level_a;
  std::optional<eigen::LevelRef> level_b;
  eigen::Vary vary = eigen::Vary::Radius;
  std::optional<std::pair<double, double>> bracket;
  // verify
  std::string suite = "all";

  BoundaryCondition bc_at(double radius) const { return parse_bc(bc_text, model, radius); }
};

/// Validates and types the raw settings for the given command. Presets fill
/// in model, channels, boundary and sweep; explicit settings for alpha,
/// window, steps, threads, out and format still apply on top.
ResolvedConfig resolve(const std::string& command, const RawConfig& raw);

}  // namespace hcav::app
