#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "hcav_app/checks.hpp"
#include "hcav_app/commands.hpp"
#include "hcav_app/config.hpp"

namespace {

// Exit codes: 0 ok, 1 incomplete output or failed checks, 2 bad input or solver error.
int dispatch(const hcav::app::ResolvedConfig& c) {
  using namespace hcav::app;
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + c.out + "'");
  }
  std::ostream& os = c.out.empty() ? std::cout : file;

  if (c.command == "verify") {
    auto results = run_checks(c.suite, c.threads);
    write_report_json(os, c.suite, results);
    write_report_text(std::cerr, results);
    for (const auto& r : results) {
      if (!r.passed) return 1;
    }
    return 0;
  }
  if (c.command == "find-degeneracy") {
    auto res = run_find_degeneracy(c);
    if (c.format == "json") {
      write_degeneracy_json(os, res.rows);
    } else {
      write_degeneracy_csv(os, res.rows);
    }
    if (res.rows.empty()) std::cerr << "no degeneracy found in the scanned range\n";
    return res.complete && !res.rows.empty() ? 0 : 1;
  }
  auto res = c.command == "spectrum" ? run_spectrum(c) : run_sweep(c);
  if (c.format == "json") {
    write_json(os, res.data);
  } else {
    write_csv(os, res.data);
  }
  if (!res.complete) std::cerr << "some requested levels were not found; see rows with status error\n";
  return res.complete ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy levels of a hydrogen atom in a spherical cavity"};
  app.require_subcommand(1);

  struct Flag {
    const char* key;
    const char* help;
  };
  static const Flag flags[] = {
      {"model", "schrodinger | pauli | dirac"},
      {"alpha", "fine-structure constant (Dirac), e.g. sqrt(15/16)"},
      {"l", "orbital quantum numbers, comma separated"},
      {"j", "total angular momenta for Pauli, one per --l"},
      {"k", "Dirac channel labels, comma separated (k<0 holds the ground state)"},
      {"R", "cavity radius in Bohr radii"},
      {"bc", "dirichlet | neumann | gamma=<x> | nu=<x> | angle=<theta>"},
      {"window", "energy window lo:hi"},
      {"levels", "number of lowest levels per channel"},
      {"nodes", "node counts to report, e.g. 0,1 or 0-3"},
      {"out", "output file (default stdout)"},
      {"format", "csv | json"},
      {"preset", "figure dataset preset for sweep"},
      {"threads", "worker threads for sweeps and verify"},
      {"steps", "integrator step count"},
      {"sweep", "R=a:b:n | inv_R=a:b:n | angle=a:b:n"},
      {"a", "first level, e.g. l=0,node=1"},
      {"b", "second level, e.g. l=2,node=0"},
      {"vary", "radius | gamma"},
      {"bracket", "lo:hi of the varied parameter"},
      {"suite", "all | schrodinger | dirac | pauli | symmetry"},
  };
  std::map<std::string, std::string> values;
  std::vector<CLI::Option*> options;
  for (const auto& f : flags) {
    options.push_back(app.add_option(std::string("--") + f.key, values[f.key], f.help));
  }
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with the same keys; flags take precedence");

  for (const char* name : {"spectrum", "sweep", "find-degeneracy", "verify"}) {
    app.add_subcommand(name)->fallthrough();
  }
  app.get_subcommand("spectrum")->description("levels at one radius");
  app.get_subcommand("sweep")->description("levels along a radius or boundary-angle grid");
  app.get_subcommand("find-degeneracy")->description("parameter where two levels cross");
  app.get_subcommand("verify")->description("run the acceptance checks and print a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    hcav::app::RawConfig raw;
    for (size_t i = 0; i < options.size(); ++i) {
      if (options[i]->count() > 0) raw[flags[i].key] = values[flags[i].key];
    }
    if (!config_path.empty()) hcav::app::merge_json_config(raw, config_path);
    const auto cfg = hcav::app::resolve(app.get_subcommands().front()->get_name(), raw);
    return dispatch(cfg);
  } catch (const hcav::app::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
