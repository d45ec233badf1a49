#include "hcav_app/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hcav_app/presets.hpp"
#include "json.hpp"

namespace hcav::app {
namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

double parse_plain(const std::string& s) {
  const std::string t = lower(trim(s));
  if (t == "inf" || t == "+inf" || t == "infinity") return INFINITY;
  if (t == "-inf" || t == "-infinity") return -INFINITY;
  if (t.empty()) throw ConfigError("empty number");
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || std::isnan(v)) throw ConfigError("not a number: '" + s + "'");
  return v;
}

std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  throw ConfigError("config: unsupported value " + v.dump());
}

const RawConfig::mapped_type* get(const RawConfig& raw, const std::string& key) {
  auto it = raw.find(key);
  return it == raw.end() ? nullptr : &it->second;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) {
    // ranges like 0-3 are handy for node lists
    auto dash = part.find('-', 1);
    if (dash != std::string::npos) {
      int a = parse_int(part.substr(0, dash)), b = parse_int(part.substr(dash + 1));
      if (b < a) throw ConfigError("bad range '" + part + "'");
      for (int i = a; i <= b; ++i) out.push_back(i);
    } else {
      out.push_back(parse_int(part));
    }
  }
  return out;
}

int pauli_j_sign(int l, double j) {
  const double d = 2.0 * (j - l);
  if (d == 1.0) return 1;
  if (d == -1.0 && l > 0) return -1;
  throw ConfigError("j = " + std::to_string(j) + " is not l +- 1/2 for l = " + std::to_string(l));
}

std::vector<Channel> channels_from(const RawConfig& raw, Model model) {
  std::vector<Channel> out;
  if (model == Model::Dirac) {
    for (int k : int_list(get(raw, "k") ? *get(raw, "k") : "-1")) {
      if (k == 0) throw ConfigError("k must be nonzero");
      out.push_back(Channel::dirac(k));
    }
    return out;
  }
  std::vector<int> ls = int_list(get(raw, "l") ? *get(raw, "l") : "0");
  for (int l : ls) {
    if (l < 0) throw ConfigError("l must be >= 0");
  }
  if (model == Model::Schrodinger) {
    for (int l : ls) out.push_back(Channel::schrodinger(l));
    return out;
  }
  std::vector<double> js;
  if (auto j = get(raw, "j")) {
    for (const auto& part : split(*j, ',')) js.push_back(parse_real(part));
    if (js.size() != ls.size()) throw ConfigError("--j needs one value per --l entry");
  } else {
    for (int l : ls) js.push_back(l + 0.5);
  }
  for (size_t i = 0; i < ls.size(); ++i) out.push_back(Channel::pauli(ls[i], pauli_j_sign(ls[i], js[i])));
  return out;
}

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
  auto c = text.find(':');
  if (c == std::string::npos) throw ConfigError(std::string(what) + " must be lo:hi");
  return {parse_real(text.substr(0, c)), parse_real(text.substr(c + 1))};
}

}  // namespace

void merge_json_text(RawConfig& raw, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  for (const auto& [key, v] : j.items()) {
    if (raw.count(key)) continue;  // flags win
    if (v.is_array()) {
      std::string joined;
      for (const auto& e : v) joined += (joined.empty() ? "" : ",") + json_scalar(e);
      raw[key] = joined;
    } else {
      raw[key] = json_scalar(v);
    }
  }
}

void merge_json_config(RawConfig& raw, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  merge_json_text(raw, ss.str());
}

double parse_real(const std::string& text) {
  std::string t = trim(text);
  bool neg = false;
  if (!t.empty() && t[0] == '-' && lower(t).rfind("-inf", 0) != 0) {
    neg = true;
    t = trim(t.substr(1));
  }
  double v;
  const std::string lt = lower(t);
  if (lt.rfind("sqrt(", 0) == 0 && !t.empty() && t.back() == ')') {
    double inner = parse_real(t.substr(5, t.size() - 6));
    if (inner < 0.0) throw ConfigError("sqrt of a negative number: '" + text + "'");
    v = std::sqrt(inner);
  } else if (auto slash = t.find('/'); slash != std::string::npos) {
    double num = parse_plain(t.substr(0, slash));
    double den = parse_plain(t.substr(slash + 1));
    if (den == 0.0) throw ConfigError("division by zero: '" + text + "'");
    v = num / den;
  } else {
    v = parse_plain(t);
  }
  return neg ? -v : v;
}

int parse_int(const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  long v = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size()) throw ConfigError("not an integer: '" + text + "'");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

BoundaryCondition parse_bc(const std::string& text, Model model, double radius) {
  const std::string t = lower(trim(text));
  if (t == "dirichlet") return BoundaryCondition::dirichlet();
  if (t == "neumann") return BoundaryCondition::neumann();
  auto eq = t.find('=');
  if (eq == std::string::npos) throw ConfigError("unknown boundary condition '" + text + "'");
  const std::string key = t.substr(0, eq);
  const double x = parse_real(t.substr(eq + 1));
  if (key == "gamma") {
    if (model == Model::Dirac) throw ConfigError("gamma= is for Schrodinger/Pauli; use nu= with Dirac");
    return BoundaryCondition::robin(x);
  }
  if (key == "nu") {
    if (model != Model::Dirac) throw ConfigError("nu= is for the Dirac model; use gamma=");
    return BoundaryCondition::dirac_nu(x);
  }
  if (key == "angle") {
    if (!(x > -std::numbers::pi / 2 && x <= std::numbers::pi / 2)) {
      throw ConfigError("angle must lie in (-pi/2, pi/2]");
    }
    return eigen::boundary_from_angle(model, x, radius);
  }
  throw ConfigError("unknown boundary condition '" + text + "'");
}

std::string to_string(Axis a) {
  switch (a) {
    case Axis::Radius:
      return "R";
    case Axis::InverseRadius:
      return "inv_R";
    case Axis::Angle:
      return "angle";
  }
  return "?";
}

std::vector<double> SweepSpec::values() const {
  std::vector<double> v(steps);
  for (int i = 0; i < steps; ++i) v[i] = start + (stop - start) * i / (steps - 1);
  v.back() = stop;
  return v;
}

SweepSpec parse_sweep(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw ConfigError("sweep must look like axis=start:stop:steps");
  const std::string axis = trim(text.substr(0, eq));
  auto parts = split(text.substr(eq + 1), ':');
  if (parts.size() != 3) throw ConfigError("sweep must look like axis=start:stop:steps");
  SweepSpec s;
  if (axis == "R") {
    s.axis = Axis::Radius;
  } else if (axis == "inv_R") {
    s.axis = Axis::InverseRadius;
  } else if (axis == "angle") {
    s.axis = Axis::Angle;
  } else {
    throw ConfigError("sweep axis must be R, inv_R or angle");
  }
  s.start = parse_real(parts[0]);
  s.stop = parse_real(parts[1]);
  s.steps = parse_int(parts[2]);
  if (s.steps < 2) throw ConfigError("sweep needs steps >= 2");
  if (!std::isfinite(s.start) || !std::isfinite(s.stop)) throw ConfigError("sweep bounds must be finite");
  if (s.axis != Axis::Angle && (s.start <= 0.0 || s.stop <= 0.0)) {
    throw ConfigError("radius sweeps need positive bounds");
  }
  if (s.axis == Axis::Angle) {
    const double half = 2.0 * std::atan(1.0);
    if (s.start <= -half - 1e-12 || s.stop <= -half - 1e-12 || s.start > half + 1e-12 || s.stop > half + 1e-12) {
      throw ConfigError("angle sweeps must stay inside (-pi/2, pi/2]");
    }
  }
  return s;
}

eigen::EnergyWindow parse_window(const std::string& text) {
  auto [lo, hi] = parse_pair(text, "window");
  eigen::EnergyWindow w{lo, hi};
  try {
    w.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return w;
}

eigen::LevelRef parse_level_ref(const std::string& text, Model model) {
  std::map<std::string, std::string> kv;
  for (const auto& part : split(text, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ConfigError("level reference '" + text + "': expected key=value pairs");
    kv[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
  }
  if (!kv.count("node")) throw ConfigError("level reference '" + text + "' needs node=");
  const int node = parse_int(kv["node"]);
  if (node < 0) throw ConfigError("node must be >= 0");
  RawConfig sub;
  for (const char* key : {"l", "j", "k"}) {
    if (kv.count(key)) sub[key] = kv[key];
  }
  if (model == Model::Dirac && (sub.count("l") || sub.count("j"))) throw ConfigError("Dirac levels use k=");
  if (model != Model::Dirac && sub.count("k")) throw ConfigError("k= is only for the Dirac model");
  if (model == Model::Schrodinger && sub.count("j")) throw ConfigError("j= is only for the Pauli model");
  if ((model == Model::Dirac && !sub.count("k")) || (model != Model::Dirac && !sub.count("l"))) {
    throw ConfigError("level reference '" + text + "' lacks its channel");
  }
  auto ch = channels_from(sub, model);
  if (ch.size() != 1) throw ConfigError("level reference '" + text + "' must name one channel");
  return {ch.front(), node};
}

ResolvedConfig resolve(const std::string& command, const RawConfig& raw) {
  static const std::vector<std::string> known = {"model", "alpha",  "l",      "j",       "k",      "R",
                                                 "bc",    "window", "levels", "nodes",   "out",    "format",
                                                 "preset", "threads", "steps", "sweep",  "a",      "b",
                                                 "vary",  "bracket", "suite"};
  for (const auto& [key, value] : raw) {
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown setting '" + key + "'");
  }
  if (command != "spectrum" && command != "sweep" && command != "find-degeneracy" && command != "verify") {
    throw ConfigError("unknown command '" + command + "'");
  }

  ResolvedConfig c;
  c.command = command;
  auto has = [&](const char* k) { return raw.count(k) > 0; };
  auto val = [&](const char* k) { return raw.at(k); };

  if (has("threads")) {
    c.threads = parse_int(val("threads"));
    if (c.threads < 1) throw ConfigError("threads must be >= 1");
  }
  if (has("steps")) {
    c.scan.integrator.step_count = parse_int(val("steps"));
    try {
      c.scan.integrator.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (has("out")) c.out = val("out");
  if (has("format")) {
    c.format = lower(val("format"));
    if (c.format != "csv" && c.format != "json") throw ConfigError("format must be csv or json");
  } else if (c.out.size() > 5 && c.out.substr(c.out.size() - 5) == ".json") {
    c.format = "json";
  }

  if (command == "verify") {
    for (const auto& [key, value] : raw) {
      if (key != "suite" && key != "out" && key != "format" && key != "threads" && key != "steps") {
        throw ConfigError("verify does not take --" + key);
      }
    }
    if (has("suite")) c.suite = val("suite");
    static const std::vector<std::string> suites = {"all", "schrodinger", "dirac", "pauli", "symmetry"};
    if (std::find(suites.begin(), suites.end(), c.suite) == suites.end()) {
      throw ConfigError("suite must be all, schrodinger, dirac, pauli or symmetry");
    }
    c.format = "json";
    return c;
  }
  if (has("suite")) throw ConfigError("--suite is only for verify");

  if (has("preset")) {
    if (command != "sweep") throw ConfigError("--preset is only for sweep");
    for (const char* k : {"model", "l", "j", "k", "R", "bc", "sweep", "levels", "nodes"}) {
      if (has(k)) throw ConfigError(std::string("--") + k + " cannot be combined with --preset");
    }
    const Preset& pr = find_preset(val("preset"));
    c.preset = pr.name;
    c.model = pr.model;
    double alpha = pr.alpha;
    if (has("alpha")) {
      if (pr.model != Model::Dirac) throw ConfigError("--alpha only applies to Dirac presets");
      alpha = parse_real(val("alpha"));
    }
    try {
      c.units = pr.model == Model::Dirac     ? UnitSystem::dirac(alpha)
                : pr.model == Model::Pauli ? UnitSystem::pauli()
                                           : UnitSystem::schrodinger();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    c.series = pr.series;
    c.bc_text = pr.bc;
    c.radius = pr.radius;
    c.sweep = pr.sweep;
    c.window = has("window") ? parse_window(val("window")) : pr.window;
    return c;
  }

  try {
    c.model = model_from_string(has("model") ? lower(val("model")) : "schrodinger");
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (c.model == Model::Dirac) {
    if (has("l") || has("j")) throw ConfigError("the Dirac model takes --k, not --l/--j");
    if (!has("alpha")) throw ConfigError("the Dirac model needs --alpha");
    try {
      c.units = UnitSystem::dirac(parse_real(val("alpha")));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else {
    if (has("alpha")) throw ConfigError("--alpha only applies to the Dirac model");
    if (has("k")) throw ConfigError("--k only applies to the Dirac model");
    if (c.model == Model::Schrodinger && has("j")) throw ConfigError("--j only applies to the Pauli model");
    c.units = c.model == Model::Pauli ? UnitSystem::pauli() : UnitSystem::schrodinger();
  }

  std::vector<Channel> channels;
  try {
    channels = channels_from(raw, c.model);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  for (const auto& ch : channels) {
    if (c.model == Model::Dirac && !(c.units.alpha() < std::abs(ch.k()))) {
      throw ConfigError("alpha must be below |k|");
    }
  }

  std::vector<int> nodes;
  int levels = 3;
  if (has("nodes") && has("levels")) throw ConfigError("give either --nodes or --levels");
  if (has("nodes")) {
    nodes = int_list(val("nodes"));
    for (int n : nodes) {
      if (n < 0) throw ConfigError("node counts must be >= 0");
    }
  }
  if (has("levels")) {
    levels = parse_int(val("levels"));
    if (levels < 1) throw ConfigError("levels must be >= 1");
  }
  for (const auto& ch : channels) c.series.push_back({ch.label(), ch, nodes, nodes.empty() ? levels : 0});

  c.window = has("window") ? parse_window(val("window")) : eigen::EnergyWindow::defaults(c.model);
  if (command == "find-degeneracy" && !has("window")) {
    // levels move a long way over a radius scan
    c.window = c.model == Model::Dirac ? eigen::EnergyWindow{-1.0, 50.0} : eigen::EnergyWindow{-200.0, 2000.0};
  }
  if (has("bc")) c.bc_text = val("bc");

  if (command == "sweep") {
    if (!has("sweep")) throw ConfigError("sweep needs --sweep axis=start:stop:steps or --preset");
    c.sweep = parse_sweep(val("sweep"));
    if (c.sweep->axis == Axis::Angle) {
      if (!has("R")) throw ConfigError("angle sweeps need --R");
    } else if (has("R")) {
      throw ConfigError("--R conflicts with a radius sweep");
    }
  } else if (has("sweep")) {
    throw ConfigError("--sweep is only for the sweep command");
  }

  if (has("R")) {
    c.radius = parse_real(val("R"));
    if (!(c.radius > 0.0) || !std::isfinite(c.radius)) throw ConfigError("R must be positive and finite");
  } else if (command == "spectrum") {
    throw ConfigError("spectrum needs --R");
  }

  // Catch a malformed boundary spec before any work starts.
  c.bc_at(c.radius);

  if (command == "find-degeneracy") {
    if (has("levels") || has("nodes")) throw ConfigError("find-degeneracy takes --a/--b instead of --levels/--nodes");
    if (has("a")) c.level_a = parse_level_ref(val("a"), c.model);
    if (has("b")) c.level_b = parse_level_ref(val("b"), c.model);
    if (!c.level_a || !c.level_b) {
      if (c.model != Model::Schrodinger) throw ConfigError("find-degeneracy needs --a and --b for this model");
      const int l = channels.front().l();
      if (!c.level_a) c.level_a = eigen::LevelRef{Channel::schrodinger(l), 1};
      if (!c.level_b) c.level_b = eigen::LevelRef{Channel::schrodinger(l + 2), 0};
    }
    const std::string vary = has("vary") ? lower(val("vary")) : "radius";
    if (vary == "radius" || vary == "r") {
      c.vary = eigen::Vary::Radius;
    } else if (vary == "gamma") {
      c.vary = eigen::Vary::Gamma;
      if (c.model == Model::Dirac) throw ConfigError("--vary gamma needs a Robin family (Schrodinger or Pauli)");
      if (!has("R")) throw ConfigError("--vary gamma needs --R");
    } else {
      throw ConfigError("vary must be radius or gamma");
    }
    if (has("bracket")) {
      c.bracket = parse_pair(val("bracket"), "bracket");
      if (c.vary == eigen::Vary::Radius && !(c.bracket->first > 0.0 && c.bracket->first < c.bracket->second)) {
        throw ConfigError("radius bracket must satisfy 0 < lo < hi");
      }
    }
  } else {
    for (const char* k : {"a", "b", "vary", "bracket"}) {
      if (has(k)) throw ConfigError(std::string("--") + k + " is only for find-degeneracy");
    }
  }
  return c;
}

}  // namespace hcav::app
