#include "hcav_app/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace hcav::app {
namespace {

double parse_field_real(const std::string& s) {
  if (s.empty()) throw std::runtime_error("csv: empty numeric field");
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw std::runtime_error("csv: bad number '" + s + "'");
  return v;
}

int parse_field_int(const std::string& s) {
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size()) throw std::runtime_error("csv: bad integer '" + s + "'");
  return static_cast<int>(v);
}

nlohmann::json json_real(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

bool Row::operator==(const Row& o) const {
  auto same = [](double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || (a == b && std::signbit(a) == std::signbit(b));
  };
  return series == o.series && same(sweep_value, o.sweep_value) && channel == o.channel &&
         node_count == o.node_count && principal_label == o.principal_label && same(energy, o.energy) &&
         same(residual, o.residual) && engine == o.engine && status == o.status;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {"series", "sweep_value",     "channel", "node_count", "principal_label",
                                                "energy", "residual",        "engine",  "status"};
  return cols;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& os, const Dataset& d) {
  const auto& cols = csv_columns();
  for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\r\n";
  for (const auto& r : d.rows) {
    os << csv_field(r.series) << ',' << format_real(r.sweep_value) << ',' << csv_field(r.channel) << ','
       << r.node_count << ',' << r.principal_label << ',' << format_real(r.energy) << ','
       << format_real(r.residual) << ',' << csv_field(r.engine) << ',' << csv_field(r.status) << "\r\n";
  }
}

bool read_csv_record(std::istream& is, std::vector<std::string>& fields) {
  fields.clear();
  std::string cur;
  bool quoted = false;
  bool any = false;
  char c;
  while (is.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (is.peek() == '"') {
          is.get(c);
          cur += '"';
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c == '\r') {
      if (is.peek() == '\n') is.get(c);
      break;
    } else if (c == '\n') {
      break;
    } else {
      cur += c;
    }
  }
  if (quoted) throw std::runtime_error("csv: unterminated quoted field");
  if (!any) return false;
  fields.push_back(cur);
  return true;
}

Dataset read_csv(std::istream& is) {
  Dataset d;
  std::vector<std::string> f;
  if (!read_csv_record(is, f) || f != csv_columns()) throw std::runtime_error("csv: unexpected header");
  while (read_csv_record(is, f)) {
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != csv_columns().size()) throw std::runtime_error("csv: wrong field count");
    Row r;
    r.series = f[0];
    r.sweep_value = parse_field_real(f[1]);
    r.channel = f[2];
    r.node_count = parse_field_int(f[3]);
    r.principal_label = parse_field_int(f[4]);
    r.energy = parse_field_real(f[5]);
    r.residual = parse_field_real(f[6]);
    r.engine = f[7];
    r.status = f[8];
    d.rows.push_back(std::move(r));
  }
  return d;
}

void write_json(std::ostream& os, const Dataset& d) {
  nlohmann::json j;
  j["command"] = d.command;
  j["model"] = d.model;
  j["axis"] = d.axis;
  auto levels = nlohmann::json::array();
  for (const auto& r : d.rows) {
    levels.push_back({{"series", r.series},
                      {"sweep_value", json_real(r.sweep_value)},
                      {"channel", r.channel},
                      {"node_count", r.node_count},
                      {"principal_label", r.principal_label},
                      {"energy", json_real(r.energy)},
                      {"residual", json_real(r.residual)},
                      {"engine", r.engine},
                      {"status", r.status}});
  }
  j["levels"] = levels;
  os << j.dump(2) << "\n";
}

void write_degeneracy_csv(std::ostream& os, const std::vector<DegeneracyRow>& rows) {
  os << "vary,parameter,energy,splitting,level_a,level_b,status\r\n";
  for (const auto& r : rows) {
    os << csv_field(r.vary) << ',' << format_real(r.parameter) << ',' << format_real(r.energy) << ','
       << format_real(r.splitting) << ',' << csv_field(r.level_a) << ',' << csv_field(r.level_b) << ','
       << csv_field(r.status) << "\r\n";
  }
}

void write_degeneracy_json(std::ostream& os, const std::vector<DegeneracyRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json param = std::isinf(r.parameter) ? nlohmann::json(format_real(r.parameter)) : json_real(r.parameter);
    arr.push_back({{"vary", r.vary},
                   {"parameter", param},
                   {"energy", json_real(r.energy)},
                   {"splitting", json_real(r.splitting)},
                   {"level_a", r.level_a},
                   {"level_b", r.level_b},
                   {"status", r.status}});
  }
  os << nlohmann::json{{"degeneracies", arr}}.dump(2) << "\n";
}

}  // namespace hcav::app
