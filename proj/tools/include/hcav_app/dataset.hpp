#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcav::app {

struct Row {
  std::string series;
  double sweep_value = 0.0;
  std::string channel;
  int node_count = 0;
  int principal_label = 0;
  double energy = 0.0;
  double residual = 0.0;
  std::string engine;
  std::string status;

  bool operator==(const Row&) const;
};

struct Dataset {
  std::string command;
  std::string model;
  std::string axis;  // what sweep_value measures
  std::vector<Row> rows;
};

const std::vector<std::string>& csv_columns();

/// %.17g, RFC-4180 quoting.
std::string format_real(double x);
std::string csv_field(const std::string& s);
void write_csv(std::ostream& os, const Dataset& d);
/// Parses what write_csv produced; throws std::runtime_error on malformed input.
Dataset read_csv(std::istream& is);
void write_json(std::ostream& os, const Dataset& d);

/// Splits one CSV record (quotes may span lines) off the stream.
bool read_csv_record(std::istream& is, std::vector<std::string>& fields);

struct DegeneracyRow {
  std::string vary;
  double parameter = 0.0;
  double energy = 0.0;
  double splitting = 0.0;
  std::string level_a;
  std::string level_b;
  std::string status;
};
void write_degeneracy_csv(std::ostream& os, const std::vector<DegeneracyRow>& rows);
void write_degeneracy_json(std::ostream& os, const std::vector<DegeneracyRow>& rows);

}  // namespace hcav::app
