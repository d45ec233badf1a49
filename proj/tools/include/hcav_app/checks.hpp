#pragma once

// Programmatic acceptance checks shared by `hcav verify` and the acceptance
// test binary.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hcav::app {

struct CheckResult {
  int id = 0;
  std::string name;
  std::vector<std::string> suites;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  /// How measured relates to tolerance for a pass: "<=" or ">".
  std::string comparison = "<=";
  std::string detail;
  double seconds = 0.0;
};

struct Check {
  int id;
  std::string name;
  std::vector<std::string> suites;  // "all" always runs everything
  std::function<void(CheckResult&, int threads)> body;
};

const std::vector<Check>& acceptance_checks();

/// Runs the checks of one suite; a throwing check is recorded as failed.
std::vector<CheckResult> run_checks(const std::string& suite, int threads = 0);

void write_report_json(std::ostream& os, const std::string& suite, const std::vector<CheckResult>& results);
/// "[PASS] 3 name: measured ... (tol ...)" lines.
void write_report_text(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace hcav::app
