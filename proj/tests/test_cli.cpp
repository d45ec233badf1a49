#include <cmath>
#include <sstream>

#include "doctest.h"
#include "hcav_app/commands.hpp"
#include "hcav_app/config.hpp"
#include "hcav_app/dataset.hpp"
#include "hcav_app/presets.hpp"
#include "json.hpp"

using namespace hcav;
using namespace hcav::app;

namespace {

std::string csv_of(const CommandOutput& o) {
  std::ostringstream s;
  write_csv(s, o.data);
  return s.str();
}

}  // namespace

TEST_CASE("parse_real accepts fractions, square roots and infinities") {
  CHECK(parse_real("2.5") == 2.5);
  CHECK(parse_real("42/5") == doctest::Approx(8.4));
  CHECK(parse_real("-1/12") == doctest::Approx(-1.0 / 12.0));
  CHECK(parse_real("sqrt(15/16)") == doctest::Approx(std::sqrt(15.0 / 16.0)));
  CHECK(std::isinf(parse_real("inf")));
  CHECK(parse_real("-inf") < 0);
  CHECK_THROWS_AS(parse_real("abc"), ConfigError);
  CHECK_THROWS_AS(parse_real("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_real(""), ConfigError);
  CHECK_THROWS_AS(parse_int("1.5"), ConfigError);
}

TEST_CASE("equivalent boundary spellings give the same pair") {
  const auto D = BoundaryCondition::dirichlet();
  CHECK(parse_bc("dirichlet", Model::Schrodinger, 3.0) == D);
  CHECK(parse_bc("gamma=inf", Model::Schrodinger, 3.0) == D);
  CHECK(parse_bc("angle=1.5707963267948966", Model::Schrodinger, 3.0) == D);
  CHECK(parse_bc("neumann", Model::Pauli, 3.0) == parse_bc("gamma=0", Model::Pauli, 3.0));
  CHECK(parse_bc("nu=inf", Model::Dirac, 3.0) == D);
  CHECK_THROWS_AS(parse_bc("nu=1", Model::Schrodinger, 3.0), ConfigError);
  CHECK_THROWS_AS(parse_bc("gamma=1", Model::Dirac, 3.0), ConfigError);
  CHECK_THROWS_AS(parse_bc("angle=2", Model::Schrodinger, 3.0), ConfigError);
  CHECK_THROWS_AS(parse_bc("robin", Model::Schrodinger, 3.0), ConfigError);
}

TEST_CASE("sweep, window and level reference parsing") {
  auto s = parse_sweep("inv_R=0.5:1:3");
  CHECK(s.axis == Axis::InverseRadius);
  auto v = s.values();
  REQUIRE(v.size() == 3);
  CHECK(v[1] == doctest::Approx(0.75));
  CHECK_THROWS_AS(parse_sweep("R=1:2:1"), ConfigError);
  CHECK_THROWS_AS(parse_sweep("R=0:2:5"), ConfigError);
  CHECK_THROWS_AS(parse_sweep("T=1:2:5"), ConfigError);
  auto w = parse_window("-1:5");
  CHECK(w.lo == -1.0);
  CHECK(w.hi == 5.0);
  CHECK_THROWS_AS(parse_window("5:1"), ConfigError);
  auto r = parse_level_ref("l=1,j=3/2,node=2", Model::Pauli);
  CHECK(r.channel == Channel::pauli(1, 1));
  CHECK(r.node_count == 2);
  CHECK(parse_level_ref("k=-1,node=0", Model::Dirac).channel == Channel::dirac(-1));
  CHECK_THROWS_AS(parse_level_ref("l=1,j=5/2,node=0", Model::Pauli), ConfigError);
}

TEST_CASE("resolve rejects inconsistent settings") {
  CHECK_THROWS_AS(resolve("spectrum", {{"model", "dirac"}, {"k", "-1"}, {"R", "5"}}), ConfigError);
  CHECK_THROWS_AS(resolve("spectrum", {{"model", "dirac"}, {"k", "1"}, {"alpha", "1.2"}, {"R", "5"}}), ConfigError);
  CHECK_THROWS_AS(resolve("spectrum", {{"l", "0"}, {"R", "5"}, {"nodes", "0"}, {"levels", "2"}}), ConfigError);
  CHECK_THROWS_AS(resolve("spectrum", {{"l", "0"}, {"R", "5"}, {"colour", "red"}}), ConfigError);
  CHECK_THROWS_AS(resolve("sweep", {{"preset", "fig1"}, {"l", "0"}}), ConfigError);
  CHECK_THROWS_AS(resolve("sweep", {{"preset", "nope"}}), ConfigError);
  CHECK_THROWS_AS(resolve("verify", {{"l", "0"}}), ConfigError);
  CHECK_THROWS_AS(resolve("find-degeneracy", {{"l", "0"}, {"model", "dirac"}, {"alpha", "0.5"}, {"k", "-1"}, {"vary", "gamma"}}),
                  ConfigError);
}

TEST_CASE("flags take precedence over the JSON file") {
  RawConfig raw{{"R", "7"}};
  merge_json_text(raw, R"({"R": 3, "l": [0, 1], "bc": "neumann"})");
  CHECK(raw["R"] == "7");
  CHECK(raw["l"] == "0,1");
  CHECK(raw["bc"] == "neumann");
  CHECK_THROWS(merge_json_text(raw, "[1, 2]"));
}

TEST_CASE("CSV round trip preserves awkward fields and special values") {
  Dataset d{"sweep", "schrodinger", "R", {}};
  d.rows.push_back({"a,\"b\"", 1.5, "l=0", 0, 1, -0.1234567890123456789, 1e-300, "both", "ok"});
  d.rows.push_back({"line\nbreak", -0.0, "l=1,j=3/2", -1, -1, NAN, INFINITY, "", "error: x, y"});
  d.rows.push_back({"s", 0.1, "k=-1", 2, 3, -INFINITY, 5e-324, "shooting", "ok"});
  std::stringstream s;
  write_csv(s, d);
  Dataset back = read_csv(s);
  REQUIRE(back.rows.size() == d.rows.size());
  for (size_t i = 0; i < d.rows.size(); ++i) CHECK(back.rows[i] == d.rows[i]);
  CHECK(std::signbit(back.rows[1].sweep_value));
  std::istringstream bad("series,nope\n");
  CHECK_THROWS(read_csv(bad));
}

TEST_CASE("equivalent boundary flags produce byte-identical output") {
  std::string first;
  for (const char* bc : {"dirichlet", "gamma=inf", "angle=1.5707963267948966"}) {
    auto c = resolve("spectrum", {{"l", "0,1"}, {"R", "6"}, {"bc", bc}, {"levels", "2"}});
    auto text = csv_of(run_spectrum(c));
    if (first.empty()) first = text;
    CHECK(text == first);
  }
}

TEST_CASE("sweep output does not depend on threads and keeps inverse radius order") {
  RawConfig raw{{"l", "0"}, {"bc", "neumann"}, {"sweep", "inv_R=0.2:1:5"}, {"levels", "2"}, {"window", "-10:200"}};
  raw["threads"] = "1";
  auto one = run_sweep(resolve("sweep", raw));
  raw["threads"] = "3";
  auto three = run_sweep(resolve("sweep", raw));
  CHECK(csv_of(one) == csv_of(three));
  CHECK(one.complete);
  REQUIRE(one.data.rows.size() == 10);
  CHECK(one.data.axis == "inv_R");
  for (size_t i = 2; i < one.data.rows.size(); i += 2) CHECK(one.data.rows[i].sweep_value > one.data.rows[i - 2].sweep_value);
}

TEST_CASE("spectrum labels follow the principal number convention") {
  auto c = resolve("spectrum", {{"l", "1"}, {"R", "40"}, {"levels", "2"}, {"window", "-0.6:2"}});
  auto o = run_spectrum(c);
  REQUIRE(o.data.rows.size() == 2);
  CHECK(o.data.rows[0].principal_label == 2);
  CHECK(o.data.rows[0].energy == doctest::Approx(-0.125).epsilon(1e-9));
  CHECK(o.data.rows[1].principal_label == 3);
}

TEST_CASE("missing levels become error rows and mark the output incomplete") {
  auto c = resolve("spectrum", {{"l", "0"}, {"R", "2"}, {"levels", "5"}, {"window", "-1:5"}});
  auto o = run_spectrum(c);
  CHECK(!o.complete);
  REQUIRE(!o.data.rows.empty());
  CHECK(o.data.rows.back().status.rfind("error:", 0) == 0);
  CHECK(std::isnan(o.data.rows.back().energy));
}

TEST_CASE("every preset resolves and a shortened run has no error rows") {
  for (const auto& p : presets()) {
    CAPTURE(p.name);
    auto c = resolve("sweep", {{"preset", p.name}});
    REQUIRE(c.sweep.has_value());
    CHECK(c.series.size() == p.series.size());
    c.sweep->steps = 2;
    auto o = run_sweep(c);
    CHECK(o.complete);
    for (const auto& r : o.data.rows) CHECK(r.status == "ok");
  }
  auto f = resolve("sweep", {{"preset", "fig5"}, {"alpha", "0.5"}});
  CHECK(f.units.alpha() == 0.5);
  CHECK_THROWS_AS(resolve("sweep", {{"preset", "fig1"}, {"alpha", "0.5"}}), ConfigError);
}

TEST_CASE("JSON output carries the dataset") {
  auto c = resolve("spectrum", {{"l", "0"}, {"R", "40"}, {"levels", "1"}, {"out", "x.json"}});
  CHECK(c.format == "json");
  std::ostringstream s;
  write_json(s, run_spectrum(c).data);
  auto j = nlohmann::json::parse(s.str());
  CHECK(j["command"] == "spectrum");
  REQUIRE(j["levels"].size() == 1);
  CHECK(j["levels"][0]["energy"].get<double>() == doctest::Approx(-0.5).epsilon(1e-9));
}

TEST_CASE("find-degeneracy recovers the crossing with and without a bracket") {
  auto c = resolve("find-degeneracy", {{"l", "0"}, {"bc", "dirichlet"}, {"bracket", "1.5:3"}});
  auto o = run_find_degeneracy(c);
  REQUIRE(o.rows.size() == 1);
  CHECK(o.rows[0].parameter == doctest::Approx(2.0).epsilon(1e-9));
  auto scan = run_find_degeneracy(resolve("find-degeneracy", {{"l", "0"}, {"bc", "dirichlet"}}));
  bool found = false;
  for (const auto& r : scan.rows) found = found || std::fabs(r.parameter - 2.0) < 1e-8;
  CHECK(found);
}
