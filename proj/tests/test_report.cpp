#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "subord_lab/report.hpp"

using namespace subord_lab;
using report::Json;

TEST_CASE("numbers are written with 17 significant digits") {
  Json j;
  j["x"] = 0.1;
  j["n"] = 3;
  j["b"] = true;
  REQUIRE(report::dump(j) == "{\n  \"x\": 0.10000000000000001,\n  \"n\": 3,\n  \"b\": true\n}\n");
}

TEST_CASE("non-finite values become null") {
  Json j;
  j["inf"] = std::numeric_limits<double>::infinity();
  j["nan"] = std::nan("");
  j["list"] = Json::array({1.5, -std::numeric_limits<double>::infinity()});
  const std::string s = report::dump(j);
  REQUIRE(s.find("\"inf\": null") != std::string::npos);
  REQUIRE(s.find("\"nan\": null") != std::string::npos);
  REQUIRE(Json::parse(s)["list"][1].is_null());
}

TEST_CASE("interval records") {
  const ParamInterval p = bounds::bb_eta_range(RegionSpec::crescent(), -0.6);
  const Json j = Json::parse(report::dump(report::to_json(p)));
  REQUIRE(j["theorem_id"] == "bb-crescent");
  REQUIRE(j["lo"].get<double>() == p.lo);
  REQUIRE(j["hi"].get<double>() == p.hi);
  REQUIRE(j["empty"] == false);
  REQUIRE(j["excluded"].get<double>() == 0.6);
  const ParamInterval open = ParamInterval::closed(1.0, std::numeric_limits<double>::infinity());
  REQUIRE(report::to_json(open)["hi"].is_null());
}

TEST_CASE("verification report records") {
  GridSpec g;
  g.t_points = 256;
  const auto r = proofcheck::scan_nonneg(proofcheck::FunctionalCase::crescent(), 0.76, -0.6, g);
  const Json j = Json::parse(report::dump(report::to_json(r)));
  REQUIRE(j["claim_id"] == "bb-crescent");
  REQUIRE(j["passed"] == true);
  REQUIRE(j["grid"]["t_points"] == 256);
  REQUIRE(j["grid"]["k_values"].size() == 6);
  REQUIRE(j.contains("endpoint_argmin"));
  REQUIRE_FALSE(j.contains("attained"));
  REQUIRE(j["min_value"].get<double>() == r.min_value);
}

TEST_CASE("verdict records") {
  SubordVerdict v;
  v.r_used = 0.999;
  v.n_used = 2048;
  v.holds = true;
  REQUIRE(report::to_json(v)["witness"].is_null());
  v.holds = false;
  v.witness = CPoint(0.5, -0.25);
  const Json j = report::to_json(v);
  REQUIRE(j["witness"]["re"] == 0.5);
  REQUIRE(j["witness"]["im"] == -0.25);
}

TEST_CASE("output is byte stable") {
  const auto a = report::dump(report::to_json(bounds::bb_eta_range(RegionSpec::limacon(0.5), -0.6)));
  const auto b = report::dump(report::to_json(bounds::bb_eta_range(RegionSpec::limacon(0.5), -0.6)));
  REQUIRE(a == b);
}
