#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "subord_lab/figures.hpp"

using namespace subord_lab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("every figure passes its gate and matches its golden") {
  for (const auto& name : figures::names()) {
    INFO(name);
    const figures::Figure fig = figures::build(name);
    REQUIRE(fig.gate.holds);
    REQUIRE(fig.gate.r_used == subord::default_r);
    REQUIRE(fig.curves.size() >= 2);
    for (const auto& c : fig.curves) REQUIRE(c.points.size() == std::size_t(regions::figure_samples));
    const std::string svg = figures::render_svg(fig);
    REQUIRE(svg == figures::render_svg(figures::build(name)));
    const std::string golden = slurp(std::string(GOLDEN_DIR) + "/" + name + ".svg");
    REQUIRE_FALSE(golden.empty());
    REQUIRE(svg == golden);
  }
}

TEST_CASE("svg structure") {
  const std::string svg = figures::render_svg(figures::build("sharp-exp"));
  REQUIRE(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  REQUIRE(svg.find("<title>") != std::string::npos);
  REQUIRE(svg.find("</svg>\n") == svg.size() - 7);
  REQUIRE(svg.find("-0.00") == std::string::npos);
}

TEST_CASE("unknown figure names are rejected") {
  try {
    figures::build("nope");
    FAIL("expected BadArgument");
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::BadArgument);
  }
}
