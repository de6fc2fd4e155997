#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "subord_lab/bounds.hpp"
#include "subord_lab/subord.hpp"

using namespace subord_lab;
using Catch::Approx;

namespace {

const double ch = std::cosh(1.0), sh = std::sinh(1.0), c1 = std::cos(1.0), s1 = std::sin(1.0);

}  // namespace

TEST_CASE("crescent range against the four boundary constraints") {
  const double g = -0.6, r2 = std::numbers::sqrt2;
  const double e0 = -g / ch + sh / (2 * ch * (1 + r2 - ch));
  const double e2 = -g / c1 - s1 / (2 * c1 * (1 + r2 - c1));
  const ParamInterval p = bounds::bb_eta_range(RegionSpec::crescent(), g);
  REQUIRE(p.theorem_id == "bb-crescent");
  REQUIRE(p.lo == Approx(e2).epsilon(1e-14));
  REQUIRE(p.hi == Approx(e0).epsilon(1e-14));
  REQUIRE(p.lo == Approx(0.694972).margin(1e-4));
  REQUIRE(p.hi == Approx(0.825937).margin(1e-4));
  REQUIRE_FALSE(p.lo_strict);
  REQUIRE_FALSE(p.hi_strict);
}

TEST_CASE("limacon range reproduces the integral example interval") {
  const ParamInterval p = bounds::bb_eta_range(RegionSpec::limacon(0.5), -0.6);
  const double lo = 3.0 / (5.0 * c1) - 2.0 * s1 / (c1 * (9.0 - 4.0 * c1));
  REQUIRE(p.lo == Approx(lo).epsilon(1e-13));
  REQUIRE(p.lo == Approx(0.65503).margin(1e-5));
  REQUIRE(p.hi == Approx(0.92750).margin(1e-5));
  const ParamInterval ex = bounds::example_param_ranges(bounds::ExampleRange::integral_limacon_eta);
  REQUIRE(ex.lo == Approx(p.lo).epsilon(1e-13));
  REQUIRE(ex.hi == Approx(p.hi).epsilon(1e-13));
  REQUIRE(ex.contains(0.8));
  REQUIRE_FALSE(ex.contains(0.6));
  REQUIRE_THROWS_AS(bounds::bb_eta_range(RegionSpec::limacon(-0.5), -0.6), Error);
}

TEST_CASE("exp range excludes the vanishing denominator") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double g = u(rng);
    const ParamInterval p = bounds::bb_eta_range(RegionSpec::exp(), g);
    if (p.empty()) continue;
    REQUIRE_FALSE(p.contains(-g / ch));
    REQUIRE(p.excluded);
    REQUIRE(*p.excluded == Approx(-g));
  }
  REQUIRE(bounds::bb_eta_range(RegionSpec::exp(), -0.6).empty());
  REQUIRE_THROWS_AS(bounds::bb_eta_range(RegionSpec::janowski(1, 0), 0.0), Error);
}

TEST_CASE("returned intervals satisfy the defining inequalities at their endpoints") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const double r2 = std::numbers::sqrt2;
  for (int i = 0; i < 200; ++i) {
    const double g = u(rng);
    const ParamInterval p = bounds::bb_eta_range(RegionSpec::crescent(), g);
    if (p.empty()) continue;
    for (double eta : {p.lo, p.hi}) {
      const double tol = 1e-12 * (1 + std::abs(eta));
      REQUIRE(eta >= -g / ch - tol);
      REQUIRE(eta <= -g / ch + sh / (2 * ch * (1 + r2 - ch)) + tol);
      REQUIRE(eta >= -g / c1 - s1 / (2 * c1 * (1 + r2 - c1)) - tol);
      REQUIRE(eta <= -g / c1 + tol);
    }
  }
}

TEST_CASE("Janowski feasibility presets") {
  const double lo = -std::tanh(1.0) / ch / 2.0, hi = std::tanh(1.0) / (4.0 - 2.0 * ch);
  REQUIRE(bounds::bb_janowski_feasible(lo + 1e-9, 0.0, 1.0, 0.0));
  REQUIRE_FALSE(bounds::bb_janowski_feasible(lo - 1e-6, 0.0, 1.0, 0.0));
  REQUIRE(bounds::bb_janowski_feasible(hi - 1e-9, 0.0, 1.0, 0.0));
  REQUIRE_FALSE(bounds::bb_janowski_feasible(hi + 1e-6, 0.0, 1.0, 0.0));

  const double g0 = (s1 + 4.0 * c1 - std::cos(2.0) - 1.0) / (2.0 * c1 - 4.0);
  REQUIRE(bounds::bb_janowski_feasible(1.0, g0 + 1e-6, 0.0, -0.5));
  REQUIRE_FALSE(bounds::bb_janowski_feasible(1.0, g0 - 1e-6, 0.0, -0.5));

  REQUIRE_THROWS_AS(bounds::bb_janowski_feasible(1.0, 0.0, 0.5, 0.5), Error);
  REQUIRE_FALSE(bounds::bb_janowski_feasible(1.0, -1.0, 1.0, 0.0));
}

TEST_CASE("first-order Janowski ratio bound") {
  REQUIRE(bounds::eta_min_ratio_janowski(1.0, 0.0) == Approx(2.0 / std::tanh(1.0)).epsilon(1e-15));
  REQUIRE(bounds::eta_min_ratio_janowski(1.0, 0.0) == Approx(2.62606).margin(1e-5));
  REQUIRE(bounds::eta_min_ratio_janowski(CPoint(0.2, 0.3), 0.1) * 2.0 ==
          Approx(bounds::eta_min_ratio_janowski(CPoint(0.3, 0.6), -0.1 + 0.2)));
  REQUIRE_THROWS_AS(bounds::eta_min_ratio_janowski(1.0, -1.0), Error);
  REQUIRE_THROWS_AS(bounds::eta_min_ratio_janowski(0.5, 0.5), Error);
}

TEST_CASE("sharp constants") {
  struct Row {
    RegionSpec target;
    double want;
  };
  const std::vector<Row> rows = {{RegionSpec::exp(), 0.758753},
                                 {RegionSpec::sqrt_half_lens(), 1.25854},
                                 {RegionSpec::crescent(), 0.818769},
                                 {RegionSpec::janowski(1.0, 0.5), 1.56391},
                                 {RegionSpec::limacon(1.0 / std::numbers::sqrt2), 0.52463}};
  for (const auto& row : rows) {
    INFO(regions::to_string(row.target));
    const auto e = bounds::eta_star(row.target);
    REQUIRE(e.value == Approx(row.want).margin(1e-5));
  }
  // the closed form for the square-root target disagrees with the endpoint threshold
  const auto sq = bounds::eta_star(RegionSpec::sqrt_half_lens());
  REQUIRE(sq.mismatch);
  REQUIRE_FALSE(bounds::eta_star(RegionSpec::exp()).mismatch);
  const double x_e = 2.0 * (special::constants().chi1 - special::euler_gamma) / (std::numbers::e - 1.0);
  REQUIRE(x_e == Approx(0.303386).margin(1e-6));
}

TEST_CASE("sharp constants sit exactly on the endpoint chain") {
  for (const RegionSpec& t : {RegionSpec::exp(), RegionSpec::sqrt_half_lens(), RegionSpec::crescent(),
                              RegionSpec::janowski(1.0, 0.5), RegionSpec::limacon(1.0 / std::numbers::sqrt2)}) {
    INFO(regions::to_string(t));
    const double eta = bounds::eta_star(t).value;
    const FnSpec outer = fn::from_region(t);
    const auto [lo, hi] = bounds::target_axis_values(t);
    const double a = solutions::phi_eta_cosh(-1.0, eta).real();
    const double b = solutions::phi_eta_cosh(1.0, eta).real();
    const bool lower_tight = std::abs(a - lo) < 1e-9, upper_tight = std::abs(b - hi) < 1e-9;
    REQUIRE(lower_tight != upper_tight);
    REQUIRE(subord::endpoint_interval_check(FnSpec::phi_eta_cosh(eta * (1 + 1e-3)), outer));
    REQUIRE_FALSE(subord::endpoint_interval_check(FnSpec::phi_eta_cosh(eta * (1 - 1e-3)), outer));
  }
}

TEST_CASE("branch switches are continuous") {
  const double kappa = special::constants().kappa;
  const double eps = 1e-10;
  const double a = bounds::eta_star(RegionSpec::janowski(1.0, -kappa - eps)).value;
  const double b = bounds::eta_star(RegionSpec::janowski(1.0, -kappa + eps)).value;
  REQUIRE(std::abs(a - b) < 1e-8);
  const double c = bounds::eta_star(RegionSpec::limacon(2 * kappa - eps)).value;
  const double d = bounds::eta_star(RegionSpec::limacon(2 * kappa + eps)).value;
  REQUIRE(std::abs(c - d) < 1e-8);
}

TEST_CASE("dominant Janowski condition") {
  const double b0 = bounds::b0_root();
  const double mu = special::constants().mu;
  REQUIRE(std::abs((1 + b0) * std::pow(1 - b0, mu) - 1.0) < 1e-10);
  REQUIRE(b0 == Approx(-0.1655).margin(1e-4));
  REQUIRE(bounds::cosh_dominant_eta_min(0.5, -0.5) == Approx(std::log(4.0) / (ch - 1.0)).epsilon(1e-12));
  REQUIRE(bounds::cosh_dominant_eta_min(0.5, -0.5) == Approx(2.5526).margin(1e-4));
  const double csc2 = 1.0 / (std::sin(0.5) * std::sin(0.5));
  REQUIRE(2.0 * bounds::cosh_dominant_eta_min(1.0, 0.0) == Approx(csc2).epsilon(1e-12));
  REQUIRE(csc2 == Approx(4.35069).margin(1e-5));
  REQUIRE(bounds::cosh_dominant_eta_condition(2.2, 1.0, 0.0));
  REQUIRE_FALSE(bounds::cosh_dominant_eta_condition(2.1, 1.0, 0.0));
  REQUIRE_THROWS_AS(bounds::cosh_dominant_eta_min(0.5, 0.5), Error);
}

TEST_CASE("eta0 and admissibility thresholds") {
  const double e0 = bounds::cosh_ratio_eta0();
  REQUIRE(e0 == Approx(-0.502706).margin(5e-6));
  REQUIRE(e0 > -1.0);
  REQUIRE(e0 < 0.0);
  REQUIRE(0.5 + 1.0 / std::sinh(2.0) == Approx(0.775721).margin(1e-6));
  using bounds::Admissibility;
  REQUIRE(bounds::admissibility_threshold(Admissibility::zp_minus_1) == Approx(0.4207355).margin(1e-7));
  REQUIRE(bounds::admissibility_threshold(Admissibility::zp_over_p) == Approx(0.3807970).margin(1e-7));
  REQUIRE(bounds::admissibility_threshold(Admissibility::zp_over_p2) == Approx(0.2468).margin(1e-4));
  REQUIRE(bounds::admissibility_threshold(Admissibility::zp_over_p2) ==
          Approx(sh / (2.0 * ch * ch)).epsilon(1e-14));
}

TEST_CASE("integral exp parameter range") {
  const ParamInterval p = bounds::example_param_ranges(bounds::ExampleRange::integral_exp_gamma);
  REQUIRE(p.lo == Approx(-0.46333).margin(1e-5));
  REQUIRE(p.hi == Approx(-0.27154).margin(1e-5));
  REQUIRE(p.hi == Approx(-(ch - 1.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("interval algebra") {
  const ParamInterval a{0.0, 2.0, false, true, "a", {}};
  const ParamInterval b{1.0, 3.0, true, false, "b", {}};
  const ParamInterval c = a.intersect(b);
  REQUIRE(c.lo == 1.0);
  REQUIRE(c.hi == 2.0);
  REQUIRE(c.lo_strict);
  REQUIRE(c.hi_strict);
  REQUIRE_FALSE(c.contains(1.0));
  REQUIRE(c.contains(1.5));
  REQUIRE(ParamInterval::closed(1.0, 1.0).contains(1.0));
  REQUIRE(ParamInterval{1.0, 1.0, true, false, "", {}}.empty());
  REQUIRE(ParamInterval::closed(2.0, 1.0).empty());
}
