// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subord_lab/subord_lab.hpp"

using namespace subord_lab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& o, bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
void note(Outcome& o, bool ok, const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  if (!ok) o.pass = false;
  if (!ok || o.detail.size() < 400) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += (ok ? "" : "FAIL ") + std::string(buf);
  }
}

CPoint random_in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

// ---------------------------------------------------------------------------

Outcome sharp_constants() {
  Outcome o;
  const double tol = 1e-4;
  auto check = [&](const char* name, double got, double want) {
    note(o, std::abs(got - want) <= tol, "%s=%.7f (want %.6g)", name, got, want);
  };
  const auto& c = special::constants();
  check("eta_e", bounds::eta_star(RegionSpec::exp()).value, 0.758753);
  check("x_e", 2.0 * (c.chi1 - c.euler_gamma) / (std::numbers::e - 1.0), 0.303386);
  check("eta_L", bounds::eta_star(RegionSpec::sqrt_half_lens()).value, 1.25854);
  check("eta_crescent", bounds::eta_star(RegionSpec::crescent()).value, 0.818769);
  check("eta_1_half", bounds::eta_star(RegionSpec::janowski(1.0, 0.5)).value, 1.56391);
  check("eta_limacon", bounds::eta_star(RegionSpec::limacon(1.0 / std::numbers::sqrt2)).value, 0.52463);
  check("eta_rho", bounds::cosh_dominant_eta_min(0.5, -0.5), 2.5526);
  check("eta0", bounds::cosh_ratio_eta0(), -0.502);
  check("sin_half", bounds::admissibility_threshold(bounds::Admissibility::zp_minus_1), 0.4207);
  check("tanh_half", bounds::admissibility_threshold(bounds::Admissibility::zp_over_p), 0.3808);
  check("sech_tanh", bounds::admissibility_threshold(bounds::Admissibility::zp_over_p2), 0.2468);
  return o;
}

Outcome boundary_identities() {
  Outcome o;
  const CPoint top = special::cosh_sqrt(1.0), bottom = special::cosh_sqrt(-1.0);
  auto inv = [](CPoint w) { return std::log(w + std::sqrt(w * w - 1.0)); };
  const double e1 = std::abs(top - std::cosh(1.0));
  const double e2 = std::abs(std::abs(std::log(std::cosh(1.0) + std::sinh(1.0))) - 1.0);
  const double e3 = std::abs(bottom - std::cos(1.0));
  const double e4 = std::abs(std::abs(std::log(CPoint(std::cos(1.0), std::sin(1.0)))) - 1.0);
  const double e5 = std::abs(std::abs(inv(top)) - 1.0);
  const double e6 = std::abs(std::abs(inv(bottom)) - 1.0);
  note(o, e1 <= 1e-12, "|q(1)-cosh 1|=%.1e", e1);
  note(o, e2 <= 1e-12, "||log(cosh 1+sinh 1)|-1|=%.1e", e2);
  note(o, e3 <= 1e-12, "|q(-1)-cos 1|=%.1e", e3);
  note(o, e4 <= 1e-12, "||log(cos 1+i sin 1)|-1|=%.1e", e4);
  note(o, e5 <= 1e-12 && e6 <= 1e-12, "inverse map modulus at q(+-1): %.1e, %.1e", e5, e6);
  return o;
}

// Random admissible (eta, gamma) per region, scanned on the full grid.
Outcome scan_obligations() {
  Outcome o;
  std::mt19937_64 rng(0x5eed2024);
  std::uniform_real_distribution<double> ug(-2.0, 2.0), u01(0.0, 1.0);
  const GridSpec grid;  // 1024 x {1, 1.5, 2, 3, 5, 10}
  constexpr int draws = 50;

  auto run = [&](const char* name, const std::function<std::pair<proofcheck::FunctionalCase, std::pair<double, double>>()>& draw) {
    int fails = 0, off_endpoint = 0, errors = 0;
    double worst = INFINITY;
    std::string first;
    for (int i = 0; i < draws; ++i) {
      const auto [c, eg] = draw();
      const auto [eta, gamma] = eg;
      try {
        const auto r = proofcheck::scan_nonneg(c, eta, gamma, grid);
        worst = std::min(worst, r.min_value);
        if (!r.passed) {
          ++fails;
          if (first.empty()) {
            char buf[160];
            std::snprintf(buf, sizeof buf, " first eta=%.6f gamma=%.6f min=%.3e", eta, gamma, r.min_value);
            first = buf;
          }
        }
        if (!r.endpoint_argmin.value_or(false)) ++off_endpoint;
      } catch (const Error& e) {
        ++errors;
      }
    }
    note(o, fails == 0 && off_endpoint == 0 && errors == 0,
         "%s: %d/%d negative, %d off-endpoint argmin, %d errors, worst min %.3e%s", name, fails, draws,
         off_endpoint, errors, worst, first.c_str());
  };

  auto interval_draw = [&](auto make_target, auto make_case) {
    return [&, make_target, make_case]() {
      for (;;) {
        const double gamma = ug(rng);
        const auto [target, c] = std::pair{make_target(), make_case()};
        ParamInterval p = bounds::bb_eta_range(target, gamma);
        if (p.empty()) continue;
        const double hi = std::isfinite(p.hi) ? p.hi : p.lo + 2.0;
        const double eta = p.lo + (hi - p.lo) * u01(rng);
        if (!p.contains(eta) || eta + gamma == 0.0) continue;
        return std::pair{c, std::pair{eta, gamma}};
      }
    };
  };

  run("crescent", interval_draw([] { return RegionSpec::crescent(); }, [] { return proofcheck::FunctionalCase::crescent(); }));
  double s = 0.5;
  run("limacon", interval_draw(
                     [&] {
                       s = 1e-3 + (1.0 / std::numbers::sqrt2 - 1e-3) * u01(rng);
                       return RegionSpec::limacon(s);
                     },
                     [&] { return proofcheck::FunctionalCase::limacon(s); }));
  run("exp", interval_draw([] { return RegionSpec::exp(); }, [] { return proofcheck::FunctionalCase::exp(); }));
  run("janowski", [&]() {
    for (;;) {
      const double A = -1.0 + 2.0 * u01(rng);
      const double B = -1.0 + (A + 1.0) * u01(rng);
      if (!(B < A)) continue;
      const double eta = -3.0 + 6.0 * u01(rng), gamma = -3.0 + 6.0 * u01(rng);
      if (!bounds::bb_janowski_feasible(eta, gamma, A, B)) continue;
      return std::pair{proofcheck::FunctionalCase::janowski(A, B), std::pair{eta, gamma}};
    }
  });
  return o;
}

Outcome sharpness_converse() {
  Outcome o;
  for (const RegionSpec& t : {RegionSpec::exp(), RegionSpec::sqrt_half_lens(), RegionSpec::crescent(),
                              RegionSpec::janowski(1.0, 0.5), RegionSpec::limacon(1.0 / std::numbers::sqrt2)}) {
    const double eta = bounds::eta_star(t).value;
    const FnSpec outer = fn::from_region(t);
    const FnSpec below = FnSpec::phi_eta_cosh(0.99 * eta), above = FnSpec::phi_eta_cosh(1.01 * eta);
    const bool eb = subord::endpoint_interval_check(below, outer);
    const bool wb = subord::check_by_winding(below, outer).holds;
    const bool ea = subord::endpoint_interval_check(above, outer);
    const bool wa = subord::check_by_winding(above, outer).holds;
    note(o, !eb && !wb && ea && wa, "%s: 0.99 eta* endpoint=%d winding=%d, 1.01 eta* endpoint=%d winding=%d",
         regions::to_string(t).c_str(), eb, wb, ea, wa);
  }
  return o;
}

Outcome solution_residuals() {
  Outcome o;
  std::mt19937_64 rng(0xbb);
  double r1 = 0, r2 = 0, r3 = 0;
  for (int i = 0; i < 200; ++i) {
    const CPoint z = random_in_disk(rng, 1.0);
    const double eta = 0.3 + 2.7 * std::uniform_real_distribution<double>(0, 1)(rng);
    r1 = std::max(r1, std::abs(1.0 + eta * z * fn::derivative(FnSpec::phi_eta_cosh(eta), z) - special::cosh_sqrt(z)));
    const CPoint jan = (1.0 + 0.5 * z) / (1.0 - 0.5 * z);
    r2 = std::max(r2, std::abs(1.0 + eta * z * fn::derivative(FnSpec::phi_eta_janowski(eta, 0.5, -0.5), z) - jan));
    r3 = std::max(r3, std::abs(1.0 + eta * z * fn::derivative(FnSpec::m_eta(eta, 0.7), z) - (1.0 + 0.7 * z)));
  }
  note(o, r1 < 1e-8 && r2 < 1e-8 && r3 < 1e-8, "first-order residuals %.1e %.1e %.1e", r1, r2, r3);

  const ParamInterval le = bounds::example_param_ranges(bounds::ExampleRange::integral_limacon_eta);
  const ParamInterval ge = bounds::example_param_ranges(bounds::ExampleRange::integral_exp_gamma);
  const double eta = 0.5 * (std::max(le.lo, 0.6) + le.hi), gamma = 0.5 * (ge.lo + ge.hi);
  const FnSpec pl = FnSpec::integral_limacon(eta), pe = FnSpec::integral_exp(gamma);
  double rl = 0, re = 0;
  for (int i = 0; i < 100; ++i) {
    const CPoint z = random_in_disk(rng, 0.5);
    rl = std::max(rl, std::abs(fn::bb_residual(pl, eta, -0.6, FnSpec::limacon(0.5), z)));
    re = std::max(re, std::abs(fn::bb_residual(pe, 0.5, gamma, FnSpec::exp(), z)));
  }
  note(o, rl < 1e-5 && re < 1e-5, "integral residuals limacon(eta=%.4f) %.1e, exp(gamma=%.4f) %.1e", eta, rl, gamma, re);
  const bool sl = subord::check_by_predicate(pl, RegionSpec::cosh_root()).holds;
  const bool se = subord::check_by_predicate(pe, RegionSpec::cosh_root()).holds;
  note(o, sl && se, "integral solutions inside cosh sqrt z: limacon=%d exp=%d", sl, se);
  return o;
}

Outcome region_consistency() {
  Outcome o;
  std::mt19937_64 rng(0x7e6);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (const RegionSpec& region : {RegionSpec::cosh_root(), RegionSpec::exp(), RegionSpec::crescent(),
                                   RegionSpec::janowski(1.0, 0.5), RegionSpec::limacon(0.5),
                                   RegionSpec::sqrt_half_lens()}) {
    const BoundaryCurve curve = regions::boundary(region, regions::verification_samples);
    int tested = 0, agree = 0;
    while (tested < 1000) {
      const CPoint w(u(rng), u(rng));
      if (std::abs(w) > 4.0 || regions::distance_to_curve(curve.points, w) < 1e-3) continue;
      ++tested;
      agree += regions::contains(region, w) == (regions::winding_number(curve, w) == 1);
    }
    note(o, agree >= 999, "%s %d/1000", regions::to_string(region).c_str(), agree);
  }
  for (double s : {0.25, 0.5, 1.0 / std::numbers::sqrt2}) {
    const RegionSpec r = RegionSpec::limacon(s), d = regions::superset_disk(r);
    int outside = 0;
    for (CPoint w : regions::boundary(r, 10000).points)
      outside += std::abs(w - d.center()) > d.radius() * (1.0 + 1e-12);
    note(o, outside == 0, "limacon(%.4g) boundary outside superset disk: %d/10000", s, outside);
  }
  return o;
}

Outcome admissibility_minima() {
  Outcome o;
  for (proofcheck::PsiKind k : {proofcheck::PsiKind::one_plus_s, proofcheck::PsiKind::s_over_r,
                                proofcheck::PsiKind::one_plus_s_over_r2}) {
    const auto r = proofcheck::admissible_psi_check(k, GridSpec{});
    const double err = std::abs(*r.extremum - proofcheck::psi_closed_minimum(k));
    note(o, err <= 1e-9 && r.passed, "%s min=%.12f err=%.1e", proofcheck::psi_name(k).c_str(), *r.extremum, err);
  }
  return o;
}

Outcome b0_root() {
  Outcome o;
  const double mu = (std::cosh(1.0) - 1.0) / (1.0 - std::cos(1.0));
  const double b0 = roots::bisect([&](double b) { return std::log1p(b) + mu * std::log1p(-b); }, -0.9, -0.01, 1e-14);
  const double res = std::abs((1.0 + b0) * std::pow(1.0 - b0, mu) - 1.0);
  note(o, res < 1e-10 && b0 > -0.2 && b0 < -0.1, "B0=%.12f residual=%.1e", b0, res);
  const double lib = bounds::b0_root();
  note(o, std::abs(lib - b0) < 1e-10, "library B0 differs by %.1e", std::abs(lib - b0));
  return o;
}

Outcome figures_gated() {
  Outcome o;
  for (const auto& name : figures::names()) {
    try {
      const figures::Figure fig = figures::build(name);
      const std::string a = figures::render_svg(fig);
      const std::string b = figures::render_svg(figures::build(name));
      std::ifstream f(std::string(GOLDEN_DIR) + "/" + name + ".svg", std::ios::binary);
      std::ostringstream golden;
      golden << f.rdbuf();
      note(o, fig.gate.holds && a == b && a == golden.str(), "%s gate=%d stable=%d golden=%d", name.c_str(),
           fig.gate.holds, a == b, a == golden.str());
    } catch (const Error& e) {
      note(o, false, "%s: %s", name.c_str(), e.what());
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"sharp-constants-reproduce-decimals", sharp_constants},
      {"boundary-identities-exact", boundary_identities},
      {"scan-obligations-nonnegative-random-parameters", scan_obligations},
      {"sharpness-converse-endpoint-and-winding", sharpness_converse},
      {"solution-residuals-and-containment", solution_residuals},
      {"region-predicate-winding-consistency", region_consistency},
      {"admissibility-minima-dense-scan", admissibility_minima},
      {"b0-root-by-bisection", b0_root},
      {"figures-gated-and-byte-stable", figures_gated},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", int(std::size(criteria)) - failed, std::size(criteria));
  return failed ? 1 : 0;
}
