// subord_lab: sharp constants, verification scans, subordination checks and
// figures from the command line. JSON on stdout (or --out), exit 0 on
// success, 1 when a checked claim fails, 2 on a configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subord_lab/subord_lab.hpp"

using namespace subord_lab;
using report::Json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_claim_failed = 1;
constexpr int exit_config = 2;

struct Options {
  std::string id;
  std::string target;
  std::optional<double> gamma, eta, s, A, B, A_im, B_im;
  std::string which;
  bool all = false;
  int t_points = 1024;
  std::vector<double> k_values{1.0, 1.5, 2.0, 3.0, 5.0, 10.0};
  bool no_refine = false;
  std::string inner, outer;
  double r = subord::default_r;
  int n = subord::default_n;
  std::string out;
  std::string region;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::BadArgument, "cannot write " + path);
  f << text;
}

Json envelope(const std::string& command, Json config) {
  Json j;
  j["schema"] = report::schema_version;
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

double need(const std::optional<double>& v, const char* flag) {
  if (!v) fail(ErrorKind::BadArgument, std::string("missing --") + flag);
  return *v;
}

RegionSpec target_region(const Options& o) {
  if (o.target == "exp") return RegionSpec::exp();
  if (o.target == "sqrt") return RegionSpec::sqrt_half_lens();
  if (o.target == "crescent") return RegionSpec::crescent();
  if (o.target == "janowski") return RegionSpec::janowski(need(o.A, "A"), need(o.B, "B"));
  if (o.target == "limacon") return RegionSpec::limacon(need(o.s, "s"));
  fail(ErrorKind::BadArgument, "unknown --target '" + o.target + "'");
}

void put(Json& j, const char* key, const std::optional<double>& v) {
  if (v) j[key] = *v;
}

Json option_echo(const Options& o) {
  Json c;
  if (!o.id.empty()) c["id"] = o.id;
  if (!o.target.empty()) c["target"] = o.target;
  if (!o.which.empty()) c["which"] = o.which;
  put(c, "gamma", o.gamma);
  put(c, "eta", o.eta);
  put(c, "s", o.s);
  put(c, "A", o.A);
  put(c, "B", o.B);
  put(c, "A_im", o.A_im);
  put(c, "B_im", o.B_im);
  return c;
}

// ---- bounds -----------------------------------------------------------------

const std::vector<std::string> bound_ids = {"bb-range",          "bb-janowski",        "ratio-janowski-eta",
                                            "sharp-eta",         "cosh-janowski-eta",  "cosh-ratio-eta0",
                                            "admissibility",     "integral-limacon-eta", "integral-exp-gamma"};

int cmd_bounds(const Options& o) {
  Json config = option_echo(o);
  Json result;
  if (o.id == "bb-range") {
    if (o.target != "crescent" && o.target != "limacon" && o.target != "exp")
      fail(ErrorKind::BadArgument, "bb-range --target must be crescent, limacon or exp");
    result["interval"] = report::to_json(bounds::bb_eta_range(target_region(o), need(o.gamma, "gamma")));
  } else if (o.id == "bb-janowski") {
    result["feasible"] =
        bounds::bb_janowski_feasible(need(o.eta, "eta"), need(o.gamma, "gamma"), need(o.A, "A"), need(o.B, "B"));
  } else if (o.id == "ratio-janowski-eta") {
    const CPoint A(need(o.A, "A"), o.A_im.value_or(0.0)), B(need(o.B, "B"), o.B_im.value_or(0.0));
    result["eta_min"] = bounds::eta_min_ratio_janowski(A, B);
  } else if (o.id == "sharp-eta") {
    const auto e = bounds::eta_star(target_region(o));
    result["eta_star"] = e.value;
    result["closed_form"] = e.closed_form;
    result["closed_form_mismatch"] = e.mismatch;
    result["binding_end"] = e.binding_end;
    result["lower_end"] = e.lower_end;
    result["upper_end"] = e.upper_end;
  } else if (o.id == "cosh-janowski-eta") {
    const double A = need(o.A, "A"), B = need(o.B, "B");
    result["eta_min"] = bounds::cosh_dominant_eta_min(A, B);
    result["b0"] = bounds::b0_root();
    if (o.eta) result["condition_holds"] = bounds::cosh_dominant_eta_condition(*o.eta, A, B);
  } else if (o.id == "cosh-ratio-eta0") {
    result["eta0"] = bounds::cosh_ratio_eta0();
  } else if (o.id == "admissibility") {
    using bounds::Admissibility;
    const std::map<std::string, Admissibility> kinds = {{"zp_minus_1", Admissibility::zp_minus_1},
                                                        {"zp_over_p", Admissibility::zp_over_p},
                                                        {"zp_over_p2", Admissibility::zp_over_p2}};
    const auto it = kinds.find(o.which);
    if (it == kinds.end()) fail(ErrorKind::BadArgument, "--which must be zp_minus_1, zp_over_p or zp_over_p2");
    result["threshold"] = bounds::admissibility_threshold(it->second);
  } else if (o.id == "integral-limacon-eta") {
    result["interval"] = report::to_json(bounds::example_param_ranges(bounds::ExampleRange::integral_limacon_eta));
  } else if (o.id == "integral-exp-gamma") {
    result["interval"] = report::to_json(bounds::example_param_ranges(bounds::ExampleRange::integral_exp_gamma));
  } else {
    fail(ErrorKind::BadArgument, "unknown bounds id '" + o.id + "'");
  }
  Json j = envelope("bounds", config);
  j["result"] = result;
  emit(report::dump(j), o.out);
  return exit_ok;
}

// ---- verify -----------------------------------------------------------------

const std::vector<std::string> claim_ids = {
    "bb-crescent",    "bb-limacon",     "bb-exp",     "bb-janowski", "psi-one-plus-s",
    "psi-s-over-r",   "psi-s-over-r2",  "q-tanh",     "q-cosh-minus-1", "q-janowski",
    "ratio-tanh",     "ratio-cosh",     "ratio-janowski", "cosh-csch-sum"};

double midpoint(const ParamInterval& p) {
  if (p.empty() || !std::isfinite(p.lo)) fail(ErrorKind::BadArgument, "admissible eta interval is empty or unbounded");
  return std::isfinite(p.hi) ? 0.5 * (p.lo + p.hi) : p.lo + 1.0;
}

VerificationReport run_claim(const std::string& id, const Options& o, const GridSpec& grid, Json& params) {
  using namespace proofcheck;
  auto bb = [&](const FunctionalCase& c, const RegionSpec& target, double default_gamma) {
    const double gamma = o.gamma.value_or(default_gamma);
    const double eta = o.eta ? *o.eta : midpoint(bounds::bb_eta_range(target, gamma));
    params = {{"gamma", gamma}, {"eta", eta}};
    return scan_nonneg(c, eta, gamma, grid);
  };
  if (id == "bb-crescent") return bb(FunctionalCase::crescent(), RegionSpec::crescent(), -0.6);
  if (id == "bb-limacon") {
    const double s = o.s.value_or(0.5);
    auto r = bb(FunctionalCase::limacon(s), RegionSpec::limacon(s), -0.6);
    params["s"] = s;
    return r;
  }
  if (id == "bb-exp") return bb(FunctionalCase::exp(), RegionSpec::exp(), -0.3);
  if (id == "bb-janowski") {
    const double A = o.A.value_or(1.0), B = o.B.value_or(0.0);
    const double gamma = o.gamma.value_or(0.0), eta = o.eta.value_or(0.5);
    params = {{"A", A}, {"B", B}, {"gamma", gamma}, {"eta", eta}};
    if (!bounds::bb_janowski_feasible(eta, gamma, A, B))
      fail(ErrorKind::BadArgument, "(eta, gamma) outside the Janowski feasibility region");
    return scan_nonneg(FunctionalCase::janowski(A, B), eta, gamma, grid);
  }
  if (id == "psi-one-plus-s") return admissible_psi_check(PsiKind::one_plus_s, grid);
  if (id == "psi-s-over-r") return admissible_psi_check(PsiKind::s_over_r, grid);
  if (id == "psi-s-over-r2") return admissible_psi_check(PsiKind::one_plus_s_over_r2, grid);
  if (id == "q-tanh") return starlike_and_ratio_checks(RatioCheck::q_tanh(), grid);
  if (id == "q-cosh-minus-1") return starlike_and_ratio_checks(RatioCheck::q_cosh_minus_1(), grid);
  if (id == "ratio-tanh") return starlike_and_ratio_checks(RatioCheck::ratio_tanh(), grid);
  if (id == "ratio-cosh") return starlike_and_ratio_checks(RatioCheck::ratio_cosh(), grid);
  if (id == "q-janowski") {
    const double A = o.A.value_or(1.0), B = o.B.value_or(0.5);
    params = {{"A", A}, {"B", B}};
    return starlike_and_ratio_checks(RatioCheck::q_janowski(A, B), grid);
  }
  if (id == "ratio-janowski") {
    const double B = o.B.value_or(0.5);
    params = {{"B", B}};
    return starlike_and_ratio_checks(RatioCheck::ratio_janowski(B), grid);
  }
  if (id == "cosh-csch-sum") {
    const double eta = o.eta.value_or(bounds::cosh_ratio_eta0());
    params = {{"eta", eta}};
    return starlike_and_ratio_checks(RatioCheck::cosh_csch_sum(eta), grid);
  }
  fail(ErrorKind::BadArgument, "unknown claim '" + id + "'");
}

int cmd_verify(const Options& o) {
  if (o.all == !o.id.empty()) fail(ErrorKind::BadArgument, "give exactly one of a claim id or --all");
  GridSpec grid;
  grid.t_points = o.t_points;
  grid.k_values = o.k_values;
  grid.refine = !o.no_refine;
  grid.validate();

  Json config = option_echo(o);
  config["all"] = o.all;
  config["grid"] = report::to_json(grid);
  const std::vector<std::string> ids = o.all ? claim_ids : std::vector<std::string>{o.id};
  Json reports = Json::array();
  int failed = 0;
  for (const auto& id : ids) {
    Json params = Json::object();
    const VerificationReport r = run_claim(id, o, grid, params);
    Json rj = report::to_json(r);
    rj["params"] = params;
    reports.push_back(rj);
    failed += r.passed ? 0 : 1;
  }
  Json j = envelope("verify", config);
  j["reports"] = reports;
  j["summary"] = {{"total", int(ids.size())}, {"passed", int(ids.size()) - failed}, {"failed", failed}};
  emit(report::dump(j), o.out);
  return failed ? exit_claim_failed : exit_ok;
}

// ---- subcheck ---------------------------------------------------------------

int cmd_subcheck(const Options& o) {
  const FnSpec inner = fn::parse(o.inner);
  Json config;
  config["inner"] = fn::to_string(inner);
  config["r"] = o.r;
  config["n"] = o.n;
  SubordVerdict v;
  std::string method;
  if (o.outer.rfind("region:", 0) == 0) {
    const RegionSpec region = regions::parse_region(o.outer.substr(7));
    config["outer"] = "region:" + regions::to_string(region);
    method = "predicate";
    v = subord::check_by_predicate(inner, region, o.r, o.n);
  } else if (o.outer.rfind("fn:", 0) == 0) {
    const FnSpec outer = fn::parse(o.outer.substr(3));
    config["outer"] = "fn:" + fn::to_string(outer);
    method = "winding";
    v = subord::check_by_winding(inner, outer, o.r, o.n);
  } else {
    fail(ErrorKind::Parse, "--outer must start with region: or fn:");
  }
  Json j = envelope("subcheck", config);
  Json result = report::to_json(v);
  result["method"] = method;
  j["result"] = result;
  emit(report::dump(j), o.out);
  return v.holds ? exit_ok : exit_claim_failed;
}

// ---- figure / curve ----------------------------------------------------------

int cmd_figure(const Options& o) {
  figures::Figure fig;
  try {
    fig = figures::build(o.id);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GateFailed) throw;
    std::cerr << e.what() << "\n";
    return exit_claim_failed;
  }
  emit(figures::render_svg(fig), o.out.empty() ? o.id + ".svg" : o.out);
  return exit_ok;
}

int cmd_curve(const Options& o) {
  const RegionSpec region = regions::parse_region(o.region);
  emit(regions::to_csv(regions::boundary(region, o.n)), o.out);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential subordination toolkit for the cosh(sqrt z) starlike class"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* sc) {
    sc->add_option("--gamma", o.gamma, "gamma");
    sc->add_option("--eta", o.eta, "eta");
    sc->add_option("--s", o.s, "limacon parameter s");
    sc->add_option("--A", o.A, "Janowski A (real part)");
    sc->add_option("--B", o.B, "Janowski B (real part)");
    sc->add_option("--out", o.out, "output path (default stdout)");
  };

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a sharp constant or admissible range");
  bounds_cmd->add_option("id", o.id, "bound id")->required()->check(CLI::IsMember(bound_ids));
  bounds_cmd->add_option("--target", o.target, "exp | sqrt | crescent | janowski | limacon");
  bounds_cmd->add_option("--which", o.which, "zp_minus_1 | zp_over_p | zp_over_p2");
  bounds_cmd->add_option("--A-im", o.A_im, "imaginary part of A");
  bounds_cmd->add_option("--B-im", o.B_im, "imaginary part of B");
  add_params(bounds_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run verification scans");
  verify_cmd->add_option("claim", o.id, "claim id")->check(CLI::IsMember(claim_ids));
  verify_cmd->add_flag("--all", o.all, "run every claim with default parameters");
  verify_cmd->add_option("--t-points", o.t_points, "t grid size (>= 256)");
  verify_cmd->add_option("--k-values", o.k_values, "k grid (each >= 1)")->delimiter(',');
  verify_cmd->add_flag("--no-refine", o.no_refine, "skip golden-section polishing");
  add_params(verify_cmd);

  auto* sub_cmd = app.add_subcommand("subcheck", "sampled subordination check");
  sub_cmd->add_option("--inner", o.inner, "inner function, e.g. phi_eta_cosh:eta=1.25854")->required();
  sub_cmd->add_option("--outer", o.outer, "region:<form> (predicate) or fn:<form> (winding)")->required();
  sub_cmd->add_option("--r", o.r, "sampling radius in (0, 1)");
  sub_cmd->add_option("--n", o.n, "samples on the circle (>= 256)");
  sub_cmd->add_option("--out", o.out, "output path (default stdout)");

  auto* fig_cmd = app.add_subcommand("figure", "render a gated SVG figure");
  fig_cmd->add_option("name", o.id, "figure name")->required()->check(CLI::IsMember(figures::names()));
  fig_cmd->add_option("--out", o.out, "output path (default <name>.svg)");

  auto* curve_cmd = app.add_subcommand("curve", "boundary curve as CSV");
  curve_cmd->add_option("--region", o.region, "region form, e.g. limacon:s=0.5")->required();
  curve_cmd->add_option("--n", o.n, "samples (>= 64)");
  curve_cmd->add_option("--out", o.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_config;
  }

  try {
    if (*bounds_cmd) return cmd_bounds(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*sub_cmd) return cmd_subcheck(o);
    if (*fig_cmd) return cmd_figure(o);
    if (*curve_cmd) return cmd_curve(o);
  } catch (const Error& e) {
    std::cerr << "subord_lab: " << e.what() << "\n";
    return exit_config;
  }
  return exit_config;
}
