#pragma once

// Grid scans for the inequalities the Briot-Bouquet and admissibility
// arguments settle by computation: non-negativity of the contradiction
// functionals on the boundary, and lower bounds on moduli and real parts.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "subord_lab/bounds.hpp"
#include "subord_lab/error.hpp"
#include "subord_lab/parallel.hpp"
#include "subord_lab/regions.hpp"
#include "subord_lab/roots.hpp"
#include "subord_lab/special.hpp"
#include "subord_lab/textform.hpp"

namespace subord_lab {

struct GridSpec {
  int t_points = 1024;
  std::vector<double> k_values{1.0, 1.5, 2.0, 3.0, 5.0, 10.0};
  bool refine = true;

  void validate() const {
    if (t_points < 256) fail(ErrorKind::BadArgument, "grid needs at least 256 t points");
    if (k_values.empty()) fail(ErrorKind::BadArgument, "grid needs at least one k value");
    for (double k : k_values)
      if (!(k >= 1.0) || !std::isfinite(k)) fail(ErrorKind::BadArgument, "k values must be finite and >= 1");
  }
};

struct VerificationReport {
  std::string claim_id;
  double min_value = 0.0;
  double argmin_t = 0.0;
  double argmin_k = 0.0;
  bool passed = false;
  double tolerance = 0.0;
  GridSpec grid;
  std::optional<bool> endpoint_argmin;  // boundary scans: argmin near t = 0 or pi/2
  std::optional<bool> attained;         // modulus scans: claimed minimum reached
  std::optional<double> extremum;       // raw minimum of the scanned quantity
  std::string note;
};

namespace proofcheck {

inline constexpr double nonneg_tolerance = 1e-9;
inline constexpr double ratio_tolerance = 1e-6;
inline constexpr double endpoint_window = 1e-3;
inline constexpr double denominator_floor = 1e-12;
inline constexpr int golden_iterations = 50;

/// B(t) = cosh e^{it} + k e^{it} sinh e^{it} / (2(eta cosh e^{it} + gamma)).
inline CPoint boundary_operator(double t, double k, double eta, double gamma) {
  const CPoint u = regions::unit_circle(t);
  const CPoint c = std::cosh(u);
  const CPoint den = 2.0 * (eta * c + gamma);
  if (std::abs(den) <= 2.0 * denominator_floor)
    fail(ErrorKind::DenominatorVanishes, "eta cosh e^{it} + gamma vanishes at t = " + text::num(t));
  return c + k * u * std::sinh(u) / den;
}

enum class CaseKind { Crescent, Limacon, Exp, Janowski };

struct FunctionalCase {
  CaseKind kind = CaseKind::Crescent;
  double s = 0.0;
  double A = 0.0;
  double B = 0.0;

  static FunctionalCase crescent() { return {CaseKind::Crescent}; }
  static FunctionalCase exp() { return {CaseKind::Exp}; }
  static FunctionalCase limacon(double s) {
    RegionSpec::limacon(s);
    return {CaseKind::Limacon, s};
  }
  static FunctionalCase janowski(double A, double B) {
    RegionSpec::janowski(A, B);
    return {CaseKind::Janowski, 0.0, A, B};
  }
};

inline std::string case_name(const FunctionalCase& c) {
  switch (c.kind) {
    case CaseKind::Crescent: return "bb-crescent";
    case CaseKind::Limacon: return "bb-limacon";
    case CaseKind::Exp: return "bb-exp";
    case CaseKind::Janowski: return "bb-janowski";
  }
  return "?";
}

/// The quantity that must stay >= 0 when B(t) lies outside the target domain:
///   crescent  |B-1|^2 - 2
///   limacon   |B-1|^2 - s^2 (s+2)^2
///   exp       |log B|^2 - 1
///   janowski  |B-1|^2 - |A - B B|^2
inline double F_functional(const FunctionalCase& c, double t, double k, double eta, double gamma) {
  const CPoint b = boundary_operator(t, k, eta, gamma);
  switch (c.kind) {
    case CaseKind::Crescent: return std::norm(b - 1.0) - 2.0;
    case CaseKind::Limacon: {
      const double r = c.s * c.s * (c.s + 2.0) * (c.s + 2.0);
      return std::norm(b - 1.0) - r;
    }
    case CaseKind::Exp:
      if (special::on_negative_real_axis(b))
        fail(ErrorKind::BranchCut, "B(t) on the negative real axis at t = " + text::num(t));
      return std::norm(std::log(b)) - 1.0;
    case CaseKind::Janowski: return std::norm(b - 1.0) - std::norm(c.A - c.B * b);
  }
  fail(ErrorKind::BadArgument, "unknown functional case");
}

/// F with the denominator 16|eta cosh e^{it} + gamma|^4 cleared, i.e. the
/// polynomial-in-(sin, cos, sinh, cosh) form N - cD whose minimum sits at an
/// end of [0, pi/2]. Same sign as F_functional.
inline double cleared_functional(const FunctionalCase& c, double t, double k, double eta, double gamma) {
  const double f = F_functional(c, t, k, eta, gamma);
  if (c.kind == CaseKind::Exp) return f;
  const double d = std::norm(eta * std::cosh(regions::unit_circle(t)) + gamma);
  return 16.0 * d * d * f;
}

namespace detail {

struct Cell {
  double t = 0.0;
  double k = 0.0;
  double f = 0.0;
  double w = 0.0;
  bool branch_cut = false;
};

// Lexicographic tie-break on (t, k).
inline bool less_cell(double va, const Cell& a, double vb, const Cell& b) {
  if (va != vb) return va < vb;
  if (a.t != b.t) return a.t < b.t;
  return a.k < b.k;
}

// Golden-section search over the grid cells either side of t.
template <class F>
roots::Minimum polish(const F& f, double t, double dt, double lo, double hi) {
  return roots::golden_section(f, std::max(lo, t - dt), std::min(hi, t + dt), golden_iterations);
}

}  // namespace detail

/// Minimises F over t in [0, pi/2] x grid.k_values. passed iff the minimum is
/// >= -1e-9. A branch-cut crossing (exp case) fails the scan.
inline VerificationReport scan_nonneg(const FunctionalCase& c, double eta, double gamma, const GridSpec& grid) {
  grid.validate();
  const double half_pi = std::numbers::pi / 2.0;
  const std::size_t nt = std::size_t(grid.t_points);
  const std::size_t nk = grid.k_values.size();
  const double dt = half_pi / double(nt - 1);

  const auto cells = parallel_map<detail::Cell>(nt * nk, [&](std::size_t idx) {
    detail::Cell cell;
    cell.k = grid.k_values[idx / nt];
    const std::size_t i = idx % nt;
    cell.t = i + 1 == nt ? half_pi : double(i) * dt;
    try {
      cell.f = F_functional(c, cell.t, cell.k, eta, gamma);
      cell.w = cleared_functional(c, cell.t, cell.k, eta, gamma);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BranchCut) throw;
      cell.branch_cut = true;
    }
    return cell;
  });

  VerificationReport rep;
  rep.claim_id = case_name(c);
  rep.tolerance = nonneg_tolerance;
  rep.grid = grid;

  for (const auto& cell : cells) {
    if (!cell.branch_cut) continue;
    rep.min_value = -std::numeric_limits<double>::infinity();
    rep.argmin_t = cell.t;
    rep.argmin_k = cell.k;
    rep.passed = false;
    rep.note = "BranchCut: B(t) crosses the negative real axis";
    return rep;
  }

  std::size_t best_f = 0, best_w = 0;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (detail::less_cell(cells[i].f, cells[i], cells[best_f].f, cells[best_f])) best_f = i;
    if (detail::less_cell(cells[i].w, cells[i], cells[best_w].w, cells[best_w])) best_w = i;
  }
  rep.min_value = cells[best_f].f;
  rep.argmin_t = cells[best_f].t;
  rep.argmin_k = cells[best_f].k;
  double w_t = cells[best_w].t;

  if (grid.refine) {
    const double kf = cells[best_f].k;
    const auto mf = detail::polish([&](double t) { return F_functional(c, t, kf, eta, gamma); },
                                   rep.argmin_t, dt, 0.0, half_pi);
    if (mf.value < rep.min_value) {
      rep.min_value = mf.value;
      rep.argmin_t = mf.x;
    }
    const double kw = cells[best_w].k;
    const auto mw = detail::polish([&](double t) { return cleared_functional(c, t, kw, eta, gamma); },
                                   w_t, dt, 0.0, half_pi);
    if (mw.value < cells[best_w].w) w_t = mw.x;
  }
  rep.endpoint_argmin = w_t <= endpoint_window || w_t >= half_pi - endpoint_window;
  rep.passed = rep.min_value >= -nonneg_tolerance;
  return rep;
}

enum class PsiKind { one_plus_s, s_over_r, one_plus_s_over_r2 };

inline std::string psi_name(PsiKind k) {
  switch (k) {
    case PsiKind::one_plus_s: return "psi-one-plus-s";
    case PsiKind::s_over_r: return "psi-s-over-r";
    case PsiKind::one_plus_s_over_r2: return "psi-s-over-r2";
  }
  return "?";
}

/// |g(theta)| at m = 1 with u = e^{i theta/2}:
///   one_plus_s          |sinh u|
///   s_over_r            |tanh u|
///   one_plus_s_over_r2  |sinh u / cosh^2 u|
inline double psi_modulus(PsiKind kind, double theta) {
  const CPoint u = regions::unit_circle(theta / 2.0);
  switch (kind) {
    case PsiKind::one_plus_s: return std::abs(std::sinh(u));
    case PsiKind::s_over_r: return std::abs(std::tanh(u));
    case PsiKind::one_plus_s_over_r2: {
      const CPoint c = std::cosh(u);
      return std::abs(std::sinh(u) / (c * c));
    }
  }
  fail(ErrorKind::BadArgument, "unknown psi selector");
}

/// Closed value of min over theta of psi_modulus.
inline double psi_closed_minimum(PsiKind kind) {
  switch (kind) {
    case PsiKind::one_plus_s: return std::sin(1.0);
    case PsiKind::s_over_r: return std::tanh(1.0);
    case PsiKind::one_plus_s_over_r2: return std::sinh(1.0) / (std::cosh(1.0) * std::cosh(1.0));
  }
  fail(ErrorKind::BadArgument, "unknown psi selector");
}

inline int dense_theta_points(const GridSpec& grid) { return std::max(4096, 4 * grid.t_points); }

/// Over theta in (-pi, pi] and m in grid.k_values, checks (m/2)|g| against
/// the claimed bound: (m/2) sin 1, (m/2) tanh 1, and the m-free
/// sinh 1/(2 cosh^2 1). Passes iff no margin is below -1e-9 and the m = 1
/// minimum reaches the bound within 1e-9.
inline VerificationReport admissible_psi_check(PsiKind kind, const GridSpec& grid) {
  grid.validate();
  const int n = dense_theta_points(grid);
  const double closed = psi_closed_minimum(kind);
  auto bound = [&](double m) { return kind == PsiKind::one_plus_s_over_r2 ? closed / 2.0 : m * closed / 2.0; };
  auto theta_at = [&](int j) { return j == n ? std::numbers::pi : -std::numbers::pi + 2.0 * std::numbers::pi * j / n; };

  const auto g = parallel_map<double>(std::size_t(n), [&](std::size_t j) { return psi_modulus(kind, theta_at(int(j) + 1)); });
  std::size_t jmin = 0;
  for (std::size_t j = 1; j < g.size(); ++j)
    if (g[j] < g[jmin]) jmin = j;
  double raw_min = g[jmin];
  double raw_theta = theta_at(int(jmin) + 1);
  if (grid.refine) {
    const double h = 2.0 * std::numbers::pi / n;
    const auto m = roots::golden_section([&](double th) { return psi_modulus(kind, th); },
                                         std::max(-std::numbers::pi, raw_theta - h),
                                         std::min(std::numbers::pi, raw_theta + h), golden_iterations);
    if (m.value < raw_min) {
      raw_min = m.value;
      raw_theta = m.x;
    }
  }

  VerificationReport rep;
  rep.claim_id = psi_name(kind);
  rep.tolerance = nonneg_tolerance;
  rep.grid = grid;
  rep.extremum = raw_min;
  rep.min_value = std::numeric_limits<double>::infinity();
  for (double m : grid.k_values) {
    const double margin = m / 2.0 * raw_min - bound(m);
    if (margin < rep.min_value) {
      rep.min_value = margin;
      rep.argmin_t = raw_theta;
      rep.argmin_k = m;
    }
  }
  rep.attained = std::abs(raw_min / 2.0 - bound(1.0)) <= nonneg_tolerance;
  rep.passed = rep.min_value >= -nonneg_tolerance && *rep.attained;
  return rep;
}

enum class RatioKind { q_tanh, q_cosh_minus_1, q_janowski, ratio_tanh, ratio_cosh, ratio_janowski, cosh_csch_sum };

struct RatioCheck {
  RatioKind kind = RatioKind::q_tanh;
  double A = 1.0;
  double B = 0.0;
  double eta = 0.0;

  static RatioCheck q_tanh() { return {RatioKind::q_tanh}; }
  static RatioCheck q_cosh_minus_1() { return {RatioKind::q_cosh_minus_1}; }
  static RatioCheck ratio_tanh() { return {RatioKind::ratio_tanh}; }
  static RatioCheck ratio_cosh() { return {RatioKind::ratio_cosh}; }
  static RatioCheck q_janowski(double A, double B) {
    RegionSpec::janowski(A, B);
    if (!(std::abs(B) < 1.0)) fail(ErrorKind::BadArgument, "q_janowski requires |B| < 1");
    return {RatioKind::q_janowski, A, B};
  }
  static RatioCheck ratio_janowski(double B) {
    if (!(std::abs(B) < 1.0)) fail(ErrorKind::BadArgument, "ratio_janowski requires |B| < 1");
    return {RatioKind::ratio_janowski, 1.0, B};
  }
  static RatioCheck cosh_csch_sum(double eta) {
    if (!(eta >= bounds::cosh_ratio_eta0()))
      fail(ErrorKind::BadArgument, "cosh_csch_sum requires eta >= eta0");
    return {RatioKind::cosh_csch_sum, 1.0, 0.0, eta};
  }
};

inline std::string ratio_name(const RatioCheck& r) {
  switch (r.kind) {
    case RatioKind::q_tanh: return "q-tanh";
    case RatioKind::q_cosh_minus_1: return "q-cosh-minus-1";
    case RatioKind::q_janowski: return "q-janowski";
    case RatioKind::ratio_tanh: return "ratio-tanh";
    case RatioKind::ratio_cosh: return "ratio-cosh";
    case RatioKind::ratio_janowski: return "ratio-janowski";
    case RatioKind::cosh_csch_sum: return "cosh-csch-sum";
  }
  return "?";
}

/// The real part being bounded, as a function of z.
///   q_tanh, ratio_tanh          1/2 + sqrt z csch 2 sqrt z
///   q_cosh_minus_1, ratio_cosh  (sqrt z / 2) coth(sqrt z / 2)
///   q_janowski, ratio_janowski  1/(1 + Bz)
///   cosh_csch_sum               eta cosh sqrt z + sqrt z csch 2 sqrt z
inline double ratio_value(const RatioCheck& r, CPoint z) {
  using special::AuxKind;
  switch (r.kind) {
    case RatioKind::q_tanh:
    case RatioKind::ratio_tanh: return 0.5 + special::aux_entire(AuxKind::sqrt_csch_two_sqrt, z).real();
    case RatioKind::q_cosh_minus_1:
    case RatioKind::ratio_cosh: return 0.5 * special::aux_entire(AuxKind::sqrt_coth_half_sqrt, z).real();
    case RatioKind::q_janowski:
    case RatioKind::ratio_janowski: return (1.0 / (1.0 + r.B * z)).real();
    case RatioKind::cosh_csch_sum:
      return (r.eta * special::cosh_sqrt(z) + special::aux_entire(AuxKind::sqrt_csch_two_sqrt, z)).real();
  }
  fail(ErrorKind::BadArgument, "unknown ratio selector");
}

inline double ratio_bound(const RatioCheck& r) {
  switch (r.kind) {
    case RatioKind::q_tanh:
    case RatioKind::ratio_tanh: return 0.5 + 1.0 / std::sinh(2.0);
    case RatioKind::q_cosh_minus_1: return 0.5 / std::tan(0.5);
    case RatioKind::ratio_cosh: return 0.0;
    case RatioKind::q_janowski:
    case RatioKind::ratio_janowski: return 1.0 / (1.0 + std::abs(r.B));
    case RatioKind::cosh_csch_sum: return -0.5;
  }
  fail(ErrorKind::BadArgument, "unknown ratio selector");
}

inline constexpr double ratio_radii[] = {0.9, 0.99, 0.999};

/// Minimises ratio_value over z = r e^{i theta}, r in {0.9, 0.99, 0.999}.
/// passed iff the minimum exceeds the bound minus 1e-6; argmin_k holds r.
inline VerificationReport starlike_and_ratio_checks(const RatioCheck& r, const GridSpec& grid) {
  grid.validate();
  const int n = dense_theta_points(grid);
  const std::size_t nr = std::size(ratio_radii);
  auto theta_at = [&](int j) { return -std::numbers::pi + 2.0 * std::numbers::pi * (j + 1) / n; };
  const auto v = parallel_map<double>(std::size_t(n) * nr, [&](std::size_t idx) {
    const double rad = ratio_radii[idx / n];
    return ratio_value(r, rad * regions::unit_circle(theta_at(int(idx % n))));
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = i;
  double raw = v[best];
  double theta = theta_at(int(best % n));
  const double rad = ratio_radii[best / n];
  if (grid.refine) {
    const double h = 2.0 * std::numbers::pi / n;
    const auto m = roots::golden_section(
        [&](double th) { return ratio_value(r, rad * regions::unit_circle(th)); }, theta - h, theta + h,
        golden_iterations);
    if (m.value < raw) {
      raw = m.value;
      theta = std::remainder(m.x, 2.0 * std::numbers::pi);
    }
  }
  VerificationReport rep;
  rep.claim_id = ratio_name(r);
  rep.tolerance = ratio_tolerance;
  rep.grid = grid;
  rep.extremum = raw;
  rep.min_value = raw - ratio_bound(r);
  rep.argmin_t = theta;
  rep.argmin_k = rad;
  rep.passed = rep.min_value >= -ratio_tolerance;
  return rep;
}

}  // namespace proofcheck
}  // namespace subord_lab
