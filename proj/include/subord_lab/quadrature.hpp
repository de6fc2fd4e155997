#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature for complex-valued integrands on a
// finite real interval, with an optional power substitution for integrable
// endpoint singularities at the left end.

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "subord_lab/error.hpp"
#include "subord_lab/special.hpp"

namespace subord_lab::quad {

struct PowerSubstitution {
  double p = 1.0;  // t = v^p on [0, 1]
};

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 40;
  /// none when p == 1
  PowerSubstitution endpoint_substitution{};
};

namespace detail {

inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  CPoint kronrod;
  double error;
};

template <class F>
Panel gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const CPoint fc = f(c);
  CPoint k = fc * kronrod_weights[7];
  CPoint g = fc * gauss_weights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kronrod_nodes[i];
    const CPoint s = f(c - dx) + f(c + dx);
    k += kronrod_weights[i] * s;
    if (i % 2 == 1) g += gauss_weights[i / 2] * s;
  }
  return {k * h, std::abs((k - g) * h)};
}

template <class F>
CPoint adapt(const F& f, double a, double b, const Panel& whole, double tol, int depth,
             int max_depth, bool& failed) {
  if (whole.error <= tol || std::abs(b - a) < 1e-15) return whole.kronrod;
  if (depth >= max_depth) {
    failed = true;
    return whole.kronrod;
  }
  const double m = 0.5 * (a + b);
  const Panel left = gk15(f, a, m);
  const Panel right = gk15(f, m, b);
  // Converged once refinement agrees with the parent to within tolerance.
  const CPoint sum = left.kronrod + right.kronrod;
  if (left.error + right.error <= tol) return sum;
  return adapt(f, a, m, left, 0.5 * tol, depth + 1, max_depth, failed) +
         adapt(f, m, b, right, 0.5 * tol, depth + 1, max_depth, failed);
}

}  // namespace detail

/// integral_a^b f(t) dt. Throws QuadratureFailure when the depth cap is hit
/// before the local error estimates meet the requested tolerance, or when the
/// integrand produces non-finite values.
template <class F>
CPoint integrate(const F& f, double a, double b, const QuadratureConfig& cfg = {}) {
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
    fail(ErrorKind::BadArgument, "quadrature tolerances must be positive");
  auto g = [&](double t) -> CPoint { return CPoint(f(t)); };
  const double p = cfg.endpoint_substitution.p;
  auto integrand = [&](double v) -> CPoint {
    if (p == 1.0) return g(v);
    // t = a + (b - a) v^p
    const double s = (v - a) / (b - a);
    if (s <= 0.0) return 0.0;
    const double t = a + (b - a) * std::pow(s, p);
    return g(t) * (p * std::pow(s, p - 1.0));
  };
  const detail::Panel whole = detail::gk15(integrand, a, b);
  const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(whole.kronrod));
  bool failed = false;
  const CPoint result = detail::adapt(integrand, a, b, whole, tol, 0, cfg.max_depth, failed);
  if (!is_finite(result)) fail(ErrorKind::QuadratureFailure, "non-finite integrand value");
  if (failed) fail(ErrorKind::QuadratureFailure, "depth cap reached before tolerance was met");
  return result;
}

/// integral_0^1 f(u) u^{a-1} du for a > 0. The substitution u = v^{1/a}
/// removes the algebraic endpoint weight exactly:
///   (1/a) integral_0^1 f(v^{1/a}) dv.
template <class F>
CPoint integrate_power_weight(const F& f, double a, const QuadratureConfig& cfg = {}) {
  if (!(a > 0.0)) fail(ErrorKind::BadArgument, "power weight exponent must be positive");
  const double inv = 1.0 / a;
  auto g = [&](double v) -> CPoint { return CPoint(f(v <= 0.0 ? 0.0 : std::pow(v, inv))); };
  QuadratureConfig plain = cfg;
  plain.endpoint_substitution = {};
  return integrate(g, 0.0, 1.0, plain) * inv;
}

}  // namespace subord_lab::quad
