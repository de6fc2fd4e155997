#pragma once

// Complex elementary and special functions on principal branches.
//
// The entire families below are evaluated from their Maclaurin series in z
// (never through sqrt(z)), so they are single valued and need no branch
// decision: cosh(sqrt z), sinh(sqrt z)/sqrt z and the even-in-sqrt(z)
// combinations built from them.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "subord_lab/error.hpp"

namespace subord_lab {

using CPoint = std::complex<double>;

inline bool is_finite(CPoint z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

namespace special {

inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr int series_terms = 60;
/// Radius on which the fixed-degree series are exact to machine precision.
inline constexpr double series_radius = 1.5;
/// Validated radius for the aux_entire combinations. The nearest singularity
/// (zero of cosh sqrt z or sinh 2 sqrt z) sits at |z| = pi^2/4.
inline constexpr double aux_radius = 1.5;
inline constexpr double integral_series_radius = 2.0;

namespace detail {

// Horner evaluation of sum_{n} z^n / d_n where d_n is produced by the
// recurrence d_n = d_{n-1} * step(n).
template <class Step>
CPoint factorial_series(CPoint z, Step step) {
  std::array<double, series_terms> coeff{};
  double d = 1.0;
  coeff[0] = 1.0;
  for (int n = 1; n < series_terms; ++n) {
    d *= step(n);
    coeff[n] = 1.0 / d;
  }
  CPoint acc = 0.0;
  for (int n = series_terms - 1; n >= 0; --n) acc = acc * z + coeff[n];
  return acc;
}

inline void require_finite(CPoint z, const char* who) {
  if (!is_finite(z)) fail(ErrorKind::Domain, std::string(who) + ": non-finite argument");
}

}  // namespace detail

/// sum z^n / (2n)!  ==  cosh(sqrt z) for either square root.
inline CPoint cosh_sqrt(CPoint z) {
  detail::require_finite(z, "cosh_sqrt");
  if (std::abs(z) > series_radius) return std::cosh(std::sqrt(z));
  return detail::factorial_series(z, [](int n) { return double(2 * n - 1) * double(2 * n); });
}

/// sum z^n / (2n+1)!  ==  sinh(sqrt z)/sqrt z, equal to 1 at the origin.
inline CPoint sinh_over_sqrt(CPoint z) {
  detail::require_finite(z, "sinh_over_sqrt");
  if (std::abs(z) > series_radius) {
    const CPoint u = std::sqrt(z);
    return std::sinh(u) / u;
  }
  return detail::factorial_series(z, [](int n) { return double(2 * n) * double(2 * n + 1); });
}

enum class AuxKind { sinh_over_sqrt, sqrt_tanh_sqrt, sqrt_coth_half_sqrt, sqrt_csch_two_sqrt };

/// Even-in-sqrt(z) combinations that appear in the first-order results.
///   sinh_over_sqrt       sinh u / u
///   sqrt_tanh_sqrt       u tanh u
///   sqrt_coth_half_sqrt  u coth(u/2)
///   sqrt_csch_two_sqrt   u csch(2u)
/// with u = sqrt z. All are rewritten through the two entire series so the
/// removable point z = 0 needs no special casing.
inline CPoint aux_entire(AuxKind kind, CPoint z) {
  detail::require_finite(z, "aux_entire");
  if (std::abs(z) > aux_radius)
    fail(ErrorKind::Domain, "aux_entire: |z| exceeds validated radius " + std::to_string(aux_radius));
  switch (kind) {
    case AuxKind::sinh_over_sqrt:
      return sinh_over_sqrt(z);
    case AuxKind::sqrt_tanh_sqrt:
      // u sinh u / cosh u = z S(z) / C(z)
      return z * sinh_over_sqrt(z) / cosh_sqrt(z);
    case AuxKind::sqrt_coth_half_sqrt:
      // u cosh(u/2) / sinh(u/2) = 2 C(z/4) / S(z/4)
      return 2.0 * cosh_sqrt(z / 4.0) / sinh_over_sqrt(z / 4.0);
    case AuxKind::sqrt_csch_two_sqrt:
      // u / sinh(2u) = 1 / (2 S(4z))
      return 1.0 / (2.0 * sinh_over_sqrt(4.0 * z));
  }
  fail(ErrorKind::BadArgument, "aux_entire: unknown kind");
}

/// Entire parts of the hyperbolic integrals:
///   chi_entire(z) = sum z^{2n} / (2n (2n)!)          = Chi(z) - gamma - log z
///   shi(z)        = sum z^{2n+1} / ((2n+1)(2n+1)!)
inline CPoint chi_entire(CPoint z) {
  const CPoint z2 = z * z;
  CPoint term = 1.0;  // z^{2n}/(2n)!
  CPoint sum = 0.0;
  for (int n = 1; n < series_terms; ++n) {
    term *= z2 / (double(2 * n - 1) * double(2 * n));
    const CPoint add = term / double(2 * n);
    sum += add;
    if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

inline CPoint shi(CPoint z) {
  detail::require_finite(z, "shi");
  if (std::abs(z) > integral_series_radius)
    fail(ErrorKind::Domain, "shi: |z| exceeds series radius 2");
  const CPoint z2 = z * z;
  CPoint term = z;  // z^{2n+1}/(2n+1)!
  CPoint sum = z;
  for (int n = 1; n < series_terms; ++n) {
    term *= z2 / (double(2 * n) * double(2 * n + 1));
    const CPoint add = term / double(2 * n + 1);
    sum += add;
    if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

/// Ein(z) = Chi(z) + Shi(z) - gamma - log z = sum z^n / (n n!), entire.
inline CPoint ein(CPoint z) {
  detail::require_finite(z, "ein");
  CPoint term = 1.0;  // z^n/n!
  CPoint sum = 0.0;
  for (int n = 1; n < 4 * series_terms; ++n) {
    term *= z / double(n);
    const CPoint add = term / double(n);
    sum += add;
    if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

inline bool on_negative_real_axis(CPoint z) { return z.imag() == 0.0 && z.real() <= 0.0; }

/// Chi(z) = gamma + log z + integral_0^z (cosh t - 1)/t dt, principal log.
inline CPoint chi(CPoint z) {
  detail::require_finite(z, "chi");
  if (z == CPoint(0.0)) fail(ErrorKind::Domain, "chi: logarithmic singularity at 0");
  if (on_negative_real_axis(z)) fail(ErrorKind::Domain, "chi: argument on the branch cut");
  if (std::abs(z) > integral_series_radius)
    fail(ErrorKind::Domain, "chi: |z| exceeds series radius 2");
  return euler_gamma + std::log(z) + chi_entire(z);
}

/// Cosine integral Ci(x) = gamma + log x + integral_0^x (cos t - 1)/t dt, x > 0.
inline double ci(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) fail(ErrorKind::Domain, "ci: requires finite x > 0");
  if (x <= 4.0) {
    const double x2 = x * x;
    double term = 1.0;  // (-1)^n x^{2n}/(2n)!
    double sum = 0.0;
    for (int n = 1; n < series_terms; ++n) {
      term *= -x2 / (double(2 * n - 1) * double(2 * n));
      const double add = term / double(2 * n);
      sum += add;
      if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
    }
    return euler_gamma + std::log(x) + sum;
  }
  // Ci(x) = -Re E1(ix); modified Lentz continued fraction for E1.
  const CPoint w(0.0, x);
  constexpr double tiny = 1e-300;
  CPoint b = w + 1.0;
  CPoint c = 1.0 / tiny;
  CPoint d = 1.0 / b;
  CPoint h = d;
  for (int i = 1; i < 1000; ++i) {
    const double a = -double(i) * double(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const CPoint del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  const CPoint e1 = h * std::exp(-w);
  return -e1.real();
}

/// The transcendental constants the bounds are built from.
struct Constants {
  double euler_gamma;
  double chi1;
  double ci1;
  double kappa;
  double mu;
};

inline Constants make_constants() {
  Constants c{};
  c.euler_gamma = special::euler_gamma;
  c.chi1 = chi(CPoint(1.0)).real();
  c.ci1 = ci(1.0);
  c.kappa = (c.chi1 + c.ci1 - 2.0 * c.euler_gamma) / (c.chi1 - c.ci1);
  c.mu = (std::cosh(1.0) - 1.0) / (1.0 - std::cos(1.0));
  return c;
}

inline const Constants& constants() {
  static const Constants c = make_constants();
  return c;
}

}  // namespace special
}  // namespace subord_lab
