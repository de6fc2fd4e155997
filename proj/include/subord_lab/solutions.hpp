#pragma once

// Explicit solutions of the first-order and Briot-Bouquet equations, and the
// integral operators whose solutions are only available as quadratures.

#include <cmath>
#include <complex>
#include <string>

#include "subord_lab/error.hpp"
#include "subord_lab/quadrature.hpp"
#include "subord_lab/special.hpp"

namespace subord_lab::solutions {

using quad::QuadratureConfig;

namespace detail {

inline void require_nonzero_eta(double eta, const char* who) {
  if (eta == 0.0 || !std::isfinite(eta)) fail(ErrorKind::BadArgument, std::string(who) + ": eta must be finite and nonzero");
}

// log(1 + w) without cancellation for small |w|.
inline CPoint log1p(CPoint w) {
  const CPoint u = 1.0 + w;
  if (u == CPoint(1.0)) return w;
  return std::log(u) * w / (u - 1.0);
}

}  // namespace detail

/// sum_{n>=1} z^n / (n (2n)!)  ==  2 Chi(sqrt z) - log z - 2 gamma, entire.
inline CPoint chi_sqrt_entire(CPoint z) {
  CPoint acc = 0.0;
  double fact = 1.0;  // (2n)!
  CPoint zn = 1.0;
  for (int n = 1; n < special::series_terms; ++n) {
    fact *= double(2 * n - 1) * double(2 * n);
    zn *= z;
    const CPoint add = zn / (double(n) * fact);
    acc += add;
    if (std::abs(add) <= 1e-18 * std::abs(acc)) break;
  }
  return acc;
}

/// Solution of 1 + eta z f'(z) = cosh(sqrt z) with f(0) = 1.
inline CPoint phi_eta_cosh(CPoint z, double eta) {
  detail::require_nonzero_eta(eta, "phi_eta_cosh");
  if (std::abs(z) > special::series_radius) fail(ErrorKind::Domain, "phi_eta_cosh: |z| too large");
  return 1.0 + chi_sqrt_entire(z) / eta;
}

/// (cosh sqrt z - 1) / (eta z), from the series so z = 0 is regular.
inline CPoint phi_eta_cosh_derivative(CPoint z, double eta) {
  detail::require_nonzero_eta(eta, "phi_eta_cosh");
  CPoint acc = 0.0;
  double fact = 1.0;
  CPoint zn = 1.0;  // z^{n-1}
  for (int n = 1; n < special::series_terms; ++n) {
    fact *= double(2 * n - 1) * double(2 * n);
    const CPoint add = zn / fact;
    acc += add;
    if (std::abs(add) <= 1e-18 * std::abs(acc)) break;
    zn *= z;
  }
  return acc / eta;
}

/// m_eta(z) = 1 + (A/eta) z, the B = 0 solution.
inline CPoint m_eta(CPoint z, double eta, double A) {
  detail::require_nonzero_eta(eta, "m_eta");
  return 1.0 + (A / eta) * z;
}

/// Solution of 1 + eta z f'(z) = (1 + Az)/(1 + Bz) with f(0) = 1:
/// 1 + ((A - B)/(eta B)) log(1 + Bz), or m_eta when B = 0.
inline CPoint phi_eta_janowski(CPoint z, double eta, double A, double B) {
  detail::require_nonzero_eta(eta, "phi_eta_janowski");
  if (B == 0.0) return m_eta(z, eta, A);
  if (!(std::abs(B * z) < 1.0)) fail(ErrorKind::BadArgument, "phi_eta_janowski: requires |Bz| < 1");
  return 1.0 + ((A - B) / (eta * B)) * detail::log1p(B * z);
}

inline CPoint phi_eta_janowski_derivative(CPoint z, double eta, double A, double B) {
  detail::require_nonzero_eta(eta, "phi_eta_janowski");
  return (A - B) / (eta * (1.0 + B * z));
}

/// Open-door function c(1+z)/(1-z) + 2z/(1-z^2).
inline CPoint open_door(double c, CPoint z) {
  if (z == CPoint(1.0) || z == CPoint(-1.0)) fail(ErrorKind::PoleAtBoundary, "open_door: pole at z = +-1");
  return c * (1.0 + z) / (1.0 - z) + 2.0 * z / (1.0 - z * z);
}

inline CPoint open_door_derivative(double c, CPoint z) {
  if (z == CPoint(1.0) || z == CPoint(-1.0)) fail(ErrorKind::PoleAtBoundary, "open_door: pole at z = +-1");
  const CPoint d = 1.0 - z * z;
  return 2.0 * c / ((1.0 - z) * (1.0 - z)) + 2.0 * (1.0 + z * z) / (d * d);
}

inline constexpr double near_zero_denominator = 1e-12;

/// p(z) = (eta integral_0^1 t^{eta-8/5} exp((t-1) z eta (z(1+t)+8)/8) dt)^{-1} + 3/(5 eta),
/// solving p + zp'/(eta p - 3/5) = (1 + z/2)^2. The weight t^{eta-8/5} is
/// integrable when eta > 3/5 and is removed by substitution.
inline CPoint integral_limacon(CPoint z, double eta, const QuadratureConfig& cfg = {}) {
  if (!(eta > 0.6)) fail(ErrorKind::BadArgument, "integral_limacon: requires eta > 3/5");
  if (!(std::abs(z) < 1.0)) fail(ErrorKind::Domain, "integral_limacon: requires |z| < 1");
  const auto kernel = [&](double t) {
    return std::exp((t - 1.0) * (z * eta * (z * (1.0 + t) + 8.0)) / 8.0);
  };
  const CPoint integral = eta * quad::integrate_power_weight(kernel, eta - 0.6, cfg);
  if (std::abs(integral) < near_zero_denominator)
    fail(ErrorKind::NearZeroDenominator, "integral_limacon: integral vanishes");
  return 1.0 / integral + 3.0 / (5.0 * eta);
}

/// p(z) = ((1/2) integral_0^1 t^{gamma-1} exp(Chi(tz)-Chi(z)+Shi(tz)-Shi(z))^{1/2} dt)^{-1} - 2 gamma,
/// solving p + 2zp'/(p + 2 gamma) = e^z. The square root is taken by halving
/// the exponent; since Chi + Shi = gamma + log + Ein, the integrand is
/// t^{gamma-1/2} exp((Ein(tz) - Ein(z))/2), regular on the whole disk.
inline CPoint integral_exp(CPoint z, double gamma, const QuadratureConfig& cfg = {}) {
  if (!(gamma > -0.5)) fail(ErrorKind::BadArgument, "integral_exp: requires gamma > -1/2");
  if (!(std::abs(z) < 1.0)) fail(ErrorKind::Domain, "integral_exp: requires |z| < 1");
  const CPoint ein_z = special::ein(z);
  const auto kernel = [&](double t) { return std::exp(0.5 * (special::ein(t * z) - ein_z)); };
  const CPoint integral = 0.5 * quad::integrate_power_weight(kernel, gamma + 0.5, cfg);
  if (std::abs(integral) < near_zero_denominator)
    fail(ErrorKind::NearZeroDenominator, "integral_exp: integral vanishes");
  return 1.0 / integral - 2.0 * gamma;
}

/// log(g(w)/w) for the normalized starlike g with zg'/g = phi:
/// integral_0^1 (phi(sw) - 1)/s ds.
template <class Phi>
CPoint starlike_log_ratio(const Phi& phi, CPoint w, const QuadratureConfig& cfg = {}) {
  if (w == CPoint(0.0)) return 0.0;
  QuadratureConfig inner = cfg;
  inner.abs_tol = std::min(cfg.abs_tol, 1e-12);
  inner.rel_tol = std::min(cfg.rel_tol, 1e-12);
  return quad::integrate([&](double s) { return (phi(s * w) - 1.0) / s; }, 0.0, 1.0, inner);
}

/// Normalized g(z) = z exp(integral_0^1 (phi(sz) - 1)/s ds).
template <class Phi>
CPoint starlike_from_log_derivative(const Phi& phi, CPoint z, const QuadratureConfig& cfg = {}) {
  return z * std::exp(starlike_log_ratio(phi, z, cfg));
}

namespace detail {

inline void require_bernardi(double eta, double gamma, CPoint z) {
  require_nonzero_eta(eta, "bernardi");
  if (!(eta + gamma > 0.0)) fail(ErrorKind::BadArgument, "bernardi: requires eta + gamma > 0");
  if (!(std::abs(z) < 1.0)) fail(ErrorKind::Domain, "bernardi: requires |z| < 1");
}

// Principal (g(w)/w)^eta given log(g(w)/w).
inline CPoint ratio_power(CPoint log_ratio, double eta) {
  const CPoint ratio = std::exp(log_ratio);
  if (ratio.imag() == 0.0 && ratio.real() <= 0.0)
    fail(ErrorKind::BranchCut, "bernardi: g(uz)/(uz) on the negative real axis");
  return std::exp(eta * std::log(ratio));
}

}  // namespace detail

/// Bernardi-type operator G(z) = [((eta+gamma)/z^gamma) integral_0^z g^eta(t) t^{gamma-1} dt]^{1/eta},
/// computed radially (t = uz) as z [(eta+gamma) integral_0^1 (g(uz)/(uz))^eta u^{eta+gamma-1} du]^{1/eta}.
/// g is given through its logarithmic derivative phi = zg'/g.
template <class Phi>
CPoint bernardi(const Phi& phi, double eta, double gamma, CPoint z, const QuadratureConfig& cfg = {}) {
  detail::require_bernardi(eta, gamma, z);
  if (z == CPoint(0.0)) return 0.0;
  const CPoint integral = quad::integrate_power_weight(
      [&](double u) { return detail::ratio_power(starlike_log_ratio(phi, u * z, cfg), eta); },
      eta + gamma, cfg);
  return z * std::exp(std::log((eta + gamma) * integral) / eta);
}

/// zG'(z)/G(z) for the operator above. Differentiating under the integral
/// gives 1 + J/I with J = integral_0^1 (g(uz)/(uz))^eta (phi(uz) - 1) u^{eta+gamma-1} du.
template <class Phi>
CPoint bernardi_log_derivative(const Phi& phi, double eta, double gamma, CPoint z,
                               const QuadratureConfig& cfg = {}) {
  detail::require_bernardi(eta, gamma, z);
  if (z == CPoint(0.0)) return phi(CPoint(0.0));
  const CPoint i_part = quad::integrate_power_weight(
      [&](double u) { return detail::ratio_power(starlike_log_ratio(phi, u * z, cfg), eta); },
      eta + gamma, cfg);
  const CPoint j_part = quad::integrate_power_weight(
      [&](double u) {
        const CPoint w = u * z;
        return detail::ratio_power(starlike_log_ratio(phi, w, cfg), eta) * (phi(w) - 1.0);
      },
      eta + gamma, cfg);
  if (std::abs(i_part) < near_zero_denominator)
    fail(ErrorKind::NearZeroDenominator, "bernardi: integral vanishes");
  return 1.0 + j_part / i_part;
}

}  // namespace subord_lab::solutions
