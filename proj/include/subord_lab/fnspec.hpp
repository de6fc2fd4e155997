#pragma once

// Named analytic functions on the unit disk, with evaluation, derivative and a
// canonical text form (`phi_eta_cosh:eta=0.758753`, `janowski:A=1,B=0.5`,
// `bernardi:eta=1,gamma=0,inner=(crescent)`, `custom_series:coeffs=1;0.5`).

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "subord_lab/error.hpp"
#include "subord_lab/regions.hpp"
#include "subord_lab/solutions.hpp"
#include "subord_lab/special.hpp"
#include "subord_lab/textform.hpp"

namespace subord_lab {

enum class Family {
  CoshRoot,
  Exp,
  Crescent,
  Janowski,
  Limacon,
  SqrtShift,
  PhiEtaCosh,
  PhiEtaJanowski,
  MEta,
  IntegralLimacon,
  IntegralExp,
  Bernardi,
  OpenDoor,
  CustomSeries,
};

class FnSpec {
 public:
  static FnSpec cosh_root() { return FnSpec(Family::CoshRoot); }
  static FnSpec exp() { return FnSpec(Family::Exp); }
  static FnSpec crescent() { return FnSpec(Family::Crescent); }
  static FnSpec sqrt_shift() { return FnSpec(Family::SqrtShift); }

  static FnSpec janowski(double A, double B) {
    RegionSpec::janowski(A, B);  // same parameter domain
    FnSpec f(Family::Janowski);
    f.a_ = A;
    f.b_ = B;
    return f;
  }
  static FnSpec limacon(double s) {
    RegionSpec::limacon(s);
    FnSpec f(Family::Limacon);
    f.s_ = s;
    return f;
  }
  static FnSpec phi_eta_cosh(double eta) {
    FnSpec f(Family::PhiEtaCosh);
    f.eta_ = nonzero(eta);
    return f;
  }
  static FnSpec phi_eta_janowski(double eta, double A, double B) {
    if (!(std::abs(B) <= 1.0) || A == B) fail(ErrorKind::BadArgument, "phi_eta_janowski requires |B| <= 1, A != B");
    FnSpec f(Family::PhiEtaJanowski);
    f.eta_ = nonzero(eta);
    f.a_ = A;
    f.b_ = B;
    return f;
  }
  static FnSpec m_eta(double eta, double A) {
    FnSpec f(Family::MEta);
    f.eta_ = nonzero(eta);
    f.a_ = A;
    return f;
  }
  static FnSpec integral_limacon(double eta) {
    if (!(eta > 0.6)) fail(ErrorKind::BadArgument, "integral_limacon requires eta > 3/5");
    FnSpec f(Family::IntegralLimacon);
    f.eta_ = eta;
    return f;
  }
  static FnSpec integral_exp(double gamma) {
    if (!(gamma > -0.5)) fail(ErrorKind::BadArgument, "integral_exp requires gamma > -1/2");
    FnSpec f(Family::IntegralExp);
    f.gamma_ = gamma;
    return f;
  }
  /// `inner` is the logarithmic derivative zg'/g of the starlike g; the
  /// resulting function is zG'/G of the integral operator.
  static FnSpec bernardi(const FnSpec& inner, double eta, double gamma) {
    if (!(eta + gamma > 0.0)) fail(ErrorKind::BadArgument, "bernardi requires eta + gamma > 0");
    FnSpec f(Family::Bernardi);
    f.eta_ = nonzero(eta);
    f.gamma_ = gamma;
    f.inner_ = std::make_shared<const FnSpec>(inner);
    return f;
  }
  static FnSpec open_door(double c) {
    if (!std::isfinite(c)) fail(ErrorKind::BadArgument, "open_door requires finite c");
    FnSpec f(Family::OpenDoor);
    f.c_ = c;
    return f;
  }
  static FnSpec custom_series(std::vector<double> coeffs) {
    if (coeffs.empty()) fail(ErrorKind::BadArgument, "custom_series needs at least one coefficient");
    for (double a : coeffs)
      if (!std::isfinite(a)) fail(ErrorKind::BadArgument, "custom_series coefficients must be finite");
    FnSpec f(Family::CustomSeries);
    f.coeffs_ = std::move(coeffs);
    return f;
  }

  Family family() const { return family_; }
  double A() const { return a_; }
  double B() const { return b_; }
  double s() const { return s_; }
  double eta() const { return eta_; }
  double gamma() const { return gamma_; }
  double c() const { return c_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  const FnSpec& inner() const { return *inner_; }

  /// Value at the origin.
  CPoint center() const {
    switch (family_) {
      case Family::OpenDoor: return c_;
      case Family::CustomSeries: return coeffs_[0];
      default: return 1.0;
    }
  }

 private:
  explicit FnSpec(Family f) : family_(f) {}
  static double nonzero(double eta) {
    if (eta == 0.0 || !std::isfinite(eta)) fail(ErrorKind::BadArgument, "eta must be finite and nonzero");
    return eta;
  }

  Family family_;
  double a_ = 0.0, b_ = 0.0, s_ = 0.0, eta_ = 1.0, gamma_ = 0.0, c_ = 0.0;
  std::vector<double> coeffs_;
  std::shared_ptr<const FnSpec> inner_;
};

namespace fn {

inline constexpr double closed_disk_slack = 1e-12;
inline constexpr double stencil_radius = 1e-3;
inline constexpr int stencil_points = 8;

/// Families defined by quadrature, or with a pole on the unit circle, are
/// only evaluated on the open disk.
inline bool open_disk_only(const FnSpec& f) {
  switch (f.family()) {
    case Family::IntegralLimacon:
    case Family::IntegralExp:
    case Family::Bernardi:
    case Family::OpenDoor:
      return true;
    default:
      return false;
  }
}

inline bool has_closed_derivative(const FnSpec& f) {
  switch (f.family()) {
    case Family::IntegralLimacon:
    case Family::IntegralExp:
    case Family::Bernardi:
      return false;
    default:
      return true;
  }
}

inline CPoint evaluate(const FnSpec& f, CPoint z, const quad::QuadratureConfig& cfg = {});

namespace detail {

inline CPoint checked(CPoint w, const char* who) {
  if (!is_finite(w)) fail(ErrorKind::Domain, std::string(who) + ": non-finite value");
  return w;
}

inline CPoint series(const std::vector<double>& a, CPoint z) {
  CPoint acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline CPoint series_derivative(const std::vector<double>& a, CPoint z) {
  CPoint acc = 0.0;
  for (std::size_t n = a.size(); n-- > 1;) acc = acc * z + double(n) * a[n];
  return acc;
}

}  // namespace detail

inline CPoint evaluate(const FnSpec& f, CPoint z, const quad::QuadratureConfig& cfg) {
  if (!is_finite(z)) fail(ErrorKind::Domain, "evaluate: non-finite argument");
  const double r = std::abs(z);
  if (open_disk_only(f) ? !(r < 1.0) : r > 1.0 + closed_disk_slack)
    fail(ErrorKind::Domain, "evaluate: z outside the unit disk");
  switch (f.family()) {
    case Family::CoshRoot: return special::cosh_sqrt(z);
    case Family::Exp: return std::exp(z);
    case Family::Crescent: return z + std::sqrt(1.0 + z * z);
    case Family::Janowski:
      return detail::checked((1.0 + f.A() * z) / (1.0 + f.B() * z), "janowski");
    case Family::Limacon: return (1.0 + f.s() * z) * (1.0 + f.s() * z);
    case Family::SqrtShift: return std::sqrt(1.0 + z);
    case Family::PhiEtaCosh: return solutions::phi_eta_cosh(z, f.eta());
    case Family::PhiEtaJanowski: return solutions::phi_eta_janowski(z, f.eta(), f.A(), f.B());
    case Family::MEta: return solutions::m_eta(z, f.eta(), f.A());
    case Family::IntegralLimacon: return solutions::integral_limacon(z, f.eta(), cfg);
    case Family::IntegralExp: return solutions::integral_exp(z, f.gamma(), cfg);
    case Family::Bernardi: {
      const FnSpec& inner = f.inner();
      auto phi = [&](CPoint w) { return evaluate(inner, w, cfg); };
      return solutions::bernardi_log_derivative(phi, f.eta(), f.gamma(), z, cfg);
    }
    case Family::OpenDoor: return solutions::open_door(f.c(), z);
    case Family::CustomSeries: return detail::series(f.coeffs(), z);
  }
  fail(ErrorKind::BadArgument, "evaluate: unknown family");
}

/// f'(z). Closed forms where the family has one; otherwise an 8-point
/// Cauchy ring of radius 1e-3 (exact for polynomials of degree < 8, error
/// O(h^8) for analytic f).
inline CPoint derivative(const FnSpec& f, CPoint z, const quad::QuadratureConfig& cfg = {}) {
  if (!is_finite(z)) fail(ErrorKind::Domain, "derivative: non-finite argument");
  if (has_closed_derivative(f)) {
    if (open_disk_only(f) ? !(std::abs(z) < 1.0) : std::abs(z) > 1.0 + closed_disk_slack)
      fail(ErrorKind::Domain, "derivative: z outside the unit disk");
    switch (f.family()) {
      case Family::CoshRoot: return 0.5 * special::sinh_over_sqrt(z);
      case Family::Exp: return std::exp(z);
      case Family::Crescent: return 1.0 + z / std::sqrt(1.0 + z * z);
      case Family::Janowski: {
        const CPoint d = 1.0 + f.B() * z;
        return detail::checked((f.A() - f.B()) / (d * d), "janowski");
      }
      case Family::Limacon: return 2.0 * f.s() * (1.0 + f.s() * z);
      case Family::SqrtShift: return detail::checked(0.5 / std::sqrt(1.0 + z), "sqrt_shift");
      case Family::PhiEtaCosh: return solutions::phi_eta_cosh_derivative(z, f.eta());
      case Family::PhiEtaJanowski:
        return detail::checked(solutions::phi_eta_janowski_derivative(z, f.eta(), f.A(), f.B()),
                               "phi_eta_janowski");
      case Family::MEta: return f.A() / f.eta();
      case Family::OpenDoor: return solutions::open_door_derivative(f.c(), z);
      case Family::CustomSeries: return detail::series_derivative(f.coeffs(), z);
      default: break;
    }
  }
  if (!(std::abs(z) < 1.0 - 2.0 * stencil_radius))
    fail(ErrorKind::StencilOutOfDomain, "derivative: Cauchy stencil leaves the unit disk");
  CPoint acc = 0.0;
  for (int k = 0; k < stencil_points; ++k) {
    const CPoint w = std::polar(1.0, 2.0 * std::numbers::pi * k / stencil_points);
    acc += evaluate(f, z + stencil_radius * w, cfg) / w;
  }
  return acc / (double(stencil_points) * stencil_radius);
}

inline constexpr double residual_denominator_floor = 1e-10;

/// p(z) + zp'(z)/(eta p(z) + gamma) - h(z).
inline CPoint bb_residual(const FnSpec& p, double eta, double gamma, const FnSpec& h, CPoint z,
                          const quad::QuadratureConfig& cfg = {}) {
  const CPoint pz = evaluate(p, z, cfg);
  const CPoint den = eta * pz + gamma;
  if (std::abs(den) <= residual_denominator_floor)
    fail(ErrorKind::DenominatorVanishes, "bb_residual: eta p(z) + gamma vanishes");
  return pz + z * derivative(p, z, cfg) / den - evaluate(h, z, cfg);
}

/// The image domain of a named Ma-Minda family, when it has one.
inline std::optional<RegionSpec> region_of(const FnSpec& f) {
  switch (f.family()) {
    case Family::CoshRoot: return RegionSpec::cosh_root();
    case Family::Exp: return RegionSpec::exp();
    case Family::Crescent: return RegionSpec::crescent();
    case Family::Janowski: return RegionSpec::janowski(f.A(), f.B());
    case Family::Limacon: return RegionSpec::limacon(f.s());
    case Family::SqrtShift: return RegionSpec::sqrt_half_lens();
    default: return std::nullopt;
  }
}

inline FnSpec from_region(const RegionSpec& r) {
  switch (r.tag()) {
    case RegionTag::CoshRoot: return FnSpec::cosh_root();
    case RegionTag::Exp: return FnSpec::exp();
    case RegionTag::Crescent: return FnSpec::crescent();
    case RegionTag::Janowski: return FnSpec::janowski(r.A(), r.B());
    case RegionTag::Limacon: return FnSpec::limacon(r.s());
    case RegionTag::SqrtHalfLens: return FnSpec::sqrt_shift();
    case RegionTag::Disk: break;
  }
  fail(ErrorKind::Unsupported, "disk regions have no named generating family");
}

inline std::string to_string(const FnSpec& f) {
  using text::num;
  switch (f.family()) {
    case Family::CoshRoot: return "cosh_root";
    case Family::Exp: return "exp";
    case Family::Crescent: return "crescent";
    case Family::SqrtShift: return "sqrt_shift";
    case Family::Janowski: return "janowski:A=" + num(f.A()) + ",B=" + num(f.B());
    case Family::Limacon: return "limacon:s=" + num(f.s());
    case Family::PhiEtaCosh: return "phi_eta_cosh:eta=" + num(f.eta());
    case Family::PhiEtaJanowski:
      return "phi_eta_janowski:eta=" + num(f.eta()) + ",A=" + num(f.A()) + ",B=" + num(f.B());
    case Family::MEta: return "m_eta:eta=" + num(f.eta()) + ",A=" + num(f.A());
    case Family::IntegralLimacon: return "integral_limacon:eta=" + num(f.eta());
    case Family::IntegralExp: return "integral_exp:gamma=" + num(f.gamma());
    case Family::Bernardi:
      return "bernardi:eta=" + num(f.eta()) + ",gamma=" + num(f.gamma()) + ",inner=(" +
             to_string(f.inner()) + ")";
    case Family::OpenDoor: return "open_door:c=" + num(f.c());
    case Family::CustomSeries: {
      std::string out = "custom_series:coeffs=";
      for (std::size_t i = 0; i < f.coeffs().size(); ++i) out += (i ? ";" : "") + num(f.coeffs()[i]);
      return out;
    }
  }
  return "?";
}

inline FnSpec parse(std::string_view s) {
  const text::Form f = text::parse(s);
  auto d = [&](const char* key) { return text::to_double(f.get(key)); };
  if (f.name == "cosh_root") return f.require_only({}), FnSpec::cosh_root();
  if (f.name == "exp") return f.require_only({}), FnSpec::exp();
  if (f.name == "crescent") return f.require_only({}), FnSpec::crescent();
  if (f.name == "sqrt_shift" || f.name == "sqrt_half_lens") return f.require_only({}), FnSpec::sqrt_shift();
  if (f.name == "janowski") return f.require_only({"A", "B"}), FnSpec::janowski(d("A"), d("B"));
  if (f.name == "limacon") return f.require_only({"s"}), FnSpec::limacon(d("s"));
  if (f.name == "phi_eta_cosh") return f.require_only({"eta"}), FnSpec::phi_eta_cosh(d("eta"));
  if (f.name == "phi_eta_janowski")
    return f.require_only({"eta", "A", "B"}), FnSpec::phi_eta_janowski(d("eta"), d("A"), d("B"));
  if (f.name == "m_eta") return f.require_only({"eta", "A"}), FnSpec::m_eta(d("eta"), d("A"));
  if (f.name == "integral_limacon") return f.require_only({"eta"}), FnSpec::integral_limacon(d("eta"));
  if (f.name == "integral_exp") return f.require_only({"gamma"}), FnSpec::integral_exp(d("gamma"));
  if (f.name == "bernardi") {
    f.require_only({"eta", "gamma", "inner"});
    return FnSpec::bernardi(parse(f.get("inner")), d("eta"), d("gamma"));
  }
  if (f.name == "open_door") return f.require_only({"c"}), FnSpec::open_door(d("c"));
  if (f.name == "custom_series") {
    f.require_only({"coeffs"});
    std::vector<double> a;
    const std::string& list = f.get("coeffs");
    std::size_t i = 0;
    while (i <= list.size()) {
      const std::size_t j = std::min(list.find(';', i), list.size());
      a.push_back(text::to_double(text::trim(std::string_view(list).substr(i, j - i))));
      i = j + 1;
    }
    return FnSpec::custom_series(std::move(a));
  }
  fail(ErrorKind::Parse, "unknown function family '" + f.name + "'");
}

}  // namespace fn
}  // namespace subord_lab
