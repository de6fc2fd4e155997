#pragma once

// Closed-form sharp constants and admissible parameter ranges for the
// Briot-Bouquet and first-order subordinations with a cosh(sqrt z) dominant.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "subord_lab/error.hpp"
#include "subord_lab/regions.hpp"
#include "subord_lab/roots.hpp"
#include "subord_lab/special.hpp"

namespace subord_lab {

struct ParamInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_strict = false;
  bool hi_strict = false;
  std::string theorem_id;
  std::optional<double> excluded;

  bool empty() const {
    if (std::isnan(lo) || std::isnan(hi)) return true;
    if (lo > hi) return true;
    return lo == hi && (lo_strict || hi_strict || excluded == lo);
  }

  bool contains(double x) const {
    if (excluded && x == *excluded) return false;
    const bool above = lo_strict ? x > lo : x >= lo;
    const bool below = hi_strict ? x < hi : x <= hi;
    return above && below;
  }

  /// The tighter end wins; at equal ends a strict bound wins.
  ParamInterval intersect(const ParamInterval& o) const {
    ParamInterval r = *this;
    if (o.lo > lo) {
      r.lo = o.lo;
      r.lo_strict = o.lo_strict;
    } else if (o.lo == lo) {
      r.lo_strict = lo_strict || o.lo_strict;
    }
    if (o.hi < hi) {
      r.hi = o.hi;
      r.hi_strict = o.hi_strict;
    } else if (o.hi == hi) {
      r.hi_strict = hi_strict || o.hi_strict;
    }
    if (!r.excluded) r.excluded = o.excluded;
    return r;
  }

  static ParamInterval closed(double lo, double hi) { return {lo, hi, false, false, {}, {}}; }
};

namespace bounds {

namespace detail {

inline const double ch = std::cosh(1.0);
inline const double sh = std::sinh(1.0);
inline const double c1 = std::cos(1.0);
inline const double s1 = std::sin(1.0);

inline ParamInterval tag(ParamInterval p, std::string id, double gamma) {
  p.theorem_id = std::move(id);
  p.excluded = -gamma;
  return p;
}

}  // namespace detail

/// Admissible eta for p + zp'/(eta p + gamma) < target  =>  p < cosh(sqrt z),
/// for target in {crescent, limacon(s), exp}. The four auxiliary numbers
///   eta0..eta3
/// are the boundary-value constraints at the two real boundary points of the
/// cosh(sqrt z) domain; the interval is the intersection of the two pairs.
inline ParamInterval bb_eta_range(const RegionSpec& target, double gamma) {
  using namespace detail;
  constexpr double sqrt2 = std::numbers::sqrt2;
  if (!std::isfinite(gamma)) fail(ErrorKind::BadArgument, "gamma must be finite");
  switch (target.tag()) {
    case RegionTag::Crescent: {
      const double eta0 = -gamma / ch + sh / (2.0 * ch * (1.0 + sqrt2 - ch));
      const double eta1 = -gamma / ch;
      const double eta2 = -gamma / c1 - s1 / (2.0 * c1 * (1.0 + sqrt2 - c1));
      const double eta3 = -gamma / c1;
      const auto r = ParamInterval::closed(eta1, eta0).intersect(ParamInterval::closed(eta2, eta3));
      return tag(r, "bb-crescent", gamma);
    }
    case RegionTag::Limacon: {
      const double s = target.s();
      if (!(s > 0.0)) fail(ErrorKind::BadArgument, "limacon range requires 0 < s <= 1/sqrt(2)");
      const double q = (1.0 + s) * (1.0 + s);
      const double eta0 = -gamma / ch;
      const double eta1 = sh / (2.0 * ch * (q - ch));
      const double eta2 = -gamma / c1;
      const double eta3 = -s1 / (2.0 * c1 * (q - c1));
      const ParamInterval left = ParamInterval::closed(eta3 + eta2, eta2);
      const ParamInterval right = s <= std::sqrt(ch) - 1.0
                                      ? ParamInterval::closed(eta0, std::numeric_limits<double>::infinity())
                                      : ParamInterval::closed(eta0, eta0 + eta1);
      return tag(left.intersect(right), "bb-limacon", gamma);
    }
    case RegionTag::Exp: {
      const double e = std::numbers::e;
      const double eta0 = -gamma / ch + sh / (2.0 * ch * (e - ch));
      const double eta1 = -gamma / ch;
      const double eta2 = -gamma / c1 - s1 / (2.0 * c1 * (e - c1));
      const double eta3 = -gamma / c1;
      ParamInterval a{eta1, eta0, true, false, {}, {}};
      ParamInterval b{eta2, eta3, false, true, {}, {}};
      return tag(a.intersect(b), "bb-exp", gamma);
    }
    default:
      fail(ErrorKind::Unsupported, "bb_eta_range supports crescent, limacon and exp targets");
  }
}

/// The four Janowski-target conditions, with d1 = gamma + eta cosh 1 and
/// d2 = gamma + eta cos 1. The first two come from the boundary point z = 1,
/// the last two from z = -1.
inline bool bb_janowski_feasible(double eta, double gamma, double A, double B) {
  using namespace detail;
  if (!(-1.0 <= B && B < A && A <= 1.0))
    fail(ErrorKind::BadArgument, "Janowski conditions require -1 <= B < A <= 1");
  if (gamma == -eta) return false;
  const double d1 = gamma + eta * ch;
  const double d2 = gamma + eta * c1;
  const bool i = (1.0 - B * B) * sh + 2.0 * d1 * (ch - 1.0 + B * (A - B * ch)) >= 0.0;
  const double ii_l = sh + 2.0 * (ch - 1.0) * d1;
  const double ii_r = B * sh - 2.0 * (A - B * ch) * d1;
  const bool ii = ii_l * ii_l >= ii_r * ii_r;
  const bool iii = (1.0 - B * B) * s1 + 2.0 * d2 * (1.0 - c1 - B * (A - B * c1)) >= 0.0;
  const double iv_l = s1 + 2.0 * (1.0 - c1) * d2;
  const double iv_r = B * s1 + 2.0 * (A - B * c1) * d2;
  const bool iv = iv_l * iv_l >= iv_r * iv_r;
  return i && ii && iii && iv;
}

/// Sharp lower bound on |eta| for 1 + eta zp'/p < (1+Az)/(1+Bz)  =>  p < cosh(sqrt z).
inline double eta_min_ratio_janowski(CPoint A, CPoint B) {
  if (!(std::abs(B) < 1.0)) fail(ErrorKind::BadArgument, "eta_min_ratio_janowski requires |B| < 1");
  if (A == B) fail(ErrorKind::BadArgument, "eta_min_ratio_janowski requires A != B");
  return 2.0 * std::abs(A - B) / ((1.0 - std::abs(B)) * std::tanh(1.0));
}

/// Targets for the first-order problem 1 + eta zp' < cosh(sqrt z)  =>  p < target.
struct EtaStar {
  double value = 0.0;        // from the endpoint chain
  double closed_form = 0.0;  // the closed-form expression for the same target
  bool mismatch = false;     // |value - closed_form| > 1e-6
  int binding_end = 0;       // -1 or +1: which end of the chain is tight
  double lower_end = 0.0;    // eta solving the z = -1 constraint with equality
  double upper_end = 0.0;    // eta solving the z = +1 constraint with equality
};

inline constexpr double eta_star_mismatch_tolerance = 1e-6;

/// Real boundary values target(-1), target(+1) for the targets eta_star supports.
inline std::pair<double, double> target_axis_values(const RegionSpec& target) {
  constexpr double sqrt2 = std::numbers::sqrt2;
  switch (target.tag()) {
    case RegionTag::Exp: return {1.0 / std::numbers::e, std::numbers::e};
    case RegionTag::SqrtHalfLens: return {0.0, sqrt2};
    case RegionTag::Crescent: return {sqrt2 - 1.0, sqrt2 + 1.0};
    case RegionTag::Janowski: {
      const double A = target.A(), B = target.B();
      if (!(B > -1.0)) fail(ErrorKind::BadArgument, "eta_star janowski requires -1 < B < A <= 1");
      return {(1.0 - A) / (1.0 - B), (1.0 + A) / (1.0 + B)};
    }
    case RegionTag::Limacon: {
      const double s = target.s();
      if (!(s > 0.0)) fail(ErrorKind::BadArgument, "eta_star limacon requires 0 < s <= 1/sqrt(2)");
      return {(1.0 - s) * (1.0 - s), (1.0 + s) * (1.0 + s)};
    }
    default:
      fail(ErrorKind::Unsupported, "eta_star supports exp, sqrt, crescent, janowski and limacon");
  }
}

/// Minimal eta with target(-1) <= phi_eta(-1) < phi_eta(1) <= target(1),
/// where phi_eta(+-1) = 1 + 2(Chi(1) - gamma)/eta and 1 + 2(Ci(1) - gamma)/eta.
inline EtaStar eta_star(const RegionSpec& target) {
  const auto& k = special::constants();
  const double xi = k.euler_gamma;
  const auto [lo, hi] = target_axis_values(target);
  EtaStar r;
  r.lower_end = 2.0 * (xi - k.ci1) / (1.0 - lo);
  r.upper_end = 2.0 * (k.chi1 - xi) / (hi - 1.0);
  r.value = std::max(r.lower_end, r.upper_end);
  r.binding_end = r.lower_end >= r.upper_end ? -1 : 1;

  constexpr double sqrt2 = std::numbers::sqrt2;
  const double e = std::numbers::e;
  switch (target.tag()) {
    case RegionTag::Exp: r.closed_form = 2.0 * e * (xi - k.ci1) / (e - 1.0); break;
    case RegionTag::SqrtHalfLens:
    case RegionTag::Crescent: r.closed_form = sqrt2 * (xi - k.ci1) / (sqrt2 - 1.0); break;
    case RegionTag::Janowski: {
      const double A = target.A(), B = target.B();
      r.closed_form = B <= -k.kappa ? 2.0 * (1.0 - B) * (xi - k.ci1) / (A - B)
                                    : 2.0 * (1.0 + B) * (k.chi1 - xi) / (A - B);
      break;
    }
    case RegionTag::Limacon: {
      const double s = target.s();
      r.closed_form = s <= 2.0 * k.kappa ? 2.0 * (k.chi1 - xi) / (s * (s + 2.0))
                                         : 2.0 * (k.ci1 - xi) / (s * (s - 2.0));
      break;
    }
    default: break;
  }
  r.mismatch = std::abs(r.value - r.closed_form) > eta_star_mismatch_tolerance;
  return r;
}

/// Root of (1 + B)(1 - B)^mu = 1 on (-1, 0), mu = (cosh 1 - 1)/(1 - cos 1).
inline double b0_root() {
  const double mu = special::constants().mu;
  return roots::bisect([&](double B) { return std::log1p(B) + mu * std::log1p(-B); }, -0.9, -0.01, 1e-12);
}

namespace detail {

// log(1 + x)/x, continuous at 0.
inline double log_ratio(double x) { return x == 0.0 ? 1.0 : std::log1p(x) / x; }

inline void require_janowski_order(double A, double B) {
  if (!(-1.0 < B && B < A && A <= 1.0)) fail(ErrorKind::BadArgument, "requires -1 < B < A <= 1");
}

}  // namespace detail

/// Smallest eta with 1 + eta zp' < (1+Az)/(1+Bz)  =>  p < cosh(sqrt z).
/// Below the root B0 the constraint at z = 1 binds, above it the one at z = -1;
/// B = 0 gives 2 eta >= A csc^2(1/2).
inline double cosh_dominant_eta_min(double A, double B) {
  using namespace detail;
  require_janowski_order(A, B);
  if (B == 0.0) {
    const double csc = 1.0 / std::sin(0.5);
    return 0.5 * A * csc * csc;
  }
  if (B <= b0_root()) return (A - B) * log_ratio(B) / (ch - 1.0);
  return (A - B) * log_ratio(-B) / (1.0 - c1);
}

inline bool cosh_dominant_eta_condition(double eta, double A, double B) {
  return eta >= cosh_dominant_eta_min(A, B);
}

/// eta0 = -(1/2 + csch 2) sech 1, the least eta for which
/// Re(eta cosh sqrt z + sqrt z csch 2 sqrt z) > -1/2 on the disk.
inline double cosh_ratio_eta0() { return -(0.5 + 1.0 / std::sinh(2.0)) / std::cosh(1.0); }

enum class Admissibility { zp_minus_1, zp_over_p, zp_over_p2 };

inline double admissibility_threshold(Admissibility which) {
  switch (which) {
    case Admissibility::zp_minus_1: return std::sin(1.0) / 2.0;
    case Admissibility::zp_over_p: return std::tanh(1.0) / 2.0;
    case Admissibility::zp_over_p2: return std::tanh(1.0) / (2.0 * std::cosh(1.0));
  }
  fail(ErrorKind::BadArgument, "unknown admissibility selector");
}

enum class ExampleRange { integral_limacon_eta, integral_exp_gamma };

inline ParamInterval example_param_ranges(ExampleRange which) {
  using namespace detail;
  const double e = std::numbers::e;
  switch (which) {
    case ExampleRange::integral_limacon_eta: {
      // limacon(1/2) with gamma = -3/5, restricted to eta > 3/5 for integrability.
      ParamInterval r = ParamInterval::closed(3.0 / (5.0 * c1) - 2.0 * s1 / (c1 * (9.0 - 4.0 * c1)),
                                              3.0 / (5.0 * ch) + 2.0 * sh / (ch * (9.0 - 4.0 * ch)));
      r = r.intersect({0.6, std::numeric_limits<double>::infinity(), true, false, {}, {}});
      r.theorem_id = "integral-limacon-eta";
      return r;
    }
    case ExampleRange::integral_exp_gamma: {
      ParamInterval r = ParamInterval::closed(-0.5 * (c1 + s1 / (e - c1)), -0.5 * (ch - sh / (e - ch)));
      r.theorem_id = "integral-exp-gamma";
      return r;
    }
  }
  fail(ErrorKind::BadArgument, "unknown example range");
}

}  // namespace bounds
}  // namespace subord_lab
