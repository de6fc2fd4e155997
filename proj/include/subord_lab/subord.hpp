#pragma once

// Sampled subordination tests f < g: membership of f(r e^{it}) in the target
// domain, either through the domain's defining predicate or through the
// winding number of g's boundary curve. Verdicts are evidence at the sampled
// (r, n), not proofs.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "subord_lab/error.hpp"
#include "subord_lab/fnspec.hpp"
#include "subord_lab/parallel.hpp"
#include "subord_lab/regions.hpp"

namespace subord_lab {

struct SubordVerdict {
  bool holds = false;
  std::optional<CPoint> witness;  // present iff !holds
  double r_used = 0.0;
  int n_used = 0;
  std::string note;
};

namespace subord {

inline constexpr double default_r = 0.999;
inline constexpr int default_n = 2048;
inline constexpr int min_samples = 256;
inline constexpr double axis_tolerance = 1e-12;

namespace detail {

inline void require_sampling(double r, int n) {
  if (!(r > 0.0 && r < 1.0)) fail(ErrorKind::BadArgument, "subordination check requires 0 < r < 1");
  if (n < min_samples) fail(ErrorKind::BadArgument, "subordination check requires n >= 256");
}

enum class Outcome : unsigned char { Inside, Outside, OnBoundary };

struct Sample {
  CPoint w;
  Outcome outcome = Outcome::Inside;
};

// First failing sample by ascending theta, independent of scheduling.
inline SubordVerdict reduce(const std::vector<Sample>& samples, double r, int n) {
  SubordVerdict v;
  v.r_used = r;
  v.n_used = n;
  for (const Sample& s : samples) {
    if (s.outcome == Outcome::Inside) continue;
    v.witness = s.w;
    if (s.outcome == Outcome::OnBoundary) v.note = "sample too close to the target boundary";
    return v;
  }
  v.holds = true;
  return v;
}

template <class Classify>
SubordVerdict sample_circle(const FnSpec& f, double r, int n, const Classify& classify) {
  const auto samples = parallel_map<Sample>(std::size_t(n), [&](std::size_t k) {
    const CPoint w = fn::evaluate(f, r * regions::unit_circle(regions::sample_angle(int(k), n)));
    return Sample{w, classify(w)};
  });
  return reduce(samples, r, n);
}

}  // namespace detail

inline SubordVerdict check_by_predicate(const FnSpec& f, const RegionSpec& region, double r = default_r,
                                        int n = default_n) {
  detail::require_sampling(r, n);
  const CPoint f0 = fn::evaluate(f, 0.0);
  if (!regions::contains(region, f0)) {
    SubordVerdict v;
    v.r_used = r;
    v.n_used = n;
    v.witness = f0;
    v.note = "f(0) lies outside the target domain";
    return v;
  }
  return detail::sample_circle(f, r, n, [&](CPoint w) {
    return regions::contains(region, w) ? detail::Outcome::Inside : detail::Outcome::Outside;
  });
}

/// Winding test against an already sampled target boundary.
inline SubordVerdict check_by_winding(const FnSpec& f, const BoundaryCurve& target, double r = default_r,
                                      int n = default_n) {
  detail::require_sampling(r, n);
  return detail::sample_circle(f, r, n, [&](CPoint w) {
    try {
      return regions::winding_number(target, w) == 1 ? detail::Outcome::Inside : detail::Outcome::Outside;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooCloseToBoundary) throw;
      return detail::Outcome::OnBoundary;
    }
  });
}

/// g must be univalent on the closed disk (the caller's responsibility) and
/// share its value at the origin with f.
inline SubordVerdict check_by_winding(const FnSpec& f, const FnSpec& g, double r = default_r,
                                      int n = default_n) {
  detail::require_sampling(r, n);
  if (std::abs(fn::evaluate(f, 0.0) - fn::evaluate(g, 0.0)) > 1e-12)
    fail(ErrorKind::BadArgument, "check_by_winding requires f(0) = g(0)");
  const RegionSpec label = fn::region_of(g).value_or(RegionSpec::disk(fn::evaluate(g, 0.0), 1.0));
  const BoundaryCurve target = regions::sample_closed_curve(
      [&](CPoint z) { return fn::evaluate(g, z); }, n, label);
  return check_by_winding(f, target, r, n);
}

namespace detail {

inline double real_on_axis(const FnSpec& f, double x) {
  const CPoint w = fn::evaluate(f, x);
  if (std::abs(w.imag()) > axis_tolerance)
    fail(ErrorKind::NotRealOnAxis, fn::to_string(f) + " is not real at z = " + text::num(x));
  return w.real();
}

}  // namespace detail

/// Relative slack on the two non-strict ends of the chain, so that a pair
/// sitting exactly on a threshold is not rejected by a rounding ulp.
inline constexpr double endpoint_slack = 1e-12;

/// outer(-1) <= inner(-1) < inner(1) <= outer(1).
inline bool endpoint_interval_check(const FnSpec& inner, const FnSpec& outer) {
  const double oa = detail::real_on_axis(outer, -1.0);
  const double ob = detail::real_on_axis(outer, 1.0);
  const double ia = detail::real_on_axis(inner, -1.0);
  const double ib = detail::real_on_axis(inner, 1.0);
  const double scale = 1.0 + std::max({std::abs(oa), std::abs(ob), std::abs(ia), std::abs(ib)});
  const double slack = endpoint_slack * scale;
  return oa <= ia + slack && ia < ib && ib <= ob + slack;
}

}  // namespace subord
}  // namespace subord_lab
