#pragma once

// Image domains of the Ma-Minda functions used throughout, as strict (open)
// membership predicates, sampled boundary curves, and superset disks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "subord_lab/error.hpp"
#include "subord_lab/special.hpp"
#include "subord_lab/textform.hpp"

namespace subord_lab {

enum class RegionTag { CoshRoot, Exp, Crescent, Janowski, Limacon, SqrtHalfLens, Disk };

class RegionSpec {
 public:
  static RegionSpec cosh_root() { return RegionSpec(RegionTag::CoshRoot); }
  static RegionSpec exp() { return RegionSpec(RegionTag::Exp); }
  static RegionSpec crescent() { return RegionSpec(RegionTag::Crescent); }
  static RegionSpec sqrt_half_lens() { return RegionSpec(RegionTag::SqrtHalfLens); }

  static RegionSpec janowski(double A, double B) {
    if (!(-1.0 <= B && B < A && A <= 1.0))
      fail(ErrorKind::BadArgument, "Janowski region requires -1 <= B < A <= 1");
    RegionSpec r(RegionTag::Janowski);
    r.a_ = A;
    r.b_ = B;
    return r;
  }

  static RegionSpec limacon(double s) {
    if (!(s != 0.0 && std::abs(s) <= 1.0 / std::numbers::sqrt2 + 1e-15))
      fail(ErrorKind::BadArgument, "limacon requires 0 < |s| <= 1/sqrt(2)");
    RegionSpec r(RegionTag::Limacon);
    r.s_ = s;
    return r;
  }

  static RegionSpec disk(CPoint center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius) || !is_finite(center))
      fail(ErrorKind::BadArgument, "disk requires a finite center and radius > 0");
    RegionSpec r(RegionTag::Disk);
    r.center_ = center;
    r.radius_ = radius;
    return r;
  }

  RegionTag tag() const { return tag_; }
  double A() const { return a_; }
  double B() const { return b_; }
  double s() const { return s_; }
  CPoint center() const { return center_; }
  double radius() const { return radius_; }

  friend bool operator==(const RegionSpec&, const RegionSpec&) = default;

 private:
  explicit RegionSpec(RegionTag t) : tag_(t) {}
  RegionTag tag_;
  double a_ = 0.0, b_ = 0.0, s_ = 0.0;
  CPoint center_{1.0, 0.0};
  double radius_ = 1.0;
};

namespace regions {

inline bool on_cut(CPoint w, double below) { return w.imag() == 0.0 && w.real() <= below; }

/// Defining inequalities are tightened by this much, so points on the
/// boundary (up to rounding) are classified outside.
inline constexpr double boundary_band = 1e-9;

/// Strict membership. Boundary and branch-cut points are outside.
inline bool contains(const RegionSpec& region, CPoint w) {
  if (!is_finite(w)) return false;
  constexpr double sqrt2 = std::numbers::sqrt2;
  constexpr double band = boundary_band;
  switch (region.tag()) {
    case RegionTag::CoshRoot: {
      if (on_cut(w, -1.0)) return false;
      const CPoint l = std::log(w + std::sqrt(w * w - 1.0));
      return std::abs(l) < 1.0 - band;
    }
    case RegionTag::Exp:
      if (on_cut(w, 0.0)) return false;
      return std::abs(std::log(w)) < 1.0 - band;
    case RegionTag::Crescent:
      return std::abs(w - 1.0) < sqrt2 - band && std::abs(w + 1.0) > sqrt2 + band;
    case RegionTag::Janowski:
      return std::abs(w - 1.0) < std::abs(region.A() - region.B() * w) - band;
    case RegionTag::Limacon: {
      const double s2 = region.s() * region.s();
      const double u = w.real(), v = w.imag();
      const double lhs = (u - 1.0) * (u - 1.0) + v * v - s2 * s2;
      return std::abs(lhs) < 2.0 * std::abs(region.s()) * std::hypot(u - 1.0 + s2, v) - band;
    }
    case RegionTag::SqrtHalfLens:
      return w.real() > band && std::abs(w * w - 1.0) < 1.0 - band;
    case RegionTag::Disk:
      return std::abs(w - region.center()) < region.radius() - band;
  }
  return false;
}

/// The univalent map of the closed unit disk whose image is the region.
inline CPoint generating_map(const RegionSpec& region, CPoint z) {
  switch (region.tag()) {
    case RegionTag::CoshRoot: return special::cosh_sqrt(z);
    case RegionTag::Exp: return std::exp(z);
    case RegionTag::Crescent: return z + std::sqrt(1.0 + z * z);
    case RegionTag::Janowski: return (1.0 + region.A() * z) / (1.0 + region.B() * z);
    case RegionTag::Limacon: return (1.0 + region.s() * z) * (1.0 + region.s() * z);
    case RegionTag::SqrtHalfLens: return std::sqrt(1.0 + z);
    case RegionTag::Disk: return region.center() + region.radius() * z;
  }
  fail(ErrorKind::BadArgument, "unknown region");
}

}  // namespace regions

struct BoundaryCurve {
  std::vector<double> theta;
  std::vector<CPoint> points;  // closed: the last point connects to the first
  RegionSpec source = RegionSpec::cosh_root();
  int n_samples = 0;
};

namespace regions {

inline constexpr int min_boundary_samples = 64;
inline constexpr int verification_samples = 2048;
inline constexpr int figure_samples = 512;

/// Point on the unit circle with exact values at theta = 0 and theta = +-pi.
inline CPoint unit_circle(double theta) {
  if (theta == 0.0) return {1.0, 0.0};
  if (std::abs(theta) == std::numbers::pi) return {-1.0, 0.0};
  return {std::cos(theta), std::sin(theta)};
}

inline double sample_angle(int k, int n) {
  return -std::numbers::pi + 2.0 * std::numbers::pi * double(k) / double(n);
}

template <class Map>
BoundaryCurve sample_closed_curve(const Map& map, int n, const RegionSpec& source) {
  if (n < min_boundary_samples)
    fail(ErrorKind::BadArgument, "boundary needs at least 64 samples");
  BoundaryCurve c;
  c.source = source;
  c.n_samples = n;
  c.theta.reserve(n);
  c.points.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double th = sample_angle(k, n);
    c.theta.push_back(th);
    c.points.push_back(map(unit_circle(th)));
  }
  for (int k = 0; k < n; ++k)
    if (c.points[k] == c.points[(k + 1) % n])
      fail(ErrorKind::BadArgument, "degenerate boundary: repeated consecutive samples");
  return c;
}

inline BoundaryCurve boundary(const RegionSpec& region, int n) {
  return sample_closed_curve([&](CPoint z) { return generating_map(region, z); }, n, region);
}

inline double segment_distance(CPoint p, CPoint a, CPoint b) {
  const CPoint ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a) * std::conj(ab)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

inline double distance_to_curve(const std::vector<CPoint>& pts, CPoint w) {
  double best = INFINITY;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    best = std::min(best, segment_distance(w, pts[i], pts[(i + 1) % n]));
  return best;
}

inline constexpr double boundary_clearance = 1e-9;

/// Signed winding number of the closed polyline about w.
inline int winding_number(const std::vector<CPoint>& pts, CPoint w) {
  const std::size_t n = pts.size();
  if (n < 3) fail(ErrorKind::NonIntegerWinding, "curve has fewer than 3 points");
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const CPoint a = pts[i], b = pts[(i + 1) % n];
    if (segment_distance(w, a, b) <= boundary_clearance)
      fail(ErrorKind::TooCloseToBoundary,
           "point (" + text::num(w.real()) + ", " + text::num(w.imag()) + ") lies on the curve");
    total += std::arg((b - w) / (a - w));
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= 0.25)
    fail(ErrorKind::NonIntegerWinding, "fractional winding residue " + text::num(turns - rounded));
  return static_cast<int>(rounded);
}

inline int winding_number(const BoundaryCurve& curve, CPoint w) {
  return winding_number(curve.points, w);
}

inline RegionSpec superset_disk(const RegionSpec& region) {
  switch (region.tag()) {
    case RegionTag::Crescent: return RegionSpec::disk(1.0, std::numbers::sqrt2);
    case RegionTag::Limacon: {
      const double s = std::abs(region.s());
      return RegionSpec::disk(1.0, s * (s + 2.0));
    }
    default:
      fail(ErrorKind::Unsupported, "superset_disk is defined for crescent and limacon only");
  }
}

/// `theta,re,im` rows with 17 significant digits, preceded by a header row.
inline std::string to_csv(const BoundaryCurve& curve) {
  std::ostringstream os;
  os << "theta,re,im\n";
  for (std::size_t i = 0; i < curve.points.size(); ++i)
    os << text::num17(curve.theta[i]) << ',' << text::num17(curve.points[i].real()) << ','
       << text::num17(curve.points[i].imag()) << '\n';
  return os.str();
}

inline std::string to_string(const RegionSpec& r) {
  switch (r.tag()) {
    case RegionTag::CoshRoot: return "cosh_root";
    case RegionTag::Exp: return "exp";
    case RegionTag::Crescent: return "crescent";
    case RegionTag::SqrtHalfLens: return "sqrt_half_lens";
    case RegionTag::Janowski: return "janowski:A=" + text::num(r.A()) + ",B=" + text::num(r.B());
    case RegionTag::Limacon: return "limacon:s=" + text::num(r.s());
    case RegionTag::Disk:
      return "disk:re=" + text::num(r.center().real()) + ",im=" + text::num(r.center().imag()) +
             ",r=" + text::num(r.radius());
  }
  return "?";
}

inline RegionSpec parse_region(std::string_view s) {
  const text::Form f = text::parse(s);
  auto plain = [&](RegionSpec r) {
    f.require_only({});
    return r;
  };
  if (f.name == "cosh_root") return plain(RegionSpec::cosh_root());
  if (f.name == "exp") return plain(RegionSpec::exp());
  if (f.name == "crescent") return plain(RegionSpec::crescent());
  if (f.name == "sqrt_half_lens" || f.name == "sqrt_shift") return plain(RegionSpec::sqrt_half_lens());
  if (f.name == "janowski") {
    f.require_only({"A", "B"});
    return RegionSpec::janowski(text::to_double(f.get("A")), text::to_double(f.get("B")));
  }
  if (f.name == "limacon") {
    f.require_only({"s"});
    return RegionSpec::limacon(text::to_double(f.get("s")));
  }
  if (f.name == "disk") {
    f.require_only({"re", "im", "r"});
    const double im = f.has("im") ? text::to_double(f.get("im")) : 0.0;
    return RegionSpec::disk({text::to_double(f.get("re")), im}, text::to_double(f.get("r")));
  }
  fail(ErrorKind::Parse, "unknown region '" + f.name + "'");
}

}  // namespace regions
}  // namespace subord_lab
