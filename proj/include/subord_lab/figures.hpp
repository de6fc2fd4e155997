#pragma once

// Boundary-curve figures as deterministic SVG. Each figure depicts one
// subordination (inner image inside outer domain) and is refused unless the
// winding check confirms it.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "subord_lab/bounds.hpp"
#include "subord_lab/error.hpp"
#include "subord_lab/fnspec.hpp"
#include "subord_lab/regions.hpp"
#include "subord_lab/subord.hpp"

namespace subord_lab::figures {

struct Curve {
  std::string label;
  std::vector<CPoint> points;
  std::string stroke;
  std::string fill = "none";
};

struct Figure {
  std::string name;
  std::string title;
  std::vector<Curve> curves;
  SubordVerdict gate;
};

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {"crescent-lens", "sharp-exp",      "sharp-crescent", "sharp-sqrt",
                                               "sharp-janowski", "sharp-limacon", "cosh-janowski"};
  return all;
}

namespace detail {

inline std::vector<CPoint> image_of_circle(const FnSpec& f, int n = regions::figure_samples) {
  return regions::sample_closed_curve([&](CPoint z) { return fn::evaluate(f, z); }, n,
                                      fn::region_of(f).value_or(RegionSpec::cosh_root()))
      .points;
}

inline Figure gated(std::string name, std::string title, std::vector<Curve> curves, SubordVerdict gate) {
  if (!gate.holds)
    fail(ErrorKind::GateFailed, "figure " + name + " refused: depicted subordination fails the winding check");
  return {std::move(name), std::move(title), std::move(curves), gate};
}

inline Figure sharp(const std::string& name, const RegionSpec& target, const std::string& label) {
  const double eta = bounds::eta_star(target).value;
  const FnSpec outer = fn::from_region(target);
  const FnSpec inner = FnSpec::phi_eta_cosh(eta);
  auto gate = subord::check_by_winding(inner, outer, subord::default_r, regions::verification_samples);
  return gated(name, label + " with the extremal solution at eta = " + text::num(eta),
               {{label, image_of_circle(outer), "#1f4e9c"},
                {"phi_eta, eta = " + text::num(eta), image_of_circle(inner), "#c0392b"}},
               gate);
}

}  // namespace detail

inline Figure build(const std::string& name) {
  if (name == "crescent-lens") {
    const double r = std::numbers::sqrt2;
    const RegionSpec d1 = RegionSpec::disk(1.0, r), d2 = RegionSpec::disk(-1.0, r);
    const BoundaryCurve c1 = regions::boundary(d1, regions::figure_samples);
    const BoundaryCurve c2 = regions::boundary(d2, regions::figure_samples);
    const FnSpec lens = FnSpec::crescent();
    auto gate = subord::check_by_winding(lens, regions::boundary(d1, regions::verification_samples),
                                         subord::default_r, regions::verification_samples);
    return detail::gated(name, "crescent as the part of |w-1| < sqrt 2 outside |w+1| <= sqrt 2",
                         {{"|w-1| = sqrt 2", c1.points, "#1f4e9c"},
                          {"|w+1| = sqrt 2", c2.points, "#7f8c8d"},
                          {"crescent", detail::image_of_circle(lens), "#c0392b", "#f5b7b1"}},
                         gate);
  }
  if (name == "sharp-exp") return detail::sharp(name, RegionSpec::exp(), "exp z");
  if (name == "sharp-crescent") return detail::sharp(name, RegionSpec::crescent(), "z + sqrt(1+z^2)");
  if (name == "sharp-sqrt") return detail::sharp(name, RegionSpec::sqrt_half_lens(), "sqrt(1+z)");
  if (name == "sharp-janowski") return detail::sharp(name, RegionSpec::janowski(1.0, 0.5), "(1+z)/(1+z/2)");
  if (name == "sharp-limacon")
    return detail::sharp(name, RegionSpec::limacon(1.0 / std::numbers::sqrt2), "(1+z/sqrt 2)^2");
  if (name == "cosh-janowski") {
    const double eta = bounds::cosh_dominant_eta_min(0.5, -0.5);
    const FnSpec outer = FnSpec::cosh_root();
    const FnSpec inner = FnSpec::phi_eta_janowski(eta, 0.5, -0.5);
    auto gate = subord::check_by_winding(inner, outer, subord::default_r, regions::verification_samples);
    return detail::gated(name, "cosh sqrt z with the extremal Janowski solution at eta = " + text::num(eta),
                         {{"cosh sqrt z", detail::image_of_circle(outer), "#1f4e9c"},
                          {"phi_eta, eta = " + text::num(eta), detail::image_of_circle(inner), "#c0392b"}},
                         gate);
  }
  fail(ErrorKind::BadArgument, "unknown figure '" + name + "'");
}

namespace detail {

inline std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x == 0.0 ? 0.0 : x);  // no "-0.00"
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

// 1, 2 or 5 times a power of ten, giving about six ticks over span.
inline double tick_step(double span) {
  const double raw = span / 6.0;
  const double p = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0})
    if (m * p >= raw) return m * p;
  return 10.0 * p;
}

}  // namespace detail

inline std::string render_svg(const Figure& fig) {
  using detail::fmt;
  constexpr double width = 640, height = 560, margin = 48, legend_h = 24;
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& c : fig.curves)
    for (CPoint p : c.points) {
      x0 = std::min(x0, p.real());
      x1 = std::max(x1, p.real());
      y0 = std::min(y0, p.imag());
      y1 = std::max(y1, p.imag());
    }
  const double pad = 0.08 * std::max(x1 - x0, y1 - y0);
  x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
  const double plot_w = width - 2 * margin;
  const double plot_h = height - 2 * margin - legend_h * fig.curves.size();
  const double scale = std::min(plot_w / (x1 - x0), plot_h / (y1 - y0));
  const double ox = margin + 0.5 * (plot_w - scale * (x1 - x0));
  const double oy = margin + 0.5 * (plot_h - scale * (y1 - y0));
  auto sx = [&](double x) { return ox + scale * (x - x0); };
  auto sy = [&](double y) { return oy + scale * (y1 - y); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt("%.0f", width) + "\" height=\"" +
       fmt("%.0f", height) + "\" viewBox=\"0 0 " + fmt("%.0f", width) + " " + fmt("%.0f", height) + "\">\n";
  s += "<title>" + detail::escape(fig.title) + "</title>\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes through the origin when visible, otherwise along the frame
  const double ax_y = (y0 <= 0 && 0 <= y1) ? 0.0 : y0;
  const double ax_x = (x0 <= 0 && 0 <= x1) ? 0.0 : x0;
  s += "<g stroke=\"#444\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + fmt("%.2f", sx(x0)) + "\" y1=\"" + fmt("%.2f", sy(ax_y)) + "\" x2=\"" + fmt("%.2f", sx(x1)) +
       "\" y2=\"" + fmt("%.2f", sy(ax_y)) + "\"/>\n";
  s += "<line x1=\"" + fmt("%.2f", sx(ax_x)) + "\" y1=\"" + fmt("%.2f", sy(y0)) + "\" x2=\"" + fmt("%.2f", sx(ax_x)) +
       "\" y2=\"" + fmt("%.2f", sy(y1)) + "\"/>\n";
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#444\">\n";
  const double step = detail::tick_step(std::max(x1 - x0, y1 - y0));
  for (double v = std::ceil(x0 / step) * step; v <= x1; v += step) {
    s += "<line x1=\"" + fmt("%.2f", sx(v)) + "\" y1=\"" + fmt("%.2f", sy(ax_y) - 3) + "\" x2=\"" +
         fmt("%.2f", sx(v)) + "\" y2=\"" + fmt("%.2f", sy(ax_y) + 3) + "\" stroke=\"#444\"/>";
    s += "<text x=\"" + fmt("%.2f", sx(v)) + "\" y=\"" + fmt("%.2f", sy(ax_y) + 14) +
         "\" text-anchor=\"middle\">" + fmt("%g", std::round(v / step) * step) + "</text>\n";
  }
  for (double v = std::ceil(y0 / step) * step; v <= y1; v += step) {
    s += "<line x1=\"" + fmt("%.2f", sx(ax_x) - 3) + "\" y1=\"" + fmt("%.2f", sy(v)) + "\" x2=\"" +
         fmt("%.2f", sx(ax_x) + 3) + "\" y2=\"" + fmt("%.2f", sy(v)) + "\" stroke=\"#444\"/>";
    s += "<text x=\"" + fmt("%.2f", sx(ax_x) - 5) + "\" y=\"" + fmt("%.2f", sy(v) + 3) +
         "\" text-anchor=\"end\">" + fmt("%g", std::round(v / step) * step) + "</text>\n";
  }
  s += "</g>\n";

  for (const auto& c : fig.curves) {
    s += "<path fill=\"" + c.fill + "\" stroke=\"" + c.stroke + "\" stroke-width=\"1.5\" d=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i)
      s += (i ? " L" : "M") + fmt("%.3f", sx(c.points[i].real())) + "," + fmt("%.3f", sy(c.points[i].imag()));
    s += " Z\"/>\n";
  }

  s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  double ly = height - margin / 2 - legend_h * (fig.curves.size() - 1);
  for (const auto& c : fig.curves) {
    s += "<line x1=\"" + fmt("%.0f", margin) + "\" y1=\"" + fmt("%.2f", ly - 4) + "\" x2=\"" +
         fmt("%.0f", margin + 24) + "\" y2=\"" + fmt("%.2f", ly - 4) + "\" stroke=\"" + c.stroke +
         "\" stroke-width=\"2\"/>";
    s += "<text x=\"" + fmt("%.0f", margin + 32) + "\" y=\"" + fmt("%.2f", ly) + "\">" + detail::escape(c.label) +
         "</text>\n";
    ly += legend_h;
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace subord_lab::figures
