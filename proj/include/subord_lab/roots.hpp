#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "subord_lab/error.hpp"

namespace subord_lab::roots {

/// Bisection on a sign change. Terminates when the bracket is narrower than
/// xtol; returns the midpoint of the final bracket.
template <class F>
double bisect(const F& f, double lo, double hi, double xtol = 1e-12, int max_iter = 200) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    fail(ErrorKind::BadArgument, "bisect: endpoints do not bracket a root");
  for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Minimum {
  double x;
  double value;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi].
template <class F>
Minimum golden_section(const F& f, double lo, double hi, int iterations = 50) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  // Keep the bracket ends in play so a minimum sitting on an endpoint survives.
  Minimum best = f1 <= f2 ? Minimum{x1, f1} : Minimum{x2, f2};
  const double fa = f(lo), fb = f(hi);
  if (fa < best.value) best = {lo, fa};
  if (fb < best.value) best = {hi, fb};
  return best;
}

}  // namespace subord_lab::roots
