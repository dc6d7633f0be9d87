#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace netemd {

struct BrentResult {
  double x;        // best point found
  double fx;       // f(x), the smallest value evaluated
  double lower;    // final bracket
  double upper;
  int iterations;
};

/// Brent's minimizer (parabolic interpolation with golden-section fallback)
/// on [lower, upper], started from `start`. Stops when the bracket around the
/// best point is within `tol` (absolute) or after `max_iter` iterations.
/// For a unimodal f the final bracket contains a minimizer.
template <class F>
BrentResult brent_minimize(F&& f, double lower, double upper, double start, double tol, int max_iter) {
  constexpr double kGolden = 0.3819660112501051;  // (3 - sqrt(5)) / 2
  const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());

  double a = std::min(lower, upper);
  double b = std::max(lower, upper);
  double x = std::clamp(start, a, b);
  double w = x, v = x;
  double fx = f(x);
  double fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  int iter = 0;
  for (; iter < max_iter; ++iter) {
    const double xm = 0.5 * (a + b);
    const double tol1 = sqrt_eps * std::abs(x) + tol / 3.0;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - xm) <= tol2 - 0.5 * (b - a)) break;

    bool golden = true;
    if (std::abs(e) > tol1) {
      // Trial parabola through x, w, v.
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double etemp = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * etemp) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = xm >= x ? tol1 : -tol1;
        golden = false;
      }
    }
    if (golden) {
      e = (x >= xm ? a : b) - x;
      d = kGolden * e;
    }

    const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {x, fx, a, b, iter};
}

}  // namespace netemd
