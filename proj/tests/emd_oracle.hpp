#pragma once

// Independent EMD references for tests: the monotone (north-west corner)
// coupling, which is the optimal transport plan on the line, and direct
// midpoint quadrature of |F - G|.

#include <algorithm>
#include <cmath>
#include <vector>

#include "netemd/distribution.hpp"

namespace netemd::testing {

struct WeightedPoint {
  double x;
  double m;
};

inline std::vector<WeightedPoint> points_of(const EmpiricalDistribution& d) {
  std::vector<WeightedPoint> out;
  for (const auto& a : d.atoms()) out.push_back({a.location, a.mass});
  return out;
}

/// Cost of the monotone coupling between two sorted lists of point masses.
inline double coupling_emd(std::vector<WeightedPoint> a, std::vector<WeightedPoint> b) {
  std::sort(a.begin(), a.end(), [](auto& l, auto& r) { return l.x < r.x; });
  std::sort(b.begin(), b.end(), [](auto& l, auto& r) { return l.x < r.x; });
  double cost = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double moved = std::min(a[i].m, b[j].m);
    cost += moved * std::abs(a[i].x - b[j].x);
    a[i].m -= moved;
    b[j].m -= moved;
    if (a[i].m <= 1e-15) ++i;
    if (j < b.size() && b[j].m <= 1e-15) ++j;
  }
  return cost;
}

inline double cdf_at(const EmpiricalDistribution& d, double x) {
  double total = 0.0;
  for (const auto& a : d.atoms()) {
    if (d.kind() == AtomKind::kPoint) {
      if (a.location <= x) total += a.mass;
    } else {
      const double lo = a.location - d.width() / 2.0;
      total += a.mass * std::clamp((x - lo) / d.width(), 0.0, 1.0);
    }
  }
  return total;
}

/// Midpoint rule for the integral of |F - G| with `steps` cells.
inline double quadrature_emd(const EmpiricalDistribution& p, const EmpiricalDistribution& q,
                             std::size_t steps = 400000) {
  const double lo = std::min(p.support_min(), q.support_min());
  const double hi = std::max(p.support_max(), q.support_max());
  if (hi <= lo) return 0.0;
  const double h = (hi - lo) / static_cast<double>(steps);
  double total = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    const double x = lo + (static_cast<double>(i) + 0.5) * h;
    total += std::abs(cdf_at(p, x) - cdf_at(q, x));
  }
  return total * h;
}

}  // namespace netemd::testing
