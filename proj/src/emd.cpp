#include "netemd/emd.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "netemd/brent.hpp"
#include "netemd/simd/kernels.hpp"

namespace netemd {

namespace {

constexpr double kZeroCutoff = 1e-12;

// CDF of a distribution as a list of breakpoints. Between breakpoint i and
// i+1 the CDF equals value[i] + slope[i] * (x - pos[i]).
struct PreparedCdf {
  std::vector<double> pos;
  std::vector<double> value;
  std::vector<double> slope;

  explicit PreparedCdf(const EmpiricalDistribution& d) {
    const auto atoms = d.atoms();
    if (d.kind() == AtomKind::kPoint) {
      double cum = 0.0;
      for (const Atom& a : atoms) {
        cum += a.mass;
        pos.push_back(a.location);
        value.push_back(cum);
        slope.push_back(0.0);
      }
    } else {
      const double w = d.width();
      const double half = 0.5 * w;
      double cum = 0.0;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        const double left = atoms[i].location - half;
        const double right = atoms[i].location + half;
        if (pos.empty() || pos.back() < left) {
          pos.push_back(left);
          value.push_back(cum);
          slope.push_back(atoms[i].mass / w);
        } else {
          // Touching the previous bin: replace its right edge.
          pos.back() = std::min(pos.back(), left);
          value.back() = cum;
          slope.back() = atoms[i].mass / w;
        }
        cum += atoms[i].mass;
        pos.push_back(right);
        value.push_back(cum);
        slope.push_back(0.0);
      }
    }
    value.back() = 1.0;
  }

  // CDF on [pos[i], pos[i+1]) evaluated at x; i = -1 means left of support.
  double at(std::ptrdiff_t i, double x, double shift = 0.0) const {
    if (i < 0) return 0.0;
    const auto k = static_cast<std::size_t>(i);
    return value[k] + slope[k] * (x - (pos[k] + shift));
  }
};

struct Workspace {
  std::vector<double> h0, h1, width;
};

// Integral of |F(x - shift) - G(x)|.
double integrate(const PreparedCdf& f, const PreparedCdf& g, double shift, Workspace& ws) {
  ws.h0.clear();
  ws.h1.clear();
  ws.width.clear();
  const std::size_t nf = f.pos.size();
  const std::size_t ng = g.pos.size();
  std::size_t i = 0, j = 0;
  std::ptrdiff_t fi = -1, gj = -1;  // active segment of each CDF
  double x = std::min(f.pos[0] + shift, g.pos[0]);
  while (i < nf || j < ng) {
    while (i < nf && f.pos[i] + shift <= x) fi = static_cast<std::ptrdiff_t>(i++);
    while (j < ng && g.pos[j] <= x) gj = static_cast<std::ptrdiff_t>(j++);
    const double next_f = i < nf ? f.pos[i] + shift : INFINITY;
    const double next_g = j < ng ? g.pos[j] : INFINITY;
    const double next = std::min(next_f, next_g);
    if (!std::isfinite(next)) break;
    const double w = next - x;
    if (w > 0.0) {
      ws.h0.push_back(f.at(fi, x, shift) - g.at(gj, x));
      ws.h1.push_back(f.at(fi, next, shift) - g.at(gj, next));
      ws.width.push_back(w);
    }
    x = next;
  }
  return simd::abs_linear_integral(ws.h0, ws.h1, ws.width);
}


// Total order on distributions, used to put arguments in a fixed order.
bool canonical_less(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.width() != b.width()) return a.width() < b.width();
  if (a.size() != b.size()) return a.size() < b.size();
  const auto aa = a.atoms();
  const auto ba = b.atoms();
  for (std::size_t i = 0; i < aa.size(); ++i) {
    if (aa[i].location != ba[i].location) return aa[i].location < ba[i].location;
    if (aa[i].mass != ba[i].mass) return aa[i].mass < ba[i].mass;
  }
  return false;
}

// Shifts c at which an atom of p lands on an atom of q, limited to [lo, hi].
// For point masses the objective is piecewise linear in c with kinks only at
// these shifts, so its minimum over [lo, hi] is attained at one of them or at
// an end.
std::vector<double> point_kinks(const EmpiricalDistribution& p, const EmpiricalDistribution& q, double lo, double hi,
                                std::size_t limit) {
  std::vector<double> qs;
  for (const Atom& a : q.atoms()) qs.push_back(a.location);
  std::vector<double> kinks;
  for (const Atom& a : p.atoms()) {
    auto it = std::lower_bound(qs.begin(), qs.end(), a.location + lo);
    for (; it != qs.end() && *it - a.location <= hi; ++it) {
      kinks.push_back(*it - a.location);
      if (kinks.size() > limit) return {};
    }
  }
  return kinks;
}

EmdStarResult emd_star_ordered(const EmpiricalDistribution& p_in, const EmpiricalDistribution& q_in,
                               const EmdStarOptions& opts) {
  if (p_in.kind() == AtomKind::kPoint && q_in.kind() == AtomKind::kPoint && p_in.size() == 1 && q_in.size() == 1) {
    return {0.0, q_in.atoms()[0].location - p_in.atoms()[0].location, 0};
  }
  const EmpiricalDistribution p = p_in.rescaled();
  const EmpiricalDistribution q = q_in.rescaled();
  const PreparedCdf fp(p);
  const PreparedCdf fq(q);
  Workspace ws;
  auto objective = [&](double c) { return integrate(fp, fq, c, ws); };

  const double lo = q.support_min() - p.support_max();
  const double hi = q.support_max() - p.support_min();
  const double start = q.mean() - p.mean();
  BrentResult best = brent_minimize(objective, lo, hi, start, opts.tolerance, opts.max_iterations);

  if (p.kind() == AtomKind::kPoint && q.kind() == AtomKind::kPoint) {
    const double margin = opts.tolerance;
    for (double c : point_kinks(p, q, best.lower - margin, best.upper + margin, 256)) {
      const double fc = objective(c);
      if (fc < best.fx) {
        best.fx = fc;
        best.x = c;
      }
    }
  }
  const double value = best.fx < kZeroCutoff ? 0.0 : best.fx;
  return {value, best.x, best.iterations};
}

}  // namespace

double emd(const EmpiricalDistribution& p, const EmpiricalDistribution& q) {
  const PreparedCdf fp(p);
  const PreparedCdf fq(q);
  Workspace ws;
  return integrate(fp, fq, 0.0, ws);
}

EmdStarResult emd_star_detail(const EmpiricalDistribution& p, const EmpiricalDistribution& q,
                              const EmdStarOptions& opts) {
  if (canonical_less(q, p)) {
    EmdStarResult r = emd_star_ordered(q, p, opts);
    r.shift = -r.shift;
    return r;
  }
  return emd_star_ordered(p, q, opts);
}

double emd_star(const EmpiricalDistribution& p, const EmpiricalDistribution& q, const EmdStarOptions& opts) {
  return emd_star_detail(p, q, opts).value;
}

}  // namespace netemd
