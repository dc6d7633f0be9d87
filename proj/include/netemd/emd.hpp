#pragma once

#include "netemd/distribution.hpp"

namespace netemd {

/// Exact earth mover's distance between two distributions on the line,
/// computed as the integral of |F - G| over the merged breakpoints.
double emd(const EmpiricalDistribution& p, const EmpiricalDistribution& q);

struct EmdStarOptions {
  double tolerance = 1e-5;  // absolute, on the translation
  int max_iterations = 150;
};

struct EmdStarResult {
  double value;
  double shift;  // translation applied to the rescaled first argument
  int iterations;
};

/// Translation-minimized EMD between unit-variance rescalings of p and q.
/// Zero-variance inputs are left unscaled. Values below 1e-12 are returned
/// as exactly 0. Symmetric in its arguments bit for bit.
double emd_star(const EmpiricalDistribution& p, const EmpiricalDistribution& q, const EmdStarOptions& opts = {});

/// Same as emd_star, also reporting the minimizing shift. `shift` refers to
/// the arguments in the order given.
EmdStarResult emd_star_detail(const EmpiricalDistribution& p, const EmpiricalDistribution& q,
                              const EmdStarOptions& opts = {});

}  // namespace netemd
