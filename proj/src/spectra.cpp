#include "netemd/spectra.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "netemd/errors.hpp"

namespace netemd {

namespace {

constexpr double kClampTol = 1e-9;

std::vector<double> eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

void clamp_into(std::vector<double>& values, double lo, double hi, const char* what) {
  for (double& x : values) {
    if (x < lo) {
      if (x < lo - kClampTol) throw NumericalError(std::string(what) + " eigenvalue " + std::to_string(x) + " below range");
      x = lo;
    } else if (x > hi) {
      if (x > hi + kClampTol) throw NumericalError(std::string(what) + " eigenvalue " + std::to_string(x) + " above range");
      x = hi;
    }
  }
}

}  // namespace

SpectrumPair spectra(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd norm = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> inv_sqrt(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) > 0) inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    lap(v, v) = d;
    norm(v, v) = d > 0 ? 1.0 : 0.0;
    for (NodeId u : g.neighbors(v)) {
      lap(v, u) = -1.0;
      norm(v, u) = -inv_sqrt[v] * inv_sqrt[u];
    }
  }

  SpectrumPair out;
  out.laplacian = eigenvalues(lap);
  out.normalized = eigenvalues(norm);
  const double max_lap = 2.0 * static_cast<double>(g.max_degree());
  clamp_into(out.laplacian, 0.0, max_lap, "Laplacian");
  clamp_into(out.normalized, 0.0, 2.0, "normalized Laplacian");
  return out;
}

}  // namespace netemd
