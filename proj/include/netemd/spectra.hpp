#pragma once

#include <vector>

#include "netemd/graph.hpp"

namespace netemd {

/// Eigenvalues of L = D - A and of the normalized Laplacian, both ascending.
struct SpectrumPair {
  std::vector<double> laplacian;
  std::vector<double> normalized;
  friend bool operator==(const SpectrumPair&, const SpectrumPair&) = default;
};

/// Dense symmetric eigendecomposition of both Laplacians. Rows of isolated
/// nodes in the normalized Laplacian are zero. Values within 1e-9 outside
/// their valid range are clamped; larger violations raise NumericalError.
SpectrumPair spectra(const Graph& g);

}  // namespace netemd
