#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "netemd/distribution.hpp"
#include "netemd/features.hpp"
#include "netemd/graph.hpp"

namespace netemd {

/// Symmetric matrix of pairwise NetEmd distances, row-major.
struct DistanceMatrix {
  std::vector<std::string> labels;
  std::vector<double> values;
  FeatureSetId feature_set{};

  std::size_t size() const noexcept { return labels.size(); }
  double at(std::size_t i, std::size_t j) const noexcept { return values[i * labels.size() + j]; }
  double& at(std::size_t i, std::size_t j) noexcept { return values[i * labels.size() + j]; }
};

/// exp(-alpha d^2) applied to a distance matrix.
struct KernelMatrix {
  std::vector<std::string> labels;
  std::vector<double> values;
  double alpha = 1.0;
  double min_eigenvalue = 0.0;
  bool psd = true;  // min_eigenvalue >= -1e-9 * n

  std::size_t size() const noexcept { return labels.size(); }
  double at(std::size_t i, std::size_t j) const noexcept { return values[i * labels.size() + j]; }
};

/// Weighted mean of emd_star over matching feature distributions. Empty
/// `weights` means the plain mean.
double netemd_from_distributions(std::span<const EmpiricalDistribution> a, std::span<const EmpiricalDistribution> b,
                                 std::span<const double> weights = {});

/// emd_star between feature `index` of family `kind` on two graphs.
double netemd_single(const Graph& a, const Graph& b, FeatureKind kind, std::size_t index);

/// Mean of the per-feature distances of family `fs.kind` (all nodes; use
/// distance_matrix for node sampling).
double netemd_set(const Graph& a, const Graph& b, FeatureSetId fs, std::span<const double> weights = {});

struct DistanceOptions {
  FeatureSetId features{};
  std::uint64_t seed = 0;        // graph i samples nodes with seed + i
  std::size_t threads = 0;       // 0 = hardware concurrency
  const FeatureCache* cache = nullptr;
  std::vector<double> weights;   // empty = uniform
};

/// All pairwise distances of a dataset. Features are computed once per graph.
DistanceMatrix distance_matrix(const GraphDataset& ds, const DistanceOptions& opts);
/// Same, from precomputed per-graph distributions.
DistanceMatrix distance_matrix(const std::vector<std::vector<EmpiricalDistribution>>& dists,
                               std::vector<std::string> labels, std::size_t threads = 0,
                               std::span<const double> weights = {});

/// Throws ParameterError unless alpha > 0.
KernelMatrix gaussian_kernel(const DistanceMatrix& dm, double alpha);

/// `count` values spaced evenly in log scale from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t count);

/// Tab-separated square matrix with a "graph" corner cell, a header row of
/// labels and one labelled row per graph; values use 17 significant digits.
void write_matrix(std::ostream& out, std::span<const std::string> labels, std::span<const double> values);
void write_distance_matrix(std::ostream& out, const DistanceMatrix& dm);
void write_kernel_matrix(std::ostream& out, const KernelMatrix& km);
/// Reads the format above. Lines starting with '#' are skipped, except for a
/// "# feature_set" line which sets dm.feature_set.
DistanceMatrix read_distance_matrix(std::istream& in);
DistanceMatrix read_distance_matrix(const std::filesystem::path& path);

}  // namespace netemd
