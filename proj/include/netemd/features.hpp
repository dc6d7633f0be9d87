#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netemd/distribution.hpp"
#include "netemd/graph.hpp"
#include "netemd/orbits.hpp"
#include "netemd/spectra.hpp"

namespace netemd {

enum class FeatureKind { kDD, kG3, kG4, kG5, kE4, kS };

/// A feature family plus the fraction of nodes whose values enter the
/// distributions (1 = all nodes).
struct FeatureSetId {
  FeatureKind kind = FeatureKind::kG4;
  double fraction = 1.0;
  friend bool operator==(const FeatureSetId&, const FeatureSetId&) = default;
};

/// "dd", "g3", "g4", "g5", "e4" or "s".
std::string_view feature_kind_name(FeatureKind kind) noexcept;
/// Case-insensitive inverse of feature_kind_name; throws ParameterError.
FeatureKind parse_feature_kind(std::string_view name);
/// Number of distributions per graph: 1, 4, 15, 73, 9 and 2 respectively.
std::size_t feature_count(FeatureKind kind) noexcept;

/// Raw per-graph values behind one feature family: a node-by-column count
/// table (degrees, orbit degrees or ego censuses) or the two spectra.
struct GraphFeatures {
  FeatureKind kind = FeatureKind::kDD;
  CountTable counts;
  SpectrumPair spectrum;
  std::size_t node_count() const noexcept;
  friend bool operator==(const GraphFeatures&, const GraphFeatures&) = default;
};

GraphFeatures compute_features(const Graph& g, FeatureKind kind);

/// One distribution per feature. Integer features become histograms, spectra
/// become point-mass distributions.
std::vector<EmpiricalDistribution> feature_distributions(const GraphFeatures& f);
/// Same, restricted to the nodes in `sample`. Spectra do not depend on nodes
/// and ignore the sample. Throws ParameterError for an empty sample or an out
/// of range node.
std::vector<EmpiricalDistribution> feature_distributions(const GraphFeatures& f, std::span<const NodeId> sample);

/// round(fraction * n) distinct nodes (at least one) drawn uniformly without
/// replacement, in ascending order. fraction must be in (0, 1].
std::vector<NodeId> sample_nodes(std::size_t n, double fraction, std::uint64_t seed);

void write_features(std::ostream& out, const GraphFeatures& f);
GraphFeatures read_features(std::istream& in);

/// On-disk feature store, one file per (graph content hash, feature family).
/// Distinct keys live in distinct files, so concurrent use from several
/// threads is safe.
class FeatureCache {
 public:
  explicit FeatureCache(std::filesystem::path dir);

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::filesystem::path path_for(const Graph& g, FeatureKind kind) const;

  std::optional<GraphFeatures> load(const Graph& g, FeatureKind kind) const;
  void store(const Graph& g, const GraphFeatures& f) const;
  /// Loads from the cache, or computes and stores.
  GraphFeatures get(const Graph& g, FeatureKind kind) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace netemd
