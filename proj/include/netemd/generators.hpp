#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "netemd/graph.hpp"

namespace netemd {

enum class Model { kER, kBA, kConfig, kGeo3d, kGeoGeneDup, kDDVazquez, kDDIspolatov, kWattsStrogatz };

inline constexpr Model kAllModels[] = {Model::kER,         Model::kBA,          Model::kConfig,
                                       Model::kGeo3d,      Model::kGeoGeneDup,  Model::kDDVazquez,
                                       Model::kDDIspolatov, Model::kWattsStrogatz};

/// "ER", "BA", "CONFIG", "GEO3D", "GEO_GENE_DUP", "DD_VAZQUEZ", "DD_ISPOLATOV",
/// "WATTS_STROGATZ".
std::string_view model_name(Model m) noexcept;
/// Case-insensitive inverse of model_name; throws ParameterError.
Model parse_model(std::string_view name);

/// Constants that the models need besides (n, k_avg).
struct ModelParams {
  double vazquez_p = 0.05;       // duplicate-parent link probability
  double ws_rewire = 0.05;       // Watts-Strogatz rewiring probability
  std::size_t ggd_seed_points = 5;
  double ggd_radius = 0.1;       // placement radius around the parent point
  double calibration_step = 0.01;
  int calibration_seeds = 5;
  double calibration_tolerance = 0.05;  // refinement stops within this relative error
  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

struct ModelSpec {
  Model model = Model::kER;
  std::size_t n = 0;
  double k_avg = 0.0;
  std::uint64_t seed = 0;
  ModelParams params{};
};

/// Edge count round(n * k_avg / 2) targeted by the edge-calibrated models.
std::size_t target_edge_count(std::size_t n, double k_avg);

/// G(n, m) with m = round(n k / 2) edges chosen uniformly without replacement.
Graph gen_er(std::size_t n, double k_avg, std::uint64_t seed);
/// Preferential attachment with round(k/2) links per new node, grown from a
/// complete graph on round(k/2) + 1 nodes.
Graph gen_ba(std::size_t n, double k_avg, std::uint64_t seed);
/// Erased configuration model on the given degree sequence: stubs are paired
/// uniformly at random and self-loops and repeated edges are dropped. An odd
/// degree sum is fixed by adding one stub to a uniformly chosen node.
Graph gen_config(std::span<const std::size_t> degrees, std::uint64_t seed);
/// Erased configuration model on the degree sequence of a calibrated
/// Vazquez duplication-divergence graph with the same (n, k_avg).
Graph gen_config_from_dd(std::size_t n, double k_avg, std::uint64_t seed, const ModelParams& params = {});
/// Uniform points in the unit cube joined when closer than a threshold that
/// gives exactly round(n k / 2) edges (capped at all pairs).
Graph gen_geometric3d(std::size_t n, double k_avg, std::uint64_t seed);
/// Points grown by repeatedly placing a new point uniformly in a ball around
/// a random existing point, then thresholded as in gen_geometric3d.
Graph gen_geo_gene_dup(std::size_t n, double k_avg, std::uint64_t seed, const ModelParams& params = {});
/// Ring lattice with round(k/2) neighbours per side, each edge rewired with
/// probability params.ws_rewire.
Graph gen_watts_strogatz(std::size_t n, double k_avg, std::uint64_t seed, const ModelParams& params = {});

/// Vazquez duplication-divergence graph with explicit (p, q), grown from a
/// single edge. Returns nullopt if the edge count exceeds max_edges.
std::optional<Graph> dd_vazquez(std::size_t n, double p, double q, std::uint64_t seed,
                                std::size_t max_edges = SIZE_MAX);
/// Ispolatov duplication-divergence graph with explicit p, grown from a
/// single edge. Returns nullopt if the edge count exceeds max_edges.
std::optional<Graph> dd_ispolatov(std::size_t n, double p, std::uint64_t seed, std::size_t max_edges = SIZE_MAX);

/// Grid-searched q (Vazquez) or p (Ispolatov) whose mean degree over the
/// calibration seeds is closest to k_avg. Where the grid brackets k_avg but
/// misses it by more than the tolerance, the bracketing intervals are searched
/// on finer grids. Results are memoized. Throws CalibrationError when no grid
/// value comes within the tolerance and the grid does not bracket k_avg.
double calibrate_dd_vazquez(std::size_t n, double k_avg, const ModelParams& params = {});
double calibrate_dd_ispolatov(std::size_t n, double k_avg, const ModelParams& params = {});

Graph gen_dd_vazquez(std::size_t n, double k_avg, std::uint64_t seed, const ModelParams& params = {});
Graph gen_dd_ispolatov(std::size_t n, double k_avg, std::uint64_t seed, const ModelParams& params = {});

/// Dispatches on spec.model. The graph is named after the spec.
Graph generate(const ModelSpec& spec);

/// One row of a generation grid: `reps` graphs with seeds seed_base,
/// seed_base + 1, ...
struct GridRow {
  Model model = Model::kER;
  std::size_t n = 0;
  double k_avg = 0.0;
  std::size_t reps = 1;
  std::uint64_t seed_base = 0;
};

/// Whitespace-separated rows {model, n, k_avg, reps, seed_base}; '#' comments
/// and a leading "model" header row are skipped.
std::vector<GridRow> parse_grid(std::istream& in);
std::vector<GridRow> read_grid(const std::filesystem::path& path);

/// All realizations of every row, in row order, class-labelled by model name.
/// `reps_override` replaces each row's reps when set.
GraphDataset gen_suite(std::span<const GridRow> grid, std::optional<std::size_t> reps_override = std::nullopt,
                       std::size_t threads = 0, const ModelParams& params = {});
/// `reps` realizations of each spec with seeds spec.seed + r.
GraphDataset gen_suite(std::span<const ModelSpec> cells, std::size_t reps, std::size_t threads = 0);

/// Writes one edge list per graph plus manifest.tsv into `dir`, each file
/// starting with `header` (a comment line, may be empty). Files written before
/// a failure are removed again.
void write_dataset(const std::filesystem::path& dir, const GraphDataset& ds, std::string_view header = {});

}  // namespace netemd
