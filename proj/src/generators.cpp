#include "netemd/generators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_set>

#include "netemd/errors.hpp"
#include "netemd/parallel.hpp"
#include "textio.hpp"

namespace netemd {

namespace {

using Rng = std::mt19937_64;

// Seeds used only for calibration runs, kept away from user seeds.
constexpr std::uint64_t kCalibrationSeedBase = 0x6a09e667f3bcc908ULL;
// Stream offset so the pairing step of the configuration model does not
// reuse the stream that produced its degree sequence.
constexpr std::uint64_t kConfigPairingSalt = 0xbb67ae8584caa73bULL;

constexpr int kConfigRepairRounds = 10;

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::uint64_t edge_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) determined by (seed, step, node, salt) alone. Edge
// decisions of the duplication models use these draws so that realizations
// for nearby parameter values share their randomness.
double keyed_uniform(std::uint64_t seed, std::uint64_t step, std::uint64_t node, std::uint64_t salt) {
  const std::uint64_t h = splitmix(splitmix(splitmix(seed ^ salt) + step) + node);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

void check_common(std::size_t n, double k_avg) {
  if (n < 2) throw ParameterError("model needs at least 2 nodes");
  if (!(k_avg > 0.0) || !std::isfinite(k_avg)) throw ParameterError("average degree must be positive");
}

// Growing undirected graph with O(degree) edge removal.
class DynamicGraph {
 public:
  explicit DynamicGraph(std::size_t reserve) { adj_.reserve(reserve); }

  NodeId add_node() {
    adj_.emplace_back();
    return static_cast<NodeId>(adj_.size() - 1);
  }
  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }

  void add_edge(NodeId u, NodeId v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edges_;
  }
  void remove_edge(NodeId u, NodeId v) {
    erase_one(adj_[u], v);
    erase_one(adj_[v], u);
    --edges_;
  }

  Graph freeze() const {
    std::vector<Edge> edges;
    edges.reserve(edges_);
    for (NodeId u = 0; u < adj_.size(); ++u) {
      for (NodeId v : adj_[u]) {
        if (u < v) edges.emplace_back(u, v);
      }
    }
    return Graph(adj_.size(), edges);
  }

 private:
  static void erase_one(std::vector<NodeId>& list, NodeId x) {
    auto it = std::find(list.begin(), list.end(), x);
    *it = list.back();
    list.pop_back();
  }

  std::vector<std::vector<NodeId>> adj_;
  std::size_t edges_ = 0;
};

// Joins the m closest pairs of points; ties at the cut are broken by pair
// order so the edge count is exact.
Graph threshold_graph(const std::vector<std::array<double, 3>>& pts, std::size_t m) {
  const std::size_t n = pts.size();
  m = std::min(m, pair_count(n));
  std::vector<Edge> edges;
  if (m == 0) return Graph(n, edges);
  std::vector<double> d2;
  d2.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = pts[i][0] - pts[j][0];
      const double dy = pts[i][1] - pts[j][1];
      const double dz = pts[i][2] - pts[j][2];
      d2.push_back(dx * dx + dy * dy + dz * dz);
    }
  }
  std::vector<double> sorted = d2;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(m - 1), sorted.end());
  const double cut = sorted[m - 1];
  std::size_t below = 0;
  for (double x : d2) below += x < cut ? 1 : 0;
  std::size_t ties_left = m - below;
  edges.reserve(m);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++idx) {
      if (d2[idx] < cut || (d2[idx] == cut && ties_left > 0 && ties_left--)) {
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
  }
  return Graph(n, edges);
}

std::array<double, 3> uniform_point(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double x = u(rng);
  const double y = u(rng);
  const double z = u(rng);
  return {x, y, z};
}

double mean_degree(const Graph& g) {
  return g.node_count() == 0 ? 0.0 : 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

using CalibrationKey = std::tuple<int, std::size_t, double, double, double, int>;

double calibrate(Model model, std::size_t n, double k_avg, const ModelParams& params) {
  static std::mutex mutex;
  static std::map<CalibrationKey, double> cache;
  check_common(n, k_avg);
  if (!(params.calibration_step > 0.0) || params.calibration_seeds < 1) {
    throw ParameterError("calibration needs a positive step and at least one seed");
  }
  const CalibrationKey key{static_cast<int>(model), n, k_avg, params.vazquez_p, params.calibration_step,
                           params.calibration_seeds};
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const auto abort_edges = static_cast<std::size_t>(10.0 * static_cast<double>(n) * k_avg / 2.0);
  // Mean degree over the calibration seeds; +inf when a run grows too dense.
  auto mean_at = [&](double x) -> double {
    double total = 0.0;
    for (int r = 0; r < params.calibration_seeds; ++r) {
      const std::uint64_t seed = kCalibrationSeedBase + static_cast<std::uint64_t>(r);
      const auto g = model == Model::kDDVazquez ? dd_vazquez(n, params.vazquez_p, x, seed, abort_edges)
                                                : dd_ispolatov(n, x, seed, abort_edges);
      if (!g) return INFINITY;
      total += mean_degree(*g);
    }
    return total / params.calibration_seeds;
  };
  const double tolerance = params.calibration_tolerance * k_avg;
  double best_value = 0.0;
  double best_err = INFINITY;
  // Scans [lo, hi] in `step` increments, keeping the closest mean. Returns the
  // sub-intervals on which the mean crosses k_avg.
  auto scan = [&](double lo, double hi, double step) {
    std::vector<std::pair<double, double>> crossings;
    const auto steps = static_cast<int>(std::llround((hi - lo) / step));
    double prev_x = 0.0, prev_m = 0.0;
    for (int s = 0; s <= steps; ++s) {
      const double x = std::min(hi, lo + s * step);
      const double m = mean_at(x);
      const double err = std::abs(m - k_avg);
      if (err < best_err) {
        best_err = err;
        best_value = x;
      }
      if (s > 0 && (prev_m - k_avg) * (m - k_avg) < 0.0) crossings.emplace_back(prev_x, x);
      prev_x = x;
      prev_m = m;
    }
    return crossings;
  };
  auto crossings = scan(0.0, 1.0, params.calibration_step);
  const std::size_t crossings_found = crossings.size();
  // The mean degree of these models varies strongly between realizations, so
  // the coarse grid can bracket k_avg without landing near it. Refine inside
  // the bracketing intervals, down to 1e-4 of the grid step.
  double step = params.calibration_step;
  for (int level = 0; level < 4 && best_err > tolerance && !crossings.empty(); ++level) {
    step /= 10.0;
    std::vector<std::pair<double, double>> finer;
    for (const auto& [lo, hi] : crossings) {
      for (const auto& c : scan(lo, hi, step)) finer.push_back(c);
      if (best_err <= tolerance) break;
    }
    crossings = std::move(finer);
  }
  if (!std::isfinite(best_err) || (crossings_found == 0 && best_err > tolerance)) {
    throw CalibrationError(std::string(model_name(model)) + ": the parameter grid does not bracket average degree " +
                           textio::format_double(k_avg) + " for n=" + std::to_string(n));
  }
  cache.emplace(key, best_value);
  return best_value;
}

std::string spec_name(Model model, std::size_t n, double k_avg, std::uint64_t seed) {
  std::string k = textio::format_double(k_avg);
  return std::string(model_name(model)) + "_n" + std::to_string(n) + "_k" + k + "_s" + std::to_string(seed);
}

}  // namespace

std::string_view model_name(Model m) noexcept {
  switch (m) {
    case Model::kER: return "ER";
    case Model::kBA: return "BA";
    case Model::kConfig: return "CONFIG";
    case Model::kGeo3d: return "GEO3D";
    case Model::kGeoGeneDup: return "GEO_GENE_DUP";
    case Model::kDDVazquez: return "DD_VAZQUEZ";
    case Model::kDDIspolatov: return "DD_ISPOLATOV";
    case Model::kWattsStrogatz: return "WATTS_STROGATZ";
  }
  return "?";
}

Model parse_model(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (Model m : kAllModels) {
    if (model_name(m) == upper) return m;
  }
  throw ParameterError("unknown model '" + std::string(name) + "'");
}

std::size_t target_edge_count(std::size_t n, double k_avg) {
  return static_cast<std::size_t>(std::llround(static_cast<double>(n) * k_avg / 2.0));
}

Graph gen_er(std::size_t n, double k_avg, std::uint64_t seed) {
  check_common(n, k_avg);
  const std::size_t m = target_edge_count(n, k_avg);
  const std::size_t total = pair_count(n);
  if (m > total) throw ParameterError("G(n, m) needs m <= n(n-1)/2");
  Rng rng(seed);
  // Floyd's algorithm: m distinct pair indices out of `total`.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> order;
  order.reserve(m);
  for (std::size_t j = total - m; j < total; ++j) {
    const std::uint64_t t = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
    const std::uint64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    order.push_back(pick);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t idx : order) {
    // Pair index idx = v(v-1)/2 + u with u < v.
    auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
    while (v * (v - 1) / 2 > idx) --v;
    while ((v + 1) * v / 2 <= idx) ++v;
    const std::uint64_t u = idx - v * (v - 1) / 2;
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  return Graph(n, edges);
}

Graph gen_ba(std::size_t n, double k_avg, std::uint64_t seed) {
  check_common(n, k_avg);
  const auto m = static_cast<std::size_t>(std::llround(k_avg / 2.0));
  if (m < 1) throw ParameterError("BA needs round(k_avg / 2) >= 1");
  if (n <= m) throw ParameterError("BA needs more nodes than links per new node");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<NodeId> stubs;  // one entry per edge endpoint
  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      stubs.push_back(u);
      stubs.push_back(v);
    }
  }
  std::vector<NodeId> targets;
  for (auto t = static_cast<NodeId>(m + 1); t < n; ++t) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId pick = stubs[uniform_index(rng, stubs.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
    }
    for (NodeId x : targets) {
      edges.emplace_back(x, t);
      stubs.push_back(x);
      stubs.push_back(t);
    }
  }
  return Graph(n, edges);
}

Graph gen_config(std::span<const std::size_t> degrees, std::uint64_t seed) {
  const std::size_t n = degrees.size();
  Rng rng(seed);
  std::vector<std::size_t> target(degrees.begin(), degrees.end());
  std::size_t sum = 0;
  for (auto d : target) sum += d;
  if (sum % 2 == 1) ++target[uniform_index(rng, n)];
  std::vector<NodeId> stubs;
  stubs.reserve(sum + 1);
  for (NodeId v = 0; v < n; ++v) stubs.insert(stubs.end(), target[v], v);
  // Stubs that formed a self-loop or a repeated edge are paired again among
  // themselves for a bounded number of rounds; whatever is left is erased.
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  std::vector<NodeId> left;
  for (int round = 0; round <= kConfigRepairRounds && stubs.size() >= 2; ++round) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    left.clear();
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const NodeId a = stubs[i], b = stubs[i + 1];
      if (a != b && seen.insert(edge_key(a, b)).second) {
        edges.emplace_back(a, b);
      } else {
        left.push_back(a);
        left.push_back(b);
      }
    }
    stubs.swap(left);
  }
  return Graph(n, edges);
}

Graph gen_config_from_dd(std::size_t n, double k_avg, std::uint64_t seed, const ModelParams& params) {
  const Graph dd = gen_dd_vazquez(n, k_avg, seed, params);
  const auto degrees = degree_sequence(dd);
  return gen_config(degrees, seed ^ kConfigPairingSalt);
}

Graph gen_geometric3d(std::size_t n, double k_avg, std::uint64_t seed) {
  check_common(n, k_avg);
  Rng rng(seed);
  std::vector<std::array<double, 3>> pts(n);
  for (auto& p : pts) p = uniform_point(rng);
  return threshold_graph(pts, target_edge_count(n, k_avg));
}

Graph gen_geo_gene_dup(std::size_t n, double k_avg, std::uint64_t seed, const ModelParams& params) {
  check_common(n, k_avg);
  if (params.ggd_seed_points < 1) throw ParameterError("geometric gene duplication needs at least one seed point");
  if (!(params.ggd_radius > 0.0)) throw ParameterError("placement radius must be positive");
  Rng rng(seed);
  std::vector<std::array<double, 3>> pts;
  pts.reserve(n);
  const std::size_t initial = std::min(n, params.ggd_seed_points);
  for (std::size_t i = 0; i < initial; ++i) pts.push_back(uniform_point(rng));
  std::uniform_real_distribution<double> offset(-params.ggd_radius, params.ggd_radius);
  const double r2 = params.ggd_radius * params.ggd_radius;
  while (pts.size() < n) {
    const auto parent = pts[uniform_index(rng, pts.size())];
    for (;;) {
      const double dx = offset(rng);
      const double dy = offset(rng);
      const double dz = offset(rng);
      if (dx * dx + dy * dy + dz * dz <= r2) {
        pts.push_back({parent[0] + dx, parent[1] + dy, parent[2] + dz});
        break;
      }
    }
  }
  return threshold_graph(pts, target_edge_count(n, k_avg));
}

Graph gen_watts_strogatz(std::size_t n, double k_avg, std::uint64_t seed, const ModelParams& params) {
  check_common(n, k_avg);
  const auto k_ring = static_cast<std::size_t>(std::llround(k_avg / 2.0));
  if (k_ring < 1) throw ParameterError("Watts-Strogatz needs round(k_avg / 2) >= 1");
  if (2 * k_ring >= n) throw ParameterError("Watts-Strogatz ring is too dense for n");
  Rng rng(seed);
  std::bernoulli_distribution rewire(params.ws_rewire);
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> present;
  for (std::size_t j = 1; j <= k_ring; ++j) {
    for (std::size_t u = 0; u < n; ++u) {
      const auto a = static_cast<NodeId>(u);
      const auto b = static_cast<NodeId>((u + j) % n);
      edges.emplace_back(a, b);
      present.insert(edge_key(a, b));
    }
  }
  std::vector<std::size_t> degree(n, 2 * k_ring);
  for (auto& [u, v] : edges) {
    if (!rewire(rng)) continue;
    if (degree[u] >= n - 1) continue;  // u already joined to every node
    NodeId w;
    do {
      w = static_cast<NodeId>(uniform_index(rng, n));
    } while (w == u || present.count(edge_key(u, w)));
    present.erase(edge_key(u, v));
    present.insert(edge_key(u, w));
    --degree[v];
    ++degree[w];
    v = w;
  }
  return Graph(n, edges);
}

std::optional<Graph> dd_vazquez(std::size_t n, double p, double q, std::uint64_t seed, std::size_t max_edges) {
  if (n < 2) throw ParameterError("duplication-divergence needs at least 2 nodes");
  Rng rng(seed);
  DynamicGraph g(n);
  g.add_node();
  g.add_node();
  g.add_edge(0, 1);
  std::vector<NodeId> parent_nbrs;
  while (g.node_count() < n) {
    const auto v = static_cast<NodeId>(uniform_index(rng, g.node_count()));
    const NodeId dup = g.add_node();
    parent_nbrs = g.neighbors(v);
    for (NodeId u : parent_nbrs) {
      g.add_edge(dup, u);
      if (keyed_uniform(seed, dup, u, 1) < q) {
        if (keyed_uniform(seed, dup, u, 2) < 0.5) g.remove_edge(v, u);
        else g.remove_edge(dup, u);
      }
    }
    if (keyed_uniform(seed, dup, v, 3) < p) g.add_edge(v, dup);
    if (g.edge_count() > max_edges) return std::nullopt;
  }
  return g.freeze();
}

std::optional<Graph> dd_ispolatov(std::size_t n, double p, std::uint64_t seed, std::size_t max_edges) {
  if (n < 2) throw ParameterError("duplication-divergence needs at least 2 nodes");
  Rng rng(seed);
  DynamicGraph g(n);
  g.add_node();
  g.add_node();
  g.add_edge(0, 1);
  std::vector<NodeId> parent_nbrs;
  while (g.node_count() < n) {
    const auto v = static_cast<NodeId>(uniform_index(rng, g.node_count()));
    const NodeId dup = g.add_node();
    parent_nbrs = g.neighbors(v);
    for (NodeId u : parent_nbrs) {
      if (keyed_uniform(seed, dup, u, 4) < p) g.add_edge(dup, u);
    }
    if (g.edge_count() > max_edges) return std::nullopt;
  }
  return g.freeze();
}

double calibrate_dd_vazquez(std::size_t n, double k_avg, const ModelParams& params) {
  return calibrate(Model::kDDVazquez, n, k_avg, params);
}

double calibrate_dd_ispolatov(std::size_t n, double k_avg, const ModelParams& params) {
  return calibrate(Model::kDDIspolatov, n, k_avg, params);
}

Graph gen_dd_vazquez(std::size_t n, double k_avg, std::uint64_t seed, const ModelParams& params) {
  const double q = calibrate_dd_vazquez(n, k_avg, params);
  return *dd_vazquez(n, params.vazquez_p, q, seed);
}

Graph gen_dd_ispolatov(std::size_t n, double k_avg, std::uint64_t seed, const ModelParams& params) {
  const double p = calibrate_dd_ispolatov(n, k_avg, params);
  return *dd_ispolatov(n, p, seed);
}

Graph generate(const ModelSpec& spec) {
  Graph g;
  switch (spec.model) {
    case Model::kER: g = gen_er(spec.n, spec.k_avg, spec.seed); break;
    case Model::kBA: g = gen_ba(spec.n, spec.k_avg, spec.seed); break;
    case Model::kConfig: g = gen_config_from_dd(spec.n, spec.k_avg, spec.seed, spec.params); break;
    case Model::kGeo3d: g = gen_geometric3d(spec.n, spec.k_avg, spec.seed); break;
    case Model::kGeoGeneDup: g = gen_geo_gene_dup(spec.n, spec.k_avg, spec.seed, spec.params); break;
    case Model::kDDVazquez: g = gen_dd_vazquez(spec.n, spec.k_avg, spec.seed, spec.params); break;
    case Model::kDDIspolatov: g = gen_dd_ispolatov(spec.n, spec.k_avg, spec.seed, spec.params); break;
    case Model::kWattsStrogatz: g = gen_watts_strogatz(spec.n, spec.k_avg, spec.seed, spec.params); break;
  }
  g.set_name(spec_name(spec.model, spec.n, spec.k_avg, spec.seed));
  return g;
}

std::vector<GridRow> parse_grid(std::istream& in) {
  std::vector<GridRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto f = textio::split_fields(line);
    if (f.empty()) continue;
    if (rows.empty() && (f[0] == "model" || f[0] == "MODEL")) continue;
    if (f.size() != 5) throw ParseError("expected 5 columns: model n k_avg reps seed_base", line_no);
    GridRow r;
    try {
      r.model = parse_model(f[0]);
    } catch (const ParameterError& e) {
      throw ParseError(e.what(), line_no);
    }
    r.n = static_cast<std::size_t>(textio::parse_uint(f[1], line_no));
    r.k_avg = textio::parse_double(f[2], line_no);
    r.reps = static_cast<std::size_t>(textio::parse_uint(f[3], line_no));
    r.seed_base = textio::parse_uint(f[4], line_no);
    rows.push_back(r);
  }
  return rows;
}

std::vector<GridRow> read_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open grid file " + path.string());
  return parse_grid(in);
}

GraphDataset gen_suite(std::span<const GridRow> grid, std::optional<std::size_t> reps_override, std::size_t threads,
                       const ModelParams& params) {
  std::vector<ModelSpec> jobs;
  for (const GridRow& row : grid) {
    const std::size_t reps = reps_override.value_or(row.reps);
    if (reps < 1) throw ParameterError("reps must be at least 1");
    for (std::size_t r = 0; r < reps; ++r) {
      jobs.push_back({row.model, row.n, row.k_avg, row.seed_base + r, params});
    }
  }
  GraphDataset ds;
  ds.graphs.resize(jobs.size());
  ds.class_labels.resize(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    ds.graphs[i] = generate(jobs[i]);
    ds.class_labels[i] = std::string(model_name(jobs[i].model));
  });
  return ds;
}

GraphDataset gen_suite(std::span<const ModelSpec> cells, std::size_t reps, std::size_t threads) {
  if (reps < 1) throw ParameterError("reps must be at least 1");
  std::vector<ModelSpec> jobs;
  for (const ModelSpec& cell : cells) {
    for (std::size_t r = 0; r < reps; ++r) {
      ModelSpec s = cell;
      s.seed = cell.seed + r;
      jobs.push_back(s);
    }
  }
  GraphDataset ds;
  ds.graphs.resize(jobs.size());
  ds.class_labels.resize(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    ds.graphs[i] = generate(jobs[i]);
    ds.class_labels[i] = std::string(model_name(jobs[i].model));
  });
  return ds;
}

void write_dataset(const std::filesystem::path& dir, const GraphDataset& ds, std::string_view header) {
  ds.validate();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  const auto names = ds.names();
  std::vector<ManifestEntry> entries;
  std::vector<std::filesystem::path> written;
  try {
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const std::string file = names[i] + ".edges";
      textio::write_file_atomic(dir / file, [&](std::ostream& out) {
        out << header;
        write_edge_list(out, ds.graphs[i]);
      });
      written.push_back(dir / file);
      ManifestEntry e;
      e.path = file;
      if (ds.has_class_labels()) e.class_label = ds.class_labels[i];
      if (ds.has_time_labels()) e.time_label = ds.time_labels[i];
      entries.push_back(std::move(e));
    }
    textio::write_file_atomic(dir / "manifest.tsv", [&](std::ostream& out) {
      out << header;
      write_manifest(out, entries);
    });
  } catch (...) {
    for (const auto& p : written) std::filesystem::remove(p, ec);
    throw;
  }
}

}  // namespace netemd
