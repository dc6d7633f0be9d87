// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "emd_oracle.hpp"
#include "eval_oracle.hpp"
#include "netemd/emd.hpp"
#include "netemd/eval.hpp"
#include "netemd/features.hpp"
#include "netemd/generators.hpp"
#include "netemd/netemd.hpp"
#include "netemd/orbits.hpp"
#include "netemd/parallel.hpp"
#include "netemd/spectra.hpp"
#include "orbit_oracle.hpp"
#include "test_util.hpp"

using namespace netemd;

namespace {

constexpr double kRg1PbarMin = 0.90;
constexpr double kRg23PbarMin = 0.85;
constexpr double kShapeTrialShare = 0.90;
constexpr double kSelfDistanceMax = 1e-12;
constexpr double kTriangleSlack = 1e-7;
constexpr double kEmdOracleTol = 1e-9;
constexpr double kAffineTol = 1e-6;
constexpr double kSpectrumTol = 1e-9;
constexpr double kTauMin = 0.8;
constexpr double kSubsampleGap = 0.05;
constexpr double kEvalOracleTol = 1e-12;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::vector<ModelSpec> model_cells(std::size_t n, double k) {
  std::vector<ModelSpec> cells;
  for (Model m : kAllModels) cells.push_back({m, n, k, 1000, {}});
  return cells;
}

std::vector<GraphFeatures> features_of(const GraphDataset& ds, FeatureKind kind) {
  std::vector<GraphFeatures> out(ds.size());
  parallel_for(ds.size(), 0, [&](std::size_t i) { out[i] = compute_features(ds.graphs[i], kind); });
  return out;
}

DistanceMatrix matrix_from(const GraphDataset& ds, const std::vector<GraphFeatures>& feats, double fraction,
                           std::uint64_t seed) {
  std::vector<std::vector<EmpiricalDistribution>> dists(ds.size());
  parallel_for(ds.size(), 0, [&](std::size_t i) {
    if (fraction >= 1.0) {
      dists[i] = feature_distributions(feats[i]);
    } else {
      const auto sample = sample_nodes(feats[i].node_count(), fraction, seed + i);
      dists[i] = feature_distributions(feats[i], sample);
    }
  });
  return distance_matrix(dists, ds.names());
}

// Shared by criteria 1 and 10.
const GraphDataset& rg1() {
  static const GraphDataset ds = gen_suite(model_cells(1000, 10.0), 10);
  return ds;
}

const std::vector<GraphFeatures>& rg1_g4() {
  static const auto feats = features_of(rg1(), FeatureKind::kG4);
  return feats;
}

Outcome criterion_rg1() {
  const auto dm = matrix_from(rg1(), rg1_g4(), 1.0, 0);
  const double p = pbar(dm, rg1().class_labels).value;
  return {p >= kRg1PbarMin, fmt("G4 P = %.4f on %zu graphs (min %.2f)", p, rg1().size(), kRg1PbarMin)};
}

Outcome criterion_rg23() {
  std::vector<ModelSpec> cells;
  for (std::size_t n : {500u, 1000u}) {
    for (double k : {10.0, 20.0}) {
      auto c = model_cells(n, k);
      cells.insert(cells.end(), c.begin(), c.end());
    }
  }
  const GraphDataset ds = gen_suite(cells, 5);
  const double g4 = pbar(matrix_from(ds, features_of(ds, FeatureKind::kG4), 1.0, 0), ds.class_labels).value;
  const double s = pbar(matrix_from(ds, features_of(ds, FeatureKind::kS), 1.0, 0), ds.class_labels).value;
  return {g4 >= kRg23PbarMin && s >= kRg23PbarMin,
          fmt("G4 P = %.4f, S P = %.4f on %zu graphs (min %.2f)", g4, s, ds.size(), kRg23PbarMin)};
}

Outcome criterion_degree_shape() {
  const int trials = 20;
  std::vector<int> ba_ok(trials, 0), er_ok(trials, 0);
  const FeatureSetId dd{FeatureKind::kDD, 1.0};
  parallel_for(trials, 0, [&](std::size_t t) {
    const std::uint64_t s = 5000 + 10 * t;
    const Graph ba = gen_ba(2000, 40.0, s);
    const Graph er = gen_er(2000, 40.0, s + 1);
    const Graph ba_sparse = gen_ba(5000, 10.0, s + 2);
    const Graph er_sparse = gen_er(5000, 10.0, s + 3);
    const double ba_er = netemd_set(ba, er, dd);
    ba_ok[t] = netemd_set(ba, ba_sparse, dd) < ba_er;
    er_ok[t] = netemd_set(er, er_sparse, dd) < ba_er;
  });
  const double ba_share = std::accumulate(ba_ok.begin(), ba_ok.end(), 0) / static_cast<double>(trials);
  const double er_share = std::accumulate(er_ok.begin(), er_ok.end(), 0) / static_cast<double>(trials);
  return {ba_share >= kShapeTrialShare && er_share >= kShapeTrialShare,
          fmt("BA ordering in %.0f%%, ER ordering in %.0f%% of %d trials (min %.0f%%)", 100 * ba_share,
              100 * er_share, trials, 100 * kShapeTrialShare)};
}

Outcome criterion_pseudometric() {
  std::mt19937_64 rng(404);
  int asymmetric = 0, self_bad = 0, triangle_bad = 0;
  double worst_self = 0.0, worst_violation = -INFINITY;
  auto check = [&](auto&& dist, const auto& a, const auto& b, const auto& c) {
    const double ab = dist(a, b), ba = dist(b, a), bc = dist(b, c), ac = dist(a, c), aa = dist(a, a);
    asymmetric += ab != ba;
    worst_self = std::max(worst_self, aa);
    self_bad += !(aa < kSelfDistanceMax);
    const double v = ac - ab - bc;
    worst_violation = std::max(worst_violation, v);
    triangle_bad += v >= kTriangleSlack;
  };
  auto dist_emd = [](const EmpiricalDistribution& p, const EmpiricalDistribution& q) { return emd_star(p, q); };
  for (int i = 0; i < 200; ++i) {
    const int kind = i % 3;
    auto make = [&] {
      return kind == 0 ? testing::random_points(rng, 8)
                       : testing::random_histogram(rng, 10 + rng() % 40);
    };
    auto p = make(), q = make(), r = make();
    check(dist_emd, p, q, r);
  }
  const FeatureSetId g4{FeatureKind::kG4, 1.0};
  auto dist_graph = [&](const Graph& a, const Graph& b) { return netemd_set(a, b, g4); };
  for (int i = 0; i < 50; ++i) {
    auto make = [&]() -> Graph {
      const std::size_t n = 20 + rng() % 40;
      const bool dense_er = rng() % 2 == 0;
      const double p = 0.05 + 0.2 * static_cast<double>(rng() % 100) / 100.0;
      const double k = 2.0 * static_cast<double>(1 + rng() % 3);
      const std::uint64_t seed = rng();
      return dense_er ? testing::random_graph(n, p, seed) : gen_ba(n, k, seed);
    };
    Graph a = make(), b = make(), c = make();
    check(dist_graph, a, b, c);
  }
  return {asymmetric == 0 && self_bad == 0 && triangle_bad == 0,
          fmt("asymmetric %d, self > 1e-12 %d (max %.1e), triangle violations %d (max excess %.1e)", asymmetric,
              self_bad, worst_self, triangle_bad, worst_violation)};
}

Outcome criterion_emd_oracle() {
  std::mt19937_64 rng(505);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    auto p = testing::random_points(rng, 8);
    auto q = testing::random_points(rng, 8);
    worst = std::max(worst, std::abs(emd(p, q) - testing::coupling_emd(testing::points_of(p), testing::points_of(q))));
  }
  return {worst < kEmdOracleTol, fmt("max |emd - coupling| = %.2e over 500 pairs (tol %.0e)", worst, kEmdOracleTol)};
}

Outcome criterion_affine() {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> scale(0.01, 100.0), shift(-1000.0, 1000.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const bool bins = i % 2 == 1;
    auto p = bins ? testing::random_histogram(rng, 10 + rng() % 40) : testing::random_points(rng, 8);
    auto q = bins ? testing::random_histogram(rng, 10 + rng() % 40) : testing::random_points(rng, 8);
    const double base = emd_star(p, q);
    const double moved = emd_star(p.affine(scale(rng), shift(rng)), q.affine(scale(rng), shift(rng)));
    worst = std::max(worst, std::abs(base - moved));
  }
  int nonzero = 0;
  std::uniform_real_distribution<double> loc(-1e6, 1e6);
  for (int i = 0; i < 100; ++i) {
    EmpiricalDistribution a(AtomKind::kPoint, {{loc(rng), 1.0}});
    EmpiricalDistribution b(AtomKind::kPoint, {{loc(rng), 1.0}});
    nonzero += emd_star(a, b) != 0.0;
  }
  return {worst < kAffineTol && nonzero == 0,
          fmt("max change %.2e over 200 pairs (tol %.0e); point-mass pairs not exactly 0: %d", worst, kAffineTol,
              nonzero)};
}

Outcome criterion_orbits() {
  const auto table = testing::load_fixture_graphlets(NETEMD_TEST_DATA_DIR "/graphlet_orbits.tsv");
  std::mt19937_64 rng(707);
  int mismatched_graphs = 0, degree_bad = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 5 + rng() % 10;
    const double p = 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    const std::uint64_t seed = rng();
    Graph g = testing::random_graph(n, p, seed);
    const auto counts = orbit_counts(g, 5);
    const auto expected = testing::brute_force_orbits(g, 5, table);
    bool same = true;
    for (NodeId v = 0; v < n; ++v) {
      for (std::size_t o = 0; o < counts.column_count(); ++o) same &= counts.at(v, o) == expected[v][o];
      degree_bad += counts.at(v, 0) != g.degree(v);
    }
    mismatched_graphs += !same;
  }
  return {mismatched_graphs == 0 && degree_bad == 0,
          fmt("graphs differing from brute force: %d of 50; degree column mismatches: %d", mismatched_graphs,
              degree_bad)};
}

Outcome criterion_spectra() {
  std::mt19937_64 rng(808);
  int bad = 0;
  double worst_trace = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 5 + rng() % 60;
    const double p = 0.05 + 0.4 * static_cast<double>(rng() % 100) / 100.0;
    const std::uint64_t seed = rng();
    Graph g = testing::random_graph(n, p, seed);
    const auto s = spectra(g);
    const double trace = std::accumulate(s.laplacian.begin(), s.laplacian.end(), 0.0);
    const double err = std::abs(trace - 2.0 * static_cast<double>(g.edge_count()));
    worst_trace = std::max(worst_trace, err);
    bad += s.laplacian.front() < -kSpectrumTol || err > kSpectrumTol || s.normalized.front() < -kSpectrumTol ||
           s.normalized.back() > 2.0 + kSpectrumTol;
  }
  int degenerate = 0;
  const std::pair<std::size_t, std::size_t> pairs[] = {{4, 6}, {5, 9}, {7, 12}};
  for (auto [a, b] : pairs) {
    Graph ka = testing::complete_graph(a), kb = testing::complete_graph(b);
    degenerate += netemd_set(ka, kb, {FeatureKind::kG5, 1.0}) != 0.0;
    degenerate += !(netemd_set(ka, kb, {FeatureKind::kS, 1.0}) > 0.0);
  }
  return {bad == 0 && degenerate == 0,
          fmt("graphs failing range/trace checks: %d of 50 (max trace error %.1e); complete-graph checks failed: %d",
              bad, worst_trace, degenerate)};
}

Outcome criterion_time_order() {
  const std::size_t steps = 30;
  Graph g = gen_geometric3d(500, 10.0, 909);
  std::mt19937_64 rng(910);
  GraphDataset chain;
  chain.graphs.push_back(g);
  const std::size_t n = g.node_count();
  auto edges = g.edges();
  std::unordered_set<std::uint64_t> present;
  auto key = [](NodeId a, NodeId b) { return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b); };
  for (const auto& [a, b] : edges) present.insert(key(a, b));
  const std::size_t per_step = std::max<std::size_t>(1, edges.size() / 100);
  for (std::size_t t = 1; t < steps; ++t) {
    for (std::size_t r = 0; r < per_step; ++r) {
      const std::size_t idx = rng() % edges.size();
      NodeId keep = edges[idx].first;
      for (;;) {
        const auto w = static_cast<NodeId>(rng() % n);
        if (w == keep || present.count(key(keep, w))) continue;
        present.erase(key(edges[idx].first, edges[idx].second));
        present.insert(key(keep, w));
        edges[idx] = {keep, w};
        break;
      }
    }
    chain.graphs.emplace_back(n, edges);
  }
  const auto feats = features_of(chain, FeatureKind::kG4);
  const auto dm = matrix_from(chain, feats, 1.0, 0);
  std::vector<std::size_t> truth(steps);
  std::iota(truth.begin(), truth.end(), 0);
  const auto r = time_rankings(dm, truth);
  return {r.best_tau >= kTauMin,
          fmt("best tau = %.4f (taus %.3f %.3f %.3f %.3f, min %.1f)", r.best_tau, r.taus[0], r.taus[1], r.taus[2],
              r.taus[3], kTauMin)};
}

Outcome criterion_subsampling() {
  const double full = pbar(matrix_from(rg1(), rg1_g4(), 1.0, 0), rg1().class_labels).value;
  double total = 0.0;
  const int seeds = 10;
  for (int s = 0; s < seeds; ++s) {
    total += pbar(matrix_from(rg1(), rg1_g4(), 0.1, 1000 * static_cast<std::uint64_t>(s + 1)), rg1().class_labels)
                 .value;
  }
  const double sampled = total / seeds;
  return {std::abs(full - sampled) <= kSubsampleGap,
          fmt("P full = %.4f, mean P at 10%% = %.4f, gap %.4f (max %.2f)", full, sampled, std::abs(full - sampled),
              kSubsampleGap)};
}

Outcome criterion_eval_oracles() {
  std::mt19937_64 rng(1111);
  double worst_pbar = 0.0, worst_auprc = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 6 + rng() % 15;
    auto dm = testing::random_matrix(n, rng, i % 2 ? 6 : 0);
    auto labels = testing::random_labels(n, 2 + static_cast<int>(rng() % 3), rng);
    const auto r = pbar(dm, labels);
    double mean = 0.0;
    std::size_t used = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (std::isnan(r.per_graph[g])) continue;
      mean += testing::auroc_for(dm, labels, g);
      ++used;
    }
    worst_pbar = std::max(worst_pbar, std::abs(r.value - mean / static_cast<double>(used)));
  }
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 6 + rng() % 10;
    auto dm = testing::random_matrix(n, rng, i % 3 == 0 ? 4 : 0);
    auto labels = testing::random_labels(n, 2 + static_cast<int>(rng() % 2), rng);
    worst_auprc = std::max(worst_auprc, std::abs(auprc(dm, labels) - testing::auprc_reference(dm, labels)));
  }
  std::vector<std::size_t> id = {0, 1, 2, 3}, rev = {3, 2, 1, 0}, swap = {0, 2, 1, 3};
  const bool taus = kendall_tau(id, id) == 1.0 && kendall_tau(rev, id) == -1.0 && kendall_tau(swap, id) == 2.0 / 3.0;
  return {worst_pbar < kEvalOracleTol && worst_auprc < kEvalOracleTol && taus,
          fmt("max |pbar - AUROC| %.1e, max |auprc - reference| %.1e, tau fixtures %s", worst_pbar, worst_auprc,
              taus ? "exact" : "wrong")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"rg1-g4-pbar", criterion_rg1},
      {"rg23-g4-s-pbar", criterion_rg23},
      {"degree-shape-ordering", criterion_degree_shape},
      {"pseudometric", criterion_pseudometric},
      {"emd-coupling-oracle", criterion_emd_oracle},
      {"emd-star-affine-invariance", criterion_affine},
      {"orbit-oracle", criterion_orbits},
      {"spectra-sanity", criterion_spectra},
      {"time-ordering", criterion_time_order},
      {"subsampling-stability", criterion_subsampling},
      {"eval-oracles", criterion_eval_oracles},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s %2zu %-28s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
