#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "netemd/distribution.hpp"
#include "netemd/graph.hpp"

namespace netemd::testing {

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, edges);
}

/// Random permutation of 0..n-1.
inline std::vector<NodeId> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<NodeId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<NodeId>(i);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Up to `max_atoms` point masses at random locations in [-5, 5] with random
/// weights.
inline EmpiricalDistribution random_points(std::mt19937_64& rng, std::size_t max_atoms) {
  std::uniform_int_distribution<std::size_t> count(1, max_atoms);
  std::uniform_real_distribution<double> loc(-5.0, 5.0);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  const std::size_t k = count(rng);
  std::vector<double> xs(k), ws(k);
  for (std::size_t i = 0; i < k; ++i) {
    xs[i] = loc(rng);
    ws[i] = weight(rng);
  }
  return EmpiricalDistribution::from_weighted(xs, ws);
}

/// Integer histogram of `n` random values from a skewed law.
inline EmpiricalDistribution random_histogram(std::mt19937_64& rng, std::size_t n) {
  std::geometric_distribution<std::uint64_t> law(std::uniform_real_distribution<double>(0.05, 0.6)(rng));
  std::vector<std::uint64_t> values(n);
  for (auto& v : values) v = law(rng);
  return EmpiricalDistribution::histogram(values);
}

}  // namespace netemd::testing
