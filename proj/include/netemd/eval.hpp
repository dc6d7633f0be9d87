#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "netemd/netemd.hpp"

namespace netemd {

struct PbarResult {
  double value = 0.0;              // mean of P(G) over scored graphs
  std::vector<double> per_graph;   // NaN for graphs without a classmate
  std::size_t excluded = 0;        // graphs alone in their class
};

/// For each graph G, the probability that a random classmate is closer to G
/// than a random graph of another class (ties count one half), averaged over
/// graphs. Requires at least two classes.
PbarResult pbar(const DistanceMatrix& dm, std::span<const std::string> labels);

/// Area under the precision-recall curve of "pair is same class iff
/// d <= threshold", over every distinct distance as threshold. Points are
/// joined linearly in recall, starting from recall 0 at the first precision.
double auprc(const DistanceMatrix& dm, std::span<const std::string> labels);

/// Orderings indexed as anchor * 2 + algorithm: 0 = first/nearest-to-last,
/// 1 = first/nearest-on-average, 2 = last/nearest-to-last,
/// 3 = last/nearest-on-average.
struct RankingResult {
  std::array<std::vector<std::size_t>, 4> orderings;
  std::array<double, 4> taus{};
  double best_tau = -1.0;
};

/// Greedy reconstructions of a time series from its distance matrix.
/// `true_order` lists graph indices from earliest to latest.
RankingResult time_rankings(const DistanceMatrix& dm, std::span<const std::size_t> true_order);

/// Kendall's tau-a between two orderings of the same items.
double kendall_tau(std::span<const std::size_t> a, std::span<const std::size_t> b);

/// Leave-one-out k-nearest-neighbour accuracy. Vote ties go to the tied label
/// seen first in order of distance.
double knn_accuracy(const DistanceMatrix& dm, std::span<const std::string> labels, std::size_t k);

}  // namespace netemd
