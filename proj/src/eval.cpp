#include "netemd/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "netemd/errors.hpp"

namespace netemd {

namespace {

void check_labels(const DistanceMatrix& dm, std::span<const std::string> labels) {
  if (labels.size() != dm.size()) throw ParameterError("one class label per graph expected");
  if (std::set<std::string>(labels.begin(), labels.end()).size() < 2) {
    throw ParameterError("at least two classes are required");
  }
}

std::vector<std::size_t> greedy_order(const DistanceMatrix& dm, std::size_t anchor, bool average) {
  const std::size_t n = dm.size();
  std::vector<std::size_t> order{anchor};
  std::vector<bool> used(n, false);
  used[anchor] = true;
  std::vector<double> sum(n, 0.0);  // distance to the ranked set, summed
  for (std::size_t v = 0; v < n; ++v) sum[v] = dm.at(anchor, v);
  while (order.size() < n) {
    const std::size_t last = order.back();
    std::size_t best = n;
    double best_score = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      // The average has the same argmin as the sum.
      const double score = average ? sum[v] : dm.at(last, v);
      if (best == n || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (std::size_t v = 0; v < n; ++v) sum[v] += dm.at(best, v);
  }
  return order;
}

}  // namespace

PbarResult pbar(const DistanceMatrix& dm, std::span<const std::string> labels) {
  check_labels(dm, labels);
  const std::size_t n = dm.size();
  PbarResult r;
  r.per_graph.assign(n, std::numeric_limits<double>::quiet_NaN());
  double total = 0.0;
  std::size_t scored = 0;
  std::vector<double> other;
  for (std::size_t g = 0; g < n; ++g) {
    other.clear();
    std::vector<double> same;
    for (std::size_t h = 0; h < n; ++h) {
      if (h == g) continue;
      (labels[h] == labels[g] ? same : other).push_back(dm.at(g, h));
    }
    if (same.empty()) {
      ++r.excluded;
      continue;
    }
    std::sort(other.begin(), other.end());
    double wins = 0.0;
    for (double d : same) {
      const auto lo = std::lower_bound(other.begin(), other.end(), d);
      const auto hi = std::upper_bound(lo, other.end(), d);
      wins += static_cast<double>(other.end() - hi) + 0.5 * static_cast<double>(hi - lo);
    }
    r.per_graph[g] = wins / (static_cast<double>(same.size()) * static_cast<double>(other.size()));
    total += r.per_graph[g];
    ++scored;
  }
  if (scored == 0) throw ParameterError("no class has two or more members");
  r.value = total / static_cast<double>(scored);
  return r;
}

double auprc(const DistanceMatrix& dm, std::span<const std::string> labels) {
  check_labels(dm, labels);
  const std::size_t n = dm.size();
  std::vector<std::pair<double, bool>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  std::size_t positives = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = labels[i] == labels[j];
      positives += same ? 1 : 0;
      pairs.emplace_back(dm.at(i, j), same);
    }
  }
  if (positives == 0) throw ParameterError("AUPRC is undefined without same-class pairs");
  std::sort(pairs.begin(), pairs.end());
  double area = 0.0;
  double prev_recall = 0.0;
  double prev_precision = -1.0;
  std::size_t tp = 0, fp = 0;
  for (std::size_t k = 0; k < pairs.size();) {
    const double threshold = pairs[k].first;
    for (; k < pairs.size() && pairs[k].first == threshold; ++k) (pairs[k].second ? tp : fp) += 1;
    const double recall = static_cast<double>(tp) / static_cast<double>(positives);
    const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    if (prev_precision < 0.0) prev_precision = precision;
    area += (recall - prev_recall) * 0.5 * (precision + prev_precision);
    prev_recall = recall;
    prev_precision = precision;
  }
  return area;
}

double kendall_tau(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw ParameterError("orderings differ in length");
  if (n < 2) throw ParameterError("Kendall's tau needs at least two items");
  std::map<std::size_t, std::size_t> pos_b;
  for (std::size_t i = 0; i < n; ++i) pos_b[b[i]] = i;
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = pos_b.find(a[i]);
    if (it == pos_b.end() || pos_b.size() != n) throw ParameterError("orderings are not permutations of one set");
    rank[i] = it->second;
  }
  long long concordant_minus_discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) concordant_minus_discordant += rank[i] < rank[j] ? 1 : -1;
  }
  return static_cast<double>(concordant_minus_discordant) / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

RankingResult time_rankings(const DistanceMatrix& dm, std::span<const std::size_t> true_order) {
  const std::size_t n = dm.size();
  if (n < 3) throw ParameterError("time ordering needs at least three graphs");
  if (true_order.size() != n) throw ParameterError("true order must list every graph once");
  std::vector<bool> seen(n, false);
  for (std::size_t v : true_order) {
    if (v >= n || seen[v]) throw ParameterError("true order must be a permutation of graph indices");
    seen[v] = true;
  }
  RankingResult r;
  for (int anchor = 0; anchor < 2; ++anchor) {
    const std::size_t start = anchor == 0 ? true_order.front() : true_order.back();
    for (int alg = 0; alg < 2; ++alg) {
      auto order = greedy_order(dm, start, alg == 1);
      if (anchor == 1) std::reverse(order.begin(), order.end());
      const int idx = anchor * 2 + alg;
      r.taus[idx] = kendall_tau(order, true_order);
      r.orderings[idx] = std::move(order);
    }
  }
  r.best_tau = *std::max_element(r.taus.begin(), r.taus.end());
  return r;
}

double knn_accuracy(const DistanceMatrix& dm, std::span<const std::string> labels, std::size_t k) {
  const std::size_t n = dm.size();
  if (labels.size() != n) throw ParameterError("one class label per graph expected");
  if (k < 1 || k >= n) throw ParameterError("k must be in [1, n)");
  std::size_t correct = 0;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i) {
    others.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) others.push_back(j);
    }
    std::stable_sort(others.begin(), others.end(),
                     [&](std::size_t a, std::size_t b) { return dm.at(i, a) < dm.at(i, b); });
    std::map<std::string, std::size_t> votes;
    for (std::size_t t = 0; t < k; ++t) ++votes[labels[others[t]]];
    std::size_t top = 0;
    for (const auto& [label, c] : votes) top = std::max(top, c);
    std::string predicted;
    for (std::size_t t = 0; t < k; ++t) {
      if (votes[labels[others[t]]] == top) {
        predicted = labels[others[t]];
        break;
      }
    }
    correct += predicted == labels[i] ? 1 : 0;
  }
  return static_cast<double>(correct) / static_cast<double>(n);
}

}  // namespace netemd
