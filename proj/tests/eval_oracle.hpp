#pragma once

// Slow reference implementations of the evaluation scores, written directly
// from their definitions.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "netemd/netemd.hpp"

namespace netemd::testing {

inline DistanceMatrix make_matrix(std::size_t n, const std::vector<double>& upper) {
  DistanceMatrix dm;
  for (std::size_t i = 0; i < n; ++i) dm.labels.push_back("g" + std::to_string(i));
  dm.values.assign(n * n, 0.0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) dm.at(i, j) = dm.at(j, i) = upper[k++];
  }
  return dm;
}

inline DistanceMatrix random_matrix(std::size_t n, std::mt19937_64& rng, int distinct_values = 0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> upper(n * (n - 1) / 2);
  for (auto& x : upper) {
    x = u(rng);
    if (distinct_values > 0) x = std::floor(x * distinct_values) / distinct_values + 0.01;
  }
  return make_matrix(n, upper);
}

inline std::vector<std::string> random_labels(std::size_t n, int classes, std::mt19937_64& rng) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::string(1, static_cast<char>('A' + i % classes));
  std::shuffle(labels.begin(), labels.end(), rng);
  return labels;
}

/// Area under the ROC curve of ranking the other graphs by distance to `g`,
/// classmates being positives, traced threshold by threshold with trapezoids.
inline double auroc_for(const DistanceMatrix& dm, const std::vector<std::string>& labels, std::size_t g) {
  std::set<double> thresholds;
  double pos = 0, neg = 0;
  for (std::size_t j = 0; j < dm.size(); ++j) {
    if (j == g) continue;
    thresholds.insert(dm.at(g, j));
    (labels[j] == labels[g] ? pos : neg) += 1;
  }
  double area = 0.0, prev_tpr = 0.0, prev_fpr = 0.0;
  for (double t : thresholds) {
    double tp = 0, fp = 0;
    for (std::size_t j = 0; j < dm.size(); ++j) {
      if (j == g || dm.at(g, j) > t) continue;
      (labels[j] == labels[g] ? tp : fp) += 1;
    }
    const double tpr = tp / pos, fpr = fp / neg;
    area += (fpr - prev_fpr) * (tpr + prev_tpr) / 2.0;
    prev_tpr = tpr;
    prev_fpr = fpr;
  }
  return area;
}

/// Literal precision-recall sweep: every distinct distance is a threshold and
/// every pair is re-examined for each one.
inline double auprc_reference(const DistanceMatrix& dm, const std::vector<std::string>& labels) {
  const std::size_t n = dm.size();
  std::set<double> thresholds;
  double positives = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      thresholds.insert(dm.at(i, j));
      positives += labels[i] == labels[j];
    }
  }
  double area = 0.0, prev_recall = 0.0, prev_precision = -1.0;
  for (double t : thresholds) {
    double tp = 0, fp = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (dm.at(i, j) <= t) (labels[i] == labels[j] ? tp : fp) += 1;
      }
    }
    const double precision = tp / (tp + fp);
    const double recall = tp / positives;
    if (prev_precision < 0) prev_precision = precision;
    area += (recall - prev_recall) * (precision + prev_precision) / 2.0;
    prev_recall = recall;
    prev_precision = precision;
  }
  return area;
}

}  // namespace netemd::testing
