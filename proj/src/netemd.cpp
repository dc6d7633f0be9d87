#include "netemd/netemd.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <numeric>
#include <string>

#include "netemd/emd.hpp"
#include "netemd/errors.hpp"
#include "netemd/parallel.hpp"
#include "textio.hpp"

namespace netemd {

namespace {

template <class E>
[[noreturn]] void rethrow_as(const E& e, const std::string& label) {
  throw E(label + ": " + e.what());
}

// Runs fn, prefixing any library error with the graph label.
template <class Fn>
auto annotate(const std::string& label, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(label + ": " + e.what());
  } catch (const IndexError& e) {
    rethrow_as(e, label);
  } catch (const ParameterError& e) {
    rethrow_as(e, label);
  } catch (const CalibrationError& e) {
    rethrow_as(e, label);
  } catch (const NumericalError& e) {
    rethrow_as(e, label);
  } catch (const IoError& e) {
    rethrow_as(e, label);
  }
}

void check_label(const std::string& label) {
  if (label.empty() || label.find_first_of(" \t\r\n") != std::string::npos) {
    throw ParameterError("matrix label '" + label + "' must be non-empty and free of whitespace");
  }
}

}  // namespace

double netemd_from_distributions(std::span<const EmpiricalDistribution> a, std::span<const EmpiricalDistribution> b,
                                 std::span<const double> weights) {
  if (a.size() != b.size() || a.empty()) throw ParameterError("feature lists differ in length or are empty");
  if (!weights.empty() && weights.size() != a.size()) throw ParameterError("one weight per feature expected");
  double total = 0.0;
  double weight_sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double w = weights.empty() ? 1.0 : weights[j];
    if (!(w >= 0.0)) throw ParameterError("feature weights must be non-negative");
    if (w == 0.0) continue;
    total += w * emd_star(a[j], b[j]);
    weight_sum += w;
  }
  if (!(weight_sum > 0.0)) throw ParameterError("feature weights sum to zero");
  return total / weight_sum;
}

double netemd_single(const Graph& a, const Graph& b, FeatureKind kind, std::size_t index) {
  if (index >= feature_count(kind)) throw IndexError("feature index out of range");
  const auto da = feature_distributions(compute_features(a, kind));
  const auto db = feature_distributions(compute_features(b, kind));
  return emd_star(da[index], db[index]);
}

double netemd_set(const Graph& a, const Graph& b, FeatureSetId fs, std::span<const double> weights) {
  const auto da = feature_distributions(compute_features(a, fs.kind));
  const auto db = feature_distributions(compute_features(b, fs.kind));
  return netemd_from_distributions(da, db, weights);
}

DistanceMatrix distance_matrix(const GraphDataset& ds, const DistanceOptions& opts) {
  if (ds.size() == 0) throw ParameterError("dataset is empty");
  const FeatureSetId fs = opts.features;
  if (!(fs.fraction > 0.0 && fs.fraction <= 1.0)) throw ParameterError("sample fraction must be in (0, 1]");
  const auto names = ds.names();
  std::vector<std::vector<EmpiricalDistribution>> dists(ds.size());
  parallel_for(ds.size(), opts.threads, [&](std::size_t i) {
    dists[i] = annotate(names[i], [&] {
      const Graph& g = ds.graphs[i];
      const GraphFeatures f = opts.cache ? opts.cache->get(g, fs.kind) : compute_features(g, fs.kind);
      if (fs.fraction < 1.0) {
        const auto sample = sample_nodes(g.node_count(), fs.fraction, opts.seed + i);
        return feature_distributions(f, sample);
      }
      return feature_distributions(f);
    });
  });
  DistanceMatrix dm = distance_matrix(dists, names, opts.threads, opts.weights);
  dm.feature_set = fs;
  return dm;
}

DistanceMatrix distance_matrix(const std::vector<std::vector<EmpiricalDistribution>>& dists,
                               std::vector<std::string> labels, std::size_t threads, std::span<const double> weights) {
  const std::size_t n = dists.size();
  if (labels.size() != n) throw ParameterError("one label per graph expected");
  DistanceMatrix dm;
  dm.labels = std::move(labels);
  dm.values.assign(n * n, 0.0);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> out(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    out[k] = netemd_from_distributions(dists[pairs[k].first], dists[pairs[k].second], weights);
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    dm.at(pairs[k].first, pairs[k].second) = out[k];
    dm.at(pairs[k].second, pairs[k].first) = out[k];
  }
  return dm;
}

KernelMatrix gaussian_kernel(const DistanceMatrix& dm, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("kernel alpha must be positive");
  const std::size_t n = dm.size();
  KernelMatrix km;
  km.labels = dm.labels;
  km.alpha = alpha;
  km.values.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) km.values[k] = std::exp(-alpha * dm.values[k] * dm.values[k]);
  if (n > 0) {
    const Eigen::Map<const Eigen::MatrixXd> m(km.values.data(), static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("kernel eigensolver did not converge");
    km.min_eigenvalue = solver.eigenvalues().minCoeff();
    km.psd = km.min_eigenvalue >= -1e-9 * static_cast<double>(n);
  }
  return km;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo) || count == 0) throw ParameterError("log grid needs 0 < lo <= hi and count >= 1");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  out.back() = hi;
  return out;
}

void write_matrix(std::ostream& out, std::span<const std::string> labels, std::span<const double> values) {
  const std::size_t n = labels.size();
  if (values.size() != n * n) throw ParameterError("matrix size does not match label count");
  out << "graph";
  for (const auto& l : labels) {
    check_label(l);
    out << '\t' << l;
  }
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << labels[i];
    for (std::size_t j = 0; j < n; ++j) out << '\t' << textio::format_double(values[i * n + j]);
    out << '\n';
  }
}

void write_distance_matrix(std::ostream& out, const DistanceMatrix& dm) {
  out << "# feature_set " << feature_kind_name(dm.feature_set.kind) << " fraction "
      << textio::format_double(dm.feature_set.fraction) << '\n';
  write_matrix(out, dm.labels, dm.values);
}

void write_kernel_matrix(std::ostream& out, const KernelMatrix& km) {
  out << "# alpha " << textio::format_double(km.alpha) << " min_eigenvalue " << textio::format_double(km.min_eigenvalue)
      << " psd " << (km.psd ? "yes" : "no") << '\n';
  write_matrix(out, km.labels, km.values);
}

DistanceMatrix read_distance_matrix(std::istream& in) {
  DistanceMatrix dm;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto f = textio::split_fields(line);
      if (f.size() >= 3 && f[1] == "feature_set") {
        dm.feature_set.kind = parse_feature_kind(f[2]);
        if (f.size() >= 5 && f[3] == "fraction") dm.feature_set.fraction = textio::parse_double(f[4], line_no);
      }
      continue;
    }
    const auto f = textio::split_fields(line);
    if (!have_header) {
      if (f.empty() || f[0] != "graph") throw ParseError("expected header row starting with 'graph'", line_no);
      for (std::size_t i = 1; i < f.size(); ++i) dm.labels.emplace_back(f[i]);
      dm.values.assign(dm.labels.size() * dm.labels.size(), 0.0);
      have_header = true;
      continue;
    }
    const std::size_t n = dm.labels.size();
    if (row >= n) throw ParseError("more rows than labels", line_no);
    if (f.size() != n + 1) throw ParseError("row has " + std::to_string(f.size()) + " fields, expected " +
                                                std::to_string(n + 1), line_no);
    if (f[0] != dm.labels[row]) throw ParseError("row label does not match header", line_no);
    for (std::size_t j = 0; j < n; ++j) dm.at(row, j) = textio::parse_double(f[j + 1], line_no);
    ++row;
  }
  if (!have_header) throw ParseError("matrix file has no header row");
  if (row != dm.labels.size()) throw ParseError("matrix has fewer rows than labels");
  for (std::size_t i = 0; i < dm.size(); ++i) {
    if (dm.at(i, i) != 0.0) throw ParseError("distance matrix has a nonzero diagonal entry for " + dm.labels[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (dm.at(i, j) != dm.at(j, i) || dm.at(i, j) < 0.0) {
        throw ParseError("distance matrix is not symmetric and non-negative at (" + dm.labels[i] + ", " +
                         dm.labels[j] + ")");
      }
    }
  }
  return dm;
}

DistanceMatrix read_distance_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix " + path.string());
  try {
    return read_distance_matrix(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace netemd
