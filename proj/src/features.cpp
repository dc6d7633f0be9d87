#include "netemd/features.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "netemd/ego.hpp"
#include "netemd/errors.hpp"
#include "textio.hpp"

namespace netemd {

namespace {

constexpr FeatureKind kAllKinds[] = {FeatureKind::kDD, FeatureKind::kG3, FeatureKind::kG4,
                                     FeatureKind::kG5, FeatureKind::kE4, FeatureKind::kS};

}  // namespace

std::string_view feature_kind_name(FeatureKind kind) noexcept {
  switch (kind) {
    case FeatureKind::kDD: return "dd";
    case FeatureKind::kG3: return "g3";
    case FeatureKind::kG4: return "g4";
    case FeatureKind::kG5: return "g5";
    case FeatureKind::kE4: return "e4";
    case FeatureKind::kS: return "s";
  }
  return "?";
}

FeatureKind parse_feature_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (FeatureKind k : kAllKinds) {
    if (feature_kind_name(k) == lower) return k;
  }
  throw ParameterError("unknown feature set '" + std::string(name) + "' (expected dd, g3, g4, g5, e4 or s)");
}

std::size_t feature_count(FeatureKind kind) noexcept {
  switch (kind) {
    case FeatureKind::kDD: return 1;
    case FeatureKind::kG3: return 4;
    case FeatureKind::kG4: return 15;
    case FeatureKind::kG5: return 73;
    case FeatureKind::kE4: return 9;
    case FeatureKind::kS: return 2;
  }
  return 0;
}

std::size_t GraphFeatures::node_count() const noexcept {
  return kind == FeatureKind::kS ? spectrum.laplacian.size() : counts.node_count();
}

GraphFeatures compute_features(const Graph& g, FeatureKind kind) {
  GraphFeatures f;
  f.kind = kind;
  switch (kind) {
    case FeatureKind::kDD:
      f.counts = orbit_counts(g, 2);
      break;
    case FeatureKind::kG3:
      f.counts = orbit_counts(g, 3);
      break;
    case FeatureKind::kG4:
      f.counts = orbit_counts(g, 4);
      break;
    case FeatureKind::kG5:
      f.counts = orbit_counts(g, 5);
      break;
    case FeatureKind::kE4:
      f.counts = ego_graphlet_counts(g, 1, 4);
      break;
    case FeatureKind::kS:
      f.spectrum = spectra(g);
      break;
  }
  return f;
}

std::vector<EmpiricalDistribution> feature_distributions(const GraphFeatures& f) {
  std::vector<EmpiricalDistribution> out;
  if (f.kind == FeatureKind::kS) {
    out.push_back(EmpiricalDistribution::from_values(f.spectrum.laplacian));
    out.push_back(EmpiricalDistribution::from_values(f.spectrum.normalized));
    return out;
  }
  for (std::size_t c = 0; c < f.counts.column_count(); ++c) {
    out.push_back(EmpiricalDistribution::histogram(f.counts.column(c)));
  }
  return out;
}

std::vector<EmpiricalDistribution> feature_distributions(const GraphFeatures& f, std::span<const NodeId> sample) {
  if (sample.empty()) throw ParameterError("node sample is empty");
  const std::size_t n = f.node_count();
  for (NodeId v : sample) {
    if (v >= n) throw IndexError("sampled node " + std::to_string(v) + " out of range");
  }
  if (f.kind == FeatureKind::kS) return feature_distributions(f);
  std::vector<EmpiricalDistribution> out;
  std::vector<std::uint64_t> values(sample.size());
  for (std::size_t c = 0; c < f.counts.column_count(); ++c) {
    for (std::size_t i = 0; i < sample.size(); ++i) values[i] = f.counts.at(sample[i], c);
    out.push_back(EmpiricalDistribution::histogram(values));
  }
  return out;
}

std::vector<NodeId> sample_nodes(std::size_t n, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw ParameterError("sample fraction must be in (0, 1]");
  if (n == 0) throw ParameterError("cannot sample from an empty graph");
  const auto k = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n))));
  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), NodeId{0});
  if (k >= n) return all;
  std::vector<NodeId> out;
  out.reserve(k);
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(out), k, rng);
  return out;
}

void write_features(std::ostream& out, const GraphFeatures& f) {
  out << "# features " << feature_kind_name(f.kind) << " nodes=" << f.node_count() << '\n';
  if (f.kind == FeatureKind::kS) {
    out << "laplacian";
    for (double x : f.spectrum.laplacian) out << '\t' << textio::format_double(x);
    out << "\nnormalized";
    for (double x : f.spectrum.normalized) out << '\t' << textio::format_double(x);
    out << '\n';
    return;
  }
  out << "max_size=" << f.counts.max_graphlet_size();
  for (std::size_t c = 0; c < f.counts.column_count(); ++c) out << '\t' << c;
  out << '\n';
  for (std::size_t v = 0; v < f.counts.node_count(); ++v) {
    const auto row = f.counts.row(v);
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << row[c];
    out << '\n';
  }
}

GraphFeatures read_features(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError("empty feature file");
  const auto head = textio::split_fields(line);
  if (head.size() != 4 || head[0] != "#" || head[1] != "features" || head[3].substr(0, 6) != "nodes=") {
    throw ParseError("bad feature file header", line_no);
  }
  GraphFeatures f;
  f.kind = parse_feature_kind(head[2]);
  const auto n = static_cast<std::size_t>(textio::parse_uint(head[3].substr(6), line_no));

  if (f.kind == FeatureKind::kS) {
    for (auto* target : {&f.spectrum.laplacian, &f.spectrum.normalized}) {
      ++line_no;
      if (!std::getline(in, line)) throw ParseError("missing spectrum row", line_no);
      const auto fields = textio::split_fields(line);
      if (fields.size() != n + 1) throw ParseError("spectrum row has wrong length", line_no);
      for (std::size_t i = 1; i < fields.size(); ++i) target->push_back(textio::parse_double(fields[i], line_no));
    }
    return f;
  }

  ++line_no;
  if (!std::getline(in, line)) throw ParseError("missing column header", line_no);
  const auto cols = textio::split_fields(line);
  if (cols.empty() || cols[0].substr(0, 9) != "max_size=") throw ParseError("bad column header", line_no);
  const int max_size = static_cast<int>(textio::parse_uint(cols[0].substr(9), line_no));
  const std::size_t columns = cols.size() - 1;
  if (columns != feature_count(f.kind)) throw ParseError("wrong number of feature columns", line_no);
  f.counts = CountTable(n, columns, max_size);
  for (std::size_t v = 0; v < n; ++v) {
    ++line_no;
    if (!std::getline(in, line)) throw ParseError("missing count row", line_no);
    const auto fields = textio::split_fields(line);
    if (fields.size() != columns) throw ParseError("count row has wrong length", line_no);
    for (std::size_t c = 0; c < columns; ++c) f.counts.at(v, c) = textio::parse_uint(fields[c], line_no);
  }
  return f;
}

FeatureCache::FeatureCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path FeatureCache::path_for(const Graph& g, FeatureKind kind) const {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(g.content_hash()));
  return dir_ / (std::string(hash) + "_" + std::string(feature_kind_name(kind)) + ".tsv");
}

std::optional<GraphFeatures> FeatureCache::load(const Graph& g, FeatureKind kind) const {
  std::ifstream in(path_for(g, kind));
  if (!in) return std::nullopt;
  try {
    GraphFeatures f = read_features(in);
    if (f.kind != kind || f.node_count() != g.node_count()) return std::nullopt;
    return f;
  } catch (const Error&) {
    return std::nullopt;  // unreadable entries are recomputed and overwritten
  }
}

void FeatureCache::store(const Graph& g, const GraphFeatures& f) const {
  textio::write_file_atomic(path_for(g, f.kind), [&](std::ostream& out) { write_features(out, f); });
}

GraphFeatures FeatureCache::get(const Graph& g, FeatureKind kind) const {
  if (auto cached = load(g, kind)) return std::move(*cached);
  GraphFeatures f = compute_features(g, kind);
  store(g, f);
  return f;
}

}  // namespace netemd
