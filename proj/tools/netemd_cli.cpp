#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "netemd/errors.hpp"
#include "netemd/eval.hpp"
#include "netemd/features.hpp"
#include "netemd/generators.hpp"
#include "netemd/graph.hpp"
#include "netemd/netemd.hpp"

namespace fs = std::filesystem;
using namespace netemd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

std::string format_double(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// Canonical "key=value" list describing a run; hashed into the provenance
// header so two outputs with the same header came from the same settings.
class RunConfig {
 public:
  explicit RunConfig(std::string command) { add("command", std::move(command)); }

  void add(const std::string& key, const std::string& value) { items_.emplace_back(key, value); }
  void add(const std::string& key, double value) { add(key, format_double(value)); }
  void add(const std::string& key, std::uint64_t value) { add(key, std::to_string(value)); }

  std::string hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& [k, v] : items_) {
      for (char c : k + "=" + v + ";") {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
      }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  std::string header(std::uint64_t seed) const {
    return "# netemd " NETEMD_VERSION " config=" + hash() + " seed=" + std::to_string(seed) + "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

// Writes to a temporary sibling and renames on success; nothing is left
// behind when fill throws.
void write_output(const fs::path& path, const std::function<void(std::ostream&)>& fill) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".partial";
  try {
    {
      std::ofstream out(tmp, std::ios::binary);
      if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
      fill(out);
      out.flush();
      if (!out) throw IoError("write to " + tmp.string() + " failed");
    }
    fs::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

std::string absolute_string(const fs::path& p) {
  std::error_code ec;
  auto abs = fs::weakly_canonical(p, ec);
  return (ec ? p : abs).generic_string();
}

// Class or time labels for the graphs of a matrix, matched by graph name.
std::vector<std::string> labels_for(const DistanceMatrix& dm, const fs::path& manifest, bool time) {
  std::map<std::string, std::string> by_name;
  for (const auto& e : read_manifest(manifest)) {
    const auto& label = time ? e.time_label : e.class_label;
    if (label) by_name[e.path.stem().string()] = *label;
  }
  std::vector<std::string> out;
  for (const auto& name : dm.labels) {
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      throw ParameterError("manifest has no " + std::string(time ? "time" : "class") + " label for graph '" + name + "'");
    }
    out.push_back(it->second);
  }
  return out;
}

// Graph indices sorted by time label: numerically when every label is a
// number, otherwise as strings. Equal labels keep matrix order.
std::vector<std::size_t> order_by_time(const std::vector<std::string>& times) {
  std::vector<double> numeric(times.size());
  bool all_numeric = true;
  for (std::size_t i = 0; i < times.size() && all_numeric; ++i) {
    const auto& t = times[i];
    auto res = std::from_chars(t.data(), t.data() + t.size(), numeric[i]);
    all_numeric = res.ec == std::errc() && res.ptr == t.data() + t.size();
  }
  std::vector<std::size_t> order(times.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return all_numeric ? numeric[a] < numeric[b] : times[a] < times[b];
  });
  return order;
}

struct ScoreRow {
  std::string metric;
  std::string feature_set;
  std::string dataset;
  double value;
};

void emit_scores(const std::vector<ScoreRow>& rows, const std::string& out, const std::string& header) {
  std::cout << "metric          feature_set  dataset                 value\n";
  for (const auto& r : rows) {
    std::printf("%-15s %-12s %-23s %.6f\n", r.metric.c_str(), r.feature_set.c_str(), r.dataset.c_str(), r.value);
  }
  if (out.empty()) return;
  write_output(out, [&](std::ostream& os) {
    os << header << "metric\tfeature_set\tdataset\tvalue\n";
    for (const auto& r : rows) os << r.metric << '\t' << r.feature_set << '\t' << r.dataset << '\t' << format_double(r.value) << '\n';
  });
}

std::string feature_label(const DistanceMatrix& dm) {
  std::string s(feature_kind_name(dm.feature_set.kind));
  if (dm.feature_set.fraction < 1.0) s += "@" + format_double(dm.feature_set.fraction);
  return s;
}

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> w;
  if (text.empty()) return w;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    double x = 0.0;
    auto res = std::from_chars(item.data(), item.data() + item.size(), x);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size()) throw ParameterError("bad weight '" + item + "'");
    w.push_back(x);
  }
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NetEmd network comparison: generate graphs, extract features, compute distances and scores"};
  app.set_version_flag("--version", NETEMD_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");

  // generate
  auto* gen = app.add_subcommand("generate", "Generate random graphs from a grid file");
  std::string grid_path, gen_out;
  std::size_t reps = 0;
  ModelParams model_params;
  gen->add_option("--grid", grid_path, "Rows: model n k_avg reps seed_base")->required()->check(CLI::ExistingFile);
  gen->add_option("--reps", reps, "Override the reps column");
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--ggd-seed-points", model_params.ggd_seed_points, "Initial points of the geometric gene duplication model");
  gen->add_option("--ggd-radius", model_params.ggd_radius, "Placement radius of the geometric gene duplication model");

  // features
  auto* feat = app.add_subcommand("features", "Compute and cache per-graph features");
  std::string manifest, feature_name = "g4", cache_dir, feat_out;
  feat->add_option("--manifest", manifest, "Dataset manifest")->required()->check(CLI::ExistingFile);
  feat->add_option("--features", feature_name, "dd, g3, g4, g5, e4 or s");
  feat->add_option("--cache", cache_dir, "Cache directory (default: <manifest dir>/.netemd-cache)");
  feat->add_option("--out", feat_out, "Summary table of cached files");

  // distance
  auto* dist = app.add_subcommand("distance", "Pairwise NetEmd distance matrix");
  std::string dist_out, weights_text;
  double fraction = 1.0;
  std::uint64_t seed = 0;
  bool no_cache = false;
  dist->add_option("--manifest", manifest, "Dataset manifest")->required()->check(CLI::ExistingFile);
  dist->add_option("--features", feature_name, "dd, g3, g4, g5, e4 or s");
  dist->add_option("--fraction", fraction, "Fraction of nodes sampled per graph")->check(CLI::Range(0.0, 1.0));
  dist->add_option("--seed", seed, "Seed for node sampling");
  dist->add_option("--cache", cache_dir, "Cache directory (default: <manifest dir>/.netemd-cache)");
  dist->add_flag("--no-cache", no_cache, "Do not read or write cached features");
  dist->add_option("--weights", weights_text, "Comma-separated per-feature weights");
  dist->add_option("--out", dist_out, "Output matrix")->required();

  // kernel
  auto* kern = app.add_subcommand("kernel", "Gaussian kernel exp(-alpha d^2) of a distance matrix");
  std::string matrix_path, kern_out;
  double alpha = 0.0, alpha_min = 0.0, alpha_max = 0.0;
  std::size_t alpha_count = 0;
  kern->add_option("--matrix", matrix_path, "Distance matrix")->required()->check(CLI::ExistingFile);
  auto* alpha_opt = kern->add_option("--alpha", alpha, "Kernel parameter");
  auto* sweep_opt = kern->add_option("--alpha-min", alpha_min, "Smallest alpha of a log-spaced sweep");
  kern->add_option("--alpha-max", alpha_max, "Largest alpha of the sweep")->needs(sweep_opt);
  kern->add_option("--alpha-count", alpha_count, "Number of sweep values")->needs(sweep_opt);
  alpha_opt->excludes(sweep_opt);
  kern->add_option("--out", kern_out, "Output file (--alpha) or directory (sweep)")->required();

  // evaluations
  std::string eval_out;
  std::size_t k = 1;
  auto add_eval = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--matrix", matrix_path, "Distance matrix")->required()->check(CLI::ExistingFile);
    sub->add_option("--manifest", manifest, "Manifest with labels")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", eval_out, "Machine-readable score rows");
    return sub;
  };
  auto* ev_pbar = add_eval("eval-pbar", "Mean probability that classmates are closer than other graphs");
  auto* ev_auprc = add_eval("eval-auprc", "Area under the precision-recall curve over graph pairs");
  auto* ev_time = add_eval("eval-timeorder", "Recover the time order from distances, Kendall's tau");
  auto* ev_knn = add_eval("eval-knn", "Leave-one-out k-nearest-neighbour accuracy");
  ev_knn->add_option("--k", k, "Neighbours (odd)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      RunConfig cfg("generate");
      cfg.add("grid", absolute_string(grid_path));
      cfg.add("reps", static_cast<std::uint64_t>(reps));
      cfg.add("ggd_seed_points", static_cast<std::uint64_t>(model_params.ggd_seed_points));
      cfg.add("ggd_radius", model_params.ggd_radius);
      const auto grid = read_grid(grid_path);
      std::optional<std::size_t> reps_override;
      if (reps > 0) reps_override = reps;
      const std::uint64_t first_seed = grid.empty() ? 0 : grid.front().seed_base;
      const GraphDataset ds = gen_suite(grid, reps_override, threads, model_params);
      write_dataset(gen_out, ds, cfg.header(first_seed));
      std::cout << "wrote " << ds.size() << " graphs to " << gen_out << "\n";
      return kExitOk;
    }

    const fs::path default_cache = manifest.empty() ? fs::path() : fs::path(manifest).parent_path() / ".netemd-cache";

    if (feat->parsed()) {
      const FeatureKind kind = parse_feature_kind(feature_name);
      const FeatureCache cache(cache_dir.empty() ? default_cache : fs::path(cache_dir));
      const GraphDataset ds = load_dataset(manifest);
      const auto names = ds.names();
      std::vector<std::string> files(ds.size());
      for (std::size_t i = 0; i < ds.size(); ++i) {
        cache.get(ds.graphs[i], kind);
        files[i] = cache.path_for(ds.graphs[i], kind).filename().string();
      }
      RunConfig cfg("features");
      cfg.add("manifest", absolute_string(manifest));
      cfg.add("features", std::string(feature_kind_name(kind)));
      if (!feat_out.empty()) {
        write_output(feat_out, [&](std::ostream& os) {
          os << cfg.header(0) << "graph\tnodes\tedges\tcache_file\n";
          for (std::size_t i = 0; i < ds.size(); ++i) {
            os << names[i] << '\t' << ds.graphs[i].node_count() << '\t' << ds.graphs[i].edge_count() << '\t' << files[i] << '\n';
          }
        });
      }
      std::cout << "cached " << feature_kind_name(kind) << " features for " << ds.size() << " graphs in "
                << cache.directory().string() << "\n";
      return kExitOk;
    }

    if (dist->parsed()) {
      if (!(fraction > 0.0)) throw ParameterError("--fraction must be in (0, 1]");
      DistanceOptions opts;
      opts.features = {parse_feature_kind(feature_name), fraction};
      opts.seed = seed;
      opts.threads = threads;
      opts.weights = parse_weights(weights_text);
      std::optional<FeatureCache> cache;
      if (!no_cache) {
        cache.emplace(cache_dir.empty() ? default_cache : fs::path(cache_dir));
        opts.cache = &*cache;
      }
      RunConfig cfg("distance");
      cfg.add("manifest", absolute_string(manifest));
      cfg.add("features", std::string(feature_kind_name(opts.features.kind)));
      cfg.add("fraction", fraction);
      cfg.add("weights", weights_text);
      const GraphDataset ds = load_dataset(manifest);
      const DistanceMatrix dm = distance_matrix(ds, opts);
      write_output(dist_out, [&](std::ostream& os) {
        os << cfg.header(seed);
        write_distance_matrix(os, dm);
      });
      std::cout << "wrote " << dm.size() << "x" << dm.size() << " matrix to " << dist_out << "\n";
      return kExitOk;
    }

    if (kern->parsed()) {
      const DistanceMatrix dm = read_distance_matrix(matrix_path);
      RunConfig cfg("kernel");
      cfg.add("matrix", absolute_string(matrix_path));
      if (alpha_opt->count() > 0) {
        cfg.add("alpha", alpha);
        const KernelMatrix km = gaussian_kernel(dm, alpha);
        write_output(kern_out, [&](std::ostream& os) {
          os << cfg.header(0);
          write_kernel_matrix(os, km);
        });
        std::cout << "alpha " << format_double(alpha) << ": min eigenvalue " << format_double(km.min_eigenvalue)
                  << (km.psd ? " (psd)" : " (indefinite)") << "\n";
        return kExitOk;
      }
      if (sweep_opt->count() == 0) throw ParameterError("give --alpha or --alpha-min/--alpha-max/--alpha-count");
      if (alpha_count == 0) alpha_count = 1;
      if (alpha_max == 0.0) alpha_max = alpha_min;
      cfg.add("alpha_min", alpha_min);
      cfg.add("alpha_max", alpha_max);
      cfg.add("alpha_count", static_cast<std::uint64_t>(alpha_count));
      const auto alphas = log_grid(alpha_min, alpha_max, alpha_count);
      std::vector<KernelMatrix> kernels;
      for (double a : alphas) kernels.push_back(gaussian_kernel(dm, a));
      fs::create_directories(kern_out);
      std::vector<fs::path> written;
      try {
        for (std::size_t i = 0; i < kernels.size(); ++i) {
          char name[32];
          std::snprintf(name, sizeof name, "kernel_%03zu.tsv", i);
          write_output(fs::path(kern_out) / name, [&](std::ostream& os) {
            os << cfg.header(0);
            write_kernel_matrix(os, kernels[i]);
          });
          written.push_back(fs::path(kern_out) / name);
          std::cout << name << "  alpha " << format_double(kernels[i].alpha) << "  min eigenvalue "
                    << format_double(kernels[i].min_eigenvalue) << (kernels[i].psd ? " (psd)" : " (indefinite)") << "\n";
        }
      } catch (...) {
        std::error_code ec;
        for (const auto& p : written) fs::remove(p, ec);
        throw;
      }
      return kExitOk;
    }

    const DistanceMatrix dm = read_distance_matrix(matrix_path);
    const std::string dataset = fs::path(matrix_path).stem().string();
    RunConfig cfg("eval");
    cfg.add("matrix", absolute_string(matrix_path));
    cfg.add("manifest", absolute_string(manifest));
    std::vector<ScoreRow> rows;

    if (ev_pbar->parsed()) {
      const auto labels = labels_for(dm, manifest, false);
      const PbarResult r = pbar(dm, labels);
      if (r.excluded > 0) std::cerr << "warning: " << r.excluded << " graph(s) without a classmate were skipped\n";
      rows.push_back({"pbar", feature_label(dm), dataset, r.value});
      cfg.add("metric", std::string("pbar"));
    } else if (ev_auprc->parsed()) {
      const auto labels = labels_for(dm, manifest, false);
      rows.push_back({"auprc", feature_label(dm), dataset, auprc(dm, labels)});
      cfg.add("metric", std::string("auprc"));
    } else if (ev_time->parsed()) {
      const auto times = labels_for(dm, manifest, true);
      const auto order = order_by_time(times);
      const RankingResult r = time_rankings(dm, order);
      const char* names[4] = {"tau_first_alg1", "tau_first_alg2", "tau_last_alg1", "tau_last_alg2"};
      for (int i = 0; i < 4; ++i) rows.push_back({names[i], feature_label(dm), dataset, r.taus[i]});
      rows.push_back({"tau_best", feature_label(dm), dataset, r.best_tau});
      cfg.add("metric", std::string("timeorder"));
    } else if (ev_knn->parsed()) {
      const auto labels = labels_for(dm, manifest, false);
      rows.push_back({"knn_k" + std::to_string(k), feature_label(dm), dataset, knn_accuracy(dm, labels, k)});
      cfg.add("metric", std::string("knn"));
      cfg.add("k", static_cast<std::uint64_t>(k));
    }
    emit_scores(rows, eval_out, cfg.header(0));
    return kExitOk;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
