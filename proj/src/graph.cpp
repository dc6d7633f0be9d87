#include "netemd/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "netemd/errors.hpp"

namespace netemd {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Graph::Graph(std::size_t node_count, std::span<const Edge> edges, std::string name)
    : name_(std::move(name)) {
  std::vector<std::size_t> degree(node_count, 0);
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") out of range for " + std::to_string(node_count) + " nodes");
    }
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }

  offsets_.assign(node_count + 1, 0);
  for (std::size_t i = 0; i < node_count; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  std::vector<NodeId> raw(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  // Sort and dedupe each row, then compact.
  std::vector<std::size_t> compact(node_count + 1, 0);
  std::size_t out = 0;
  for (std::size_t i = 0; i < node_count; ++i) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    compact[i] = out;
    for (auto it = first; it != last; ++it) raw[out++] = *it;
  }
  compact[node_count] = out;
  raw.resize(out);
  offsets_ = std::move(compact);
  targets_ = std::move(raw);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < node_count(); ++v) best = std::max(best, degree(static_cast<NodeId>(v)));
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count());
  for (std::size_t u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(static_cast<NodeId>(u))) {
      if (u < v) result.emplace_back(static_cast<NodeId>(u), v);
    }
  }
  return result;
}

std::uint64_t Graph::content_hash() const noexcept {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, node_count());
  for (std::size_t u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(static_cast<NodeId>(u))) {
      if (u < v) {
        fnv_mix(h, u);
        fnv_mix(h, v);
      }
    }
  }
  return h;
}

std::vector<std::string> GraphDataset::names() const {
  std::vector<std::string> result;
  result.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    result.push_back(graphs[i].name().empty() ? "g" + std::to_string(i) : graphs[i].name());
  }
  return result;
}

void GraphDataset::validate() const {
  if (!class_labels.empty() && class_labels.size() != graphs.size()) {
    throw ParameterError("class label count does not match graph count");
  }
  if (!time_labels.empty() && time_labels.size() != graphs.size()) {
    throw ParameterError("time label count does not match graph count");
  }
}

Graph parse_edge_list(std::istream& in, std::string name) {
  std::unordered_map<std::string, NodeId> index;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& token) {
    auto [it, inserted] = index.try_emplace(token, static_cast<NodeId>(index.size()));
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      constexpr std::string_view kNodes = "#nodes:";
      if (body.starts_with(kNodes)) {
        std::istringstream tokens{std::string(body.substr(kNodes.size()))};
        std::string token;
        while (tokens >> token) intern(token);
      }
      continue;
    }
    std::istringstream tokens{std::string(body)};
    std::string a, b, extra;
    if (!(tokens >> a >> b)) throw ParseError("expected two node tokens", line_no);
    if (tokens >> extra) throw ParseError("unexpected third token '" + extra + "'", line_no);
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw ParseError("read failure");
  return Graph(index.size(), edges, std::move(name));
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list " + path.string());
  try {
    return parse_edge_list(in, path.stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "#nodes:";
  for (std::size_t v = 0; v < g.node_count(); ++v) out << ' ' << v;
  out << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_edge_list(out, g);
  if (!out) throw IoError("write failure on " + path.string());
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::unordered_map<NodeId, NodeId> local;
  local.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] >= g.node_count()) throw ParameterError("node index out of range");
    if (!local.try_emplace(nodes[i], static_cast<NodeId>(i)).second) {
      throw ParameterError("duplicate node in induced subgraph request");
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (NodeId w : g.neighbors(nodes[i])) {
      auto it = local.find(w);
      if (it != local.end() && i < it->second) edges.emplace_back(static_cast<NodeId>(i), it->second);
    }
  }
  return Graph(nodes.size(), edges);
}

std::vector<NodeId> k_hop_nodes(const Graph& g, NodeId v, std::size_t k) {
  if (v >= g.node_count()) {
    throw IndexError("node " + std::to_string(v) + " out of range for " +
                         std::to_string(g.node_count()) + " nodes");
  }
  std::unordered_map<NodeId, std::size_t> dist{{v, 0}};
  std::deque<NodeId> queue{v};
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    const std::size_t du = dist[u];
    if (du == k) continue;
    for (NodeId w : g.neighbors(u)) {
      if (dist.try_emplace(w, du + 1).second) queue.push_back(w);
    }
  }
  std::vector<NodeId> result;
  result.reserve(dist.size());
  for (const auto& entry : dist) result.push_back(entry.first);
  std::sort(result.begin(), result.end());
  return result;
}

Graph ego_network(const Graph& g, NodeId v, std::size_t k) {
  if (k < 1) throw ParameterError("ego network radius must be at least 1");
  auto nodes = k_hop_nodes(g, v, k);
  // Put the centre first.
  std::stable_partition(nodes.begin(), nodes.end(), [v](NodeId u) { return u == v; });
  return induced_subgraph(g, nodes);
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> result(g.node_count());
  for (std::size_t v = 0; v < result.size(); ++v) result[v] = g.degree(static_cast<NodeId>(v));
  return result;
}

GraphSummary summary_stats(const Graph& g) {
  GraphSummary s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  const double n = static_cast<double>(s.nodes);
  const double e = static_cast<double>(s.edges);
  if (s.nodes >= 2) s.density = 2.0 * e / (n * (n - 1.0));
  if (s.nodes >= 1) s.avg_degree = 2.0 * e / n;
  return s;
}

Graph relabel(const Graph& g, std::span<const NodeId> perm) {
  if (perm.size() != g.node_count()) throw ParameterError("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.node_count(), edges, g.name());
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  const auto base = path.parent_path();
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream tokens{std::string(body)};
    std::vector<std::string> cols;
    for (std::string tok; tokens >> tok;) cols.push_back(tok);
    if (entries.empty() && cols.front() == "path") continue;
    if (cols.size() > 3) throw ParseError(path.string() + ": expected at most 3 columns", line_no);
    ManifestEntry entry;
    entry.path = cols[0];
    if (entry.path.is_relative()) entry.path = base / entry.path;
    if (cols.size() > 1 && cols[1] != "-") entry.class_label = cols[1];
    if (cols.size() > 2 && cols[2] != "-") entry.time_label = cols[2];
    entries.push_back(std::move(entry));
  }
  return entries;
}

void write_manifest(std::ostream& out, std::span<const ManifestEntry> entries) {
  out << "path\tclass_label\ttime_label\n";
  for (const auto& e : entries) {
    out << e.path.generic_string() << '\t' << e.class_label.value_or("-") << '\t'
        << e.time_label.value_or("-") << '\n';
  }
}

GraphDataset load_dataset(const std::filesystem::path& manifest) {
  const auto entries = read_manifest(manifest);
  GraphDataset ds;
  const bool all_class = std::all_of(entries.begin(), entries.end(),
                                     [](const ManifestEntry& e) { return e.class_label.has_value(); });
  const bool all_time = std::all_of(entries.begin(), entries.end(),
                                    [](const ManifestEntry& e) { return e.time_label.has_value(); });
  for (const auto& e : entries) {
    ds.graphs.push_back(load_edge_list(e.path));
    if (all_class && !entries.empty()) ds.class_labels.push_back(*e.class_label);
    if (all_time && !entries.empty()) ds.time_labels.push_back(*e.time_label);
  }
  return ds;
}

}  // namespace netemd
