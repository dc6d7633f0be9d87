#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netemd {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph in compressed sparse row form.
///
/// Neighbor lists are sorted and duplicate free; self-loops are never stored.
/// Instances are immutable once constructed and may be shared between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `node_count` nodes. Self-loops and repeated edges
  /// (in either orientation) are dropped. Throws ParameterError when an
  /// endpoint is out of range.
  Graph(std::size_t node_count, std::span<const Edge> edges, std::string name = {});

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;

  /// Position of v's first neighbour in the flat neighbour array; entry i of
  /// neighbors(v) lives at slot row_offset(v) + i. Useful for per-edge arrays.
  std::size_t row_offset(NodeId v) const noexcept { return offsets_[v]; }
  /// Total neighbour slots (twice the edge count).
  std::size_t slot_count() const noexcept { return targets_.size(); }

  bool has_edge(NodeId u, NodeId v) const noexcept;

  /// Each edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Stable 64-bit hash of node count and edge set (not of the name).
  std::uint64_t content_hash() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::string name_;
};

struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double density = 0.0;
  double avg_degree = 0.0;
};

/// Ordered collection of graphs with optional per-graph labels.
struct GraphDataset {
  std::vector<Graph> graphs;
  std::vector<std::string> class_labels;  // empty or one per graph
  std::vector<std::string> time_labels;   // empty or one per graph

  std::size_t size() const noexcept { return graphs.size(); }
  bool has_class_labels() const noexcept { return !class_labels.empty(); }
  bool has_time_labels() const noexcept { return !time_labels.empty(); }

  /// Graph names, falling back to "g<index>" for unnamed graphs.
  std::vector<std::string> names() const;

  /// Throws ParameterError when a label list has the wrong length.
  void validate() const;
};

/// Parses an edge list: two whitespace-separated tokens per line, '#' starts a
/// comment. A `#nodes:` line lists tokens that are registered up front, which
/// is how isolated nodes are declared. Tokens are indexed in first-appearance
/// order.
Graph parse_edge_list(std::istream& in, std::string name = {});
Graph load_edge_list(const std::filesystem::path& path);

/// Writes `#nodes:` followed by one "u v" line per edge, using node indices as
/// tokens, so that parsing the output reproduces the graph exactly.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// Induced subgraph on `nodes` (in the given order; duplicates rejected).
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Nodes within `k` hops of `v`, ascending, `v` included.
std::vector<NodeId> k_hop_nodes(const Graph& g, NodeId v, std::size_t k);

/// Induced subgraph on the k-hop neighbourhood of `v`. Node 0 of the result is
/// `v`; the others follow in ascending original index.
Graph ego_network(const Graph& g, NodeId v, std::size_t k);

std::vector<std::size_t> degree_sequence(const Graph& g);
GraphSummary summary_stats(const Graph& g);

/// Same graph with node i renamed to perm[i].
Graph relabel(const Graph& g, std::span<const NodeId> perm);

struct ManifestEntry {
  std::filesystem::path path;
  std::optional<std::string> class_label;
  std::optional<std::string> time_label;
};

/// Tab- or whitespace-separated rows {path, class_label?, time_label?}. Lines
/// starting with '#' and a leading "path" header row are skipped. Relative
/// paths are resolved against the manifest's directory.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);
void write_manifest(std::ostream& out, std::span<const ManifestEntry> entries);

/// Loads every graph listed in the manifest. Graphs are named after the file
/// stem. Labels are kept only when every row supplies them.
GraphDataset load_dataset(const std::filesystem::path& manifest);

}  // namespace netemd
