#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "netemd/graph.hpp"

namespace netemd {

/// Dense node-by-column table of non-negative counts.
///
/// Used both for graphlet orbit degrees (columns are orbit ids 0..72) and for
/// per-ego graphlet censuses (columns are graphlet ids 0..29).
class CountTable {
 public:
  CountTable() = default;
  CountTable(std::size_t nodes, std::size_t columns, int max_graphlet_size)
      : nodes_(nodes), columns_(columns), max_size_(max_graphlet_size), data_(nodes * columns, 0) {}

  std::size_t node_count() const noexcept { return nodes_; }
  std::size_t column_count() const noexcept { return columns_; }
  int max_graphlet_size() const noexcept { return max_size_; }

  std::uint64_t& at(std::size_t node, std::size_t column) noexcept { return data_[node * columns_ + column]; }
  std::uint64_t at(std::size_t node, std::size_t column) const noexcept { return data_[node * columns_ + column]; }

  std::span<const std::uint64_t> row(std::size_t node) const noexcept {
    return {data_.data() + node * columns_, columns_};
  }
  std::span<std::uint64_t> row(std::size_t node) noexcept { return {data_.data() + node * columns_, columns_}; }
  std::vector<std::uint64_t> column(std::size_t c) const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::size_t nodes_ = 0;
  std::size_t columns_ = 0;
  int max_size_ = 0;
  std::vector<std::uint64_t> data_;
};

using OrbitCountTable = CountTable;

/// Graphlet degrees of every node for all orbits of graphlets on 2..max_size
/// nodes (max_size in 2..5). Orbits up to 4 nodes are obtained from local
/// combinatorial counts; 5-node orbits come from enumerating connected induced
/// 5-node subgraphs.
OrbitCountTable orbit_counts(const Graph& g, int max_size);

/// Same result as orbit_counts, computed purely by enumerating every connected
/// induced subgraph (ESU) and classifying it. O(N d^(max_size-1)).
OrbitCountTable enumerate_orbit_counts(const Graph& g, int max_size);

/// Number of induced copies of each graphlet (columns 0..graphlet_count-1)
/// in the whole graph, derived from an orbit table.
std::vector<std::uint64_t> graphlet_census(const OrbitCountTable& orbits);

}  // namespace netemd
