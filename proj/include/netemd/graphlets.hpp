#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace netemd {

inline constexpr int kMaxGraphletSize = 5;
inline constexpr int kGraphletCount = 30;  // connected graphlets on 2..5 nodes
inline constexpr int kOrbitCount = 73;

/// One connected graphlet in canonical form. Orbit ids follow the standard
/// numbering: 0 for the edge, 1-3 for 3-node graphlets, 4-14 for 4-node
/// graphlets and 15-72 for 5-node graphlets.
struct GraphletInfo {
  int id;
  int size;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> node_orbits;  // orbit of canonical node i
};

std::span<const GraphletInfo> graphlet_catalog();

/// Number of orbits on graphlets with at most `max_size` nodes (1, 4, 15, 73).
int orbit_count_up_to(int max_size);
/// Number of graphlets with between 2 and `max_size` nodes (1, 3, 9, 30).
int graphlet_count_up_to(int max_size);

int graphlet_of_orbit(int orbit);
/// Number of canonical positions belonging to `orbit` within its graphlet.
int orbit_multiplicity(int orbit);

/// Bit for the pair (i, j), i != j, in a node-set adjacency mask. Pairs among
/// nodes 0..k-1 occupy the low k(k-1)/2 bits, so masks for smaller sets are
/// valid masks for larger ones.
constexpr int pair_bit(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

struct GraphletClass {
  std::int8_t graphlet = -1;            // -1 when the mask is disconnected
  std::array<std::int8_t, 5> orbit{};   // orbit of each position
};

/// Looks up the graphlet and per-position orbits of the graph on `size` nodes
/// whose edges are given by `mask` (see pair_bit).
const GraphletClass& classify_graphlet(int size, std::uint32_t mask);

}  // namespace netemd
