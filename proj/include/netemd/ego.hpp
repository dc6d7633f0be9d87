#pragma once

#include <cstddef>

#include "netemd/graph.hpp"
#include "netemd/orbits.hpp"

namespace netemd {

/// Row v holds the number of induced copies of each connected graphlet on
/// 2..max_size nodes inside ego_network(g, v, k). Columns are graphlet ids
/// (9 columns for max_size 4).
CountTable ego_graphlet_counts(const Graph& g, std::size_t k = 1, int max_size = 4);

}  // namespace netemd
