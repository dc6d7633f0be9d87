#include "netemd/ego.hpp"

#include "netemd/graphlets.hpp"

namespace netemd {

CountTable ego_graphlet_counts(const Graph& g, std::size_t k, int max_size) {
  const auto columns = static_cast<std::size_t>(graphlet_count_up_to(max_size));
  CountTable table(g.node_count(), columns, max_size);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const Graph ego = ego_network(g, v, k);
    const auto census = graphlet_census(orbit_counts(ego, max_size));
    for (std::size_t c = 0; c < columns; ++c) table.at(v, c) = census[c];
  }
  return table;
}

}  // namespace netemd
