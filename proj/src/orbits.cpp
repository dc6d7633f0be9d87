#include "netemd/orbits.hpp"

#include <algorithm>
#include <array>

#include "netemd/errors.hpp"
#include "netemd/graphlets.hpp"
#include "netemd/simd/kernels.hpp"

namespace netemd {

namespace {

void check_size(int max_size) {
  if (max_size < 2 || max_size > kMaxGraphletSize) {
    throw ParameterError("graphlet size must be between 2 and 5, got " + std::to_string(max_size));
  }
}

// ---------------------------------------------------------------------------
// Non-induced to induced conversion.
//
// For a node v and orbit o, the non-induced count n_o(v) counts edge subsets
// (on any node set of the right size) that form graphlet(o) with v at o. Each
// induced copy of a denser graphlet H' with v at orbit o' contributes
// coef[o][o'] such subsets, where coef is read off H' by enumerating its edge
// subsets. The system is unitriangular when orbits are ordered by edge count.

struct InductionSystem {
  // coef[o][o'] for o, o' < 15.
  std::array<std::array<std::int64_t, 15>, 15> coef{};
  // Orbits 1..14 ordered by decreasing edge count of their graphlet.
  std::vector<int> order;
};

const InductionSystem& induction_system() {
  static const InductionSystem sys = [] {
    InductionSystem s;
    const auto catalog = graphlet_catalog();
    for (const auto& h : catalog) {
      if (h.size < 3 || h.size > 4) continue;
      const int edges = static_cast<int>(h.edges.size());
      for (int u = 0; u < h.size; ++u) {
        const int host_orbit = h.node_orbits[u];
        // One representative per orbit.
        if (std::find(h.node_orbits.begin(), h.node_orbits.begin() + u, host_orbit) !=
            h.node_orbits.begin() + u) {
          continue;
        }
        for (std::uint32_t subset = 1; subset < (1U << edges); ++subset) {
          std::uint32_t mask = 0;
          for (int e = 0; e < edges; ++e) {
            if (subset & (1U << e)) mask |= 1U << pair_bit(h.edges[e].first, h.edges[e].second);
          }
          const auto& cls = classify_graphlet(h.size, mask);
          if (cls.graphlet < 0) continue;
          ++s.coef[cls.orbit[u]][host_orbit];
        }
      }
    }
    for (int o = 1; o < 15; ++o) s.order.push_back(o);
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
      return catalog[graphlet_of_orbit(a)].edges.size() > catalog[graphlet_of_orbit(b)].edges.size();
    });
    return s;
  }();
  return sys;
}

std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
std::int64_t choose3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// Orbits 0..14 (or fewer) from local counts around each node.
void count_small_orbits(const Graph& g, int max_size, OrbitCountTable& out) {
  const std::size_t n = g.node_count();
  const auto deg = [&](NodeId v) { return static_cast<std::int64_t>(g.degree(v)); };

  // Triangles through each edge slot.
  std::vector<std::int64_t> tri(g.slot_count(), 0);
  for (NodeId u = 0; u < n; ++u) {
    const auto nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      const NodeId v = nu[i];
      if (v < u) continue;
      const auto nv = g.neighbors(v);
      const auto t = static_cast<std::int64_t>(simd::intersect_count(nu, nv));
      tri[g.row_offset(u) + i] = t;
      const auto pos = static_cast<std::size_t>(std::lower_bound(nv.begin(), nv.end(), u) - nv.begin());
      tri[g.row_offset(v) + pos] = t;
    }
  }

  std::vector<std::int64_t> node_tri(n, 0);
  std::vector<std::int64_t> nbr_excess(n, 0);  // sum over neighbours of (deg - 1)
  for (NodeId v = 0; v < n; ++v) {
    std::int64_t t = 0, s = 0;
    const auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      t += tri[g.row_offset(v) + i];
      s += deg(nv[i]) - 1;
    }
    node_tri[v] = t / 2;
    nbr_excess[v] = s;
  }

  const auto& sys = induction_system();
  std::vector<std::uint32_t> mark(n, 0), mark_common(n, 0);
  std::vector<std::int64_t> walks(n, 0);
  std::vector<NodeId> touched;
  std::uint32_t stamp = 0;

  for (NodeId v = 0; v < n; ++v) {
    std::array<std::int64_t, 15> nonind{};
    const std::int64_t dv = deg(v);
    const auto nv = g.neighbors(v);
    const std::size_t base_v = g.row_offset(v);

    out.at(v, 0) = static_cast<std::uint64_t>(dv);
    if (max_size < 3) continue;

    nonind[1] = nbr_excess[v];
    nonind[2] = choose2(dv);
    nonind[3] = node_tri[v];

    if (max_size >= 4) {
      nonind[7] = choose3(dv);
      nonind[11] = node_tri[v] * (dv - 2);
      for (std::size_t i = 0; i < nv.size(); ++i) {
        const NodeId a = nv[i];
        const std::int64_t da = deg(a);
        const std::int64_t t_va = tri[base_v + i];
        nonind[4] += nbr_excess[a] - (dv - 1) - t_va;
        nonind[5] += (dv - 1) * (da - 1) - t_va;
        nonind[6] += choose2(da - 1);
        nonind[9] += node_tri[a] - t_va;
        nonind[10] += t_va * (da - 2);
        nonind[13] += choose2(t_va);
      }

      // 4-cycles: pairs of 2-paths v-a-c and v-b-c.
      touched.clear();
      for (NodeId a : nv) {
        for (NodeId c : g.neighbors(a)) {
          if (c == v) continue;
          if (walks[c]++ == 0) touched.push_back(c);
        }
      }
      for (NodeId c : touched) {
        nonind[8] += choose2(walks[c]);
        walks[c] = 0;
      }

      // Triangles (v, a, b) with a < b: diamonds with v at a degree-2 node and
      // K4 completions.
      ++stamp;
      for (NodeId a : nv) mark[a] = stamp;
      std::int64_t k4_times3 = 0;
      for (NodeId a : nv) {
        const auto na = g.neighbors(a);
        const std::size_t base_a = g.row_offset(a);
        for (NodeId b : na) {
          if (mark[b] == stamp) mark_common[b] = stamp;
        }
        for (std::size_t j = 0; j < na.size(); ++j) {
          const NodeId b = na[j];
          if (b <= a || mark[b] != stamp) continue;
          nonind[12] += tri[base_a + j] - 1;
          for (NodeId c : g.neighbors(b)) {
            if (mark_common[c] == stamp) ++k4_times3;
          }
        }
        // Reset the common-neighbour marks for the next a.
        for (NodeId b : na) {
          if (mark_common[b] == stamp) mark_common[b] = 0;
        }
      }
      nonind[14] = k4_times3 / 3;
    }

    std::array<std::int64_t, 15> induced{};
    const int last = orbit_count_up_to(max_size) - 1;
    for (int o : sys.order) {
      if (o > last) continue;
      std::int64_t value = nonind[o];
      for (int p = 1; p <= last; ++p) {
        if (p != o && sys.coef[o][p] != 0) value -= sys.coef[o][p] * induced[p];
      }
      induced[o] = value;
    }
    for (int o = 1; o <= last; ++o) out.at(v, o) = static_cast<std::uint64_t>(induced[o]);
  }
}

// ---------------------------------------------------------------------------
// ESU enumeration of connected induced subgraphs.

class Enumerator {
 public:
  Enumerator(const Graph& g, int min_size, int max_size, OrbitCountTable& out)
      : g_(g), min_size_(min_size), max_size_(max_size), out_(out), closed_(g.node_count(), 0) {}

  void run() {
    for (NodeId root = 0; root < g_.node_count(); ++root) {
      root_ = root;
      sub_.assign(1, root);
      add_to_closed(root, +1);
      std::vector<NodeId> ext;
      for (NodeId u : g_.neighbors(root)) {
        if (u > root) ext.push_back(u);
      }
      extend(ext, 0);
      add_to_closed(root, -1);
    }
  }

 private:
  static constexpr int kInSub = 1 << 20;

  void add_to_closed(NodeId w, int sign) {
    closed_[w] += sign * kInSub;
    for (NodeId u : g_.neighbors(w)) closed_[u] += sign;
  }

  void record(std::uint32_t mask) {
    const int k = static_cast<int>(sub_.size());
    if (k < min_size_) return;
    const auto& cls = classify_graphlet(k, mask);
    for (int i = 0; i < k; ++i) ++out_.at(sub_[i], static_cast<std::size_t>(cls.orbit[i]));
  }

  void extend(std::vector<NodeId> ext, std::uint32_t mask) {
    record(mask);
    if (static_cast<int>(sub_.size()) == max_size_) return;
    while (!ext.empty()) {
      const NodeId w = ext.back();
      ext.pop_back();
      std::vector<NodeId> next = ext;
      for (NodeId u : g_.neighbors(w)) {
        if (u > root_ && closed_[u] == 0) next.push_back(u);
      }
      const int pos = static_cast<int>(sub_.size());
      std::uint32_t next_mask = mask;
      for (int i = 0; i < pos; ++i) {
        if (g_.has_edge(sub_[i], w)) next_mask |= 1U << pair_bit(i, pos);
      }
      sub_.push_back(w);
      add_to_closed(w, +1);
      extend(std::move(next), next_mask);
      add_to_closed(w, -1);
      sub_.pop_back();
    }
  }

  const Graph& g_;
  int min_size_;
  int max_size_;
  OrbitCountTable& out_;
  std::vector<int> closed_;  // neighbours in sub, plus kInSub per membership
  std::vector<NodeId> sub_;
  NodeId root_ = 0;
};

}  // namespace

std::vector<std::uint64_t> CountTable::column(std::size_t c) const {
  std::vector<std::uint64_t> result(nodes_);
  for (std::size_t v = 0; v < nodes_; ++v) result[v] = at(v, c);
  return result;
}

OrbitCountTable orbit_counts(const Graph& g, int max_size) {
  check_size(max_size);
  OrbitCountTable table(g.node_count(), static_cast<std::size_t>(orbit_count_up_to(max_size)), max_size);
  count_small_orbits(g, std::min(max_size, 4), table);
  if (max_size == 5) Enumerator(g, 5, 5, table).run();
  return table;
}

OrbitCountTable enumerate_orbit_counts(const Graph& g, int max_size) {
  check_size(max_size);
  OrbitCountTable table(g.node_count(), static_cast<std::size_t>(orbit_count_up_to(max_size)), max_size);
  Enumerator(g, 2, max_size, table).run();
  return table;
}

std::vector<std::uint64_t> graphlet_census(const OrbitCountTable& orbits) {
  const int max_size = orbits.max_graphlet_size();
  const auto catalog = graphlet_catalog();
  std::vector<std::uint64_t> census(static_cast<std::size_t>(graphlet_count_up_to(max_size)), 0);
  for (std::size_t o = 0; o < orbits.column_count(); ++o) {
    const int gid = graphlet_of_orbit(static_cast<int>(o));
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < orbits.node_count(); ++v) total += orbits.at(v, o);
    census[static_cast<std::size_t>(gid)] += total;
  }
  for (std::size_t gid = 0; gid < census.size(); ++gid) {
    census[gid] /= static_cast<std::uint64_t>(catalog[gid].size);
  }
  return census;
}

}  // namespace netemd
