#include "netemd/graphlets.hpp"

#include <algorithm>
#include <numeric>

#include "netemd/errors.hpp"

namespace netemd {

namespace {

const std::vector<GraphletInfo>& catalog_storage() {
  static const std::vector<GraphletInfo> catalog = {
      {0, 2, {{0, 1}}, {0, 0}},
      {1, 3, {{0, 1}, {0, 2}}, {2, 1, 1}},
      {2, 3, {{0, 1}, {0, 2}, {1, 2}}, {3, 3, 3}},
      {3, 4, {{0, 1}, {0, 3}, {1, 2}}, {5, 5, 4, 4}},
      {4, 4, {{0, 1}, {0, 2}, {0, 3}}, {7, 6, 6, 6}},
      {5, 4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {8, 8, 8, 8}},
      {6, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}, {11, 10, 10, 9}},
      {7, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, {13, 13, 12, 12}},
      {8, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {14, 14, 14, 14}},
      {9, 5, {{0, 2}, {0, 4}, {1, 2}, {1, 3}}, {16, 16, 17, 15, 15}},
      {10, 5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}}, {21, 20, 18, 19, 19}},
      {11, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {23, 22, 22, 22, 22}},
      {12, 5, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}}, {26, 26, 25, 24, 24}},
      {13, 5, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 3}}, {28, 30, 29, 29, 27}},
      {14, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}}, {33, 32, 32, 31, 31}},
      {15, 5, {{0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}}, {34, 34, 34, 34, 34}},
      {16, 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}}, {38, 36, 37, 37, 35}},
      {17, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}}, {42, 41, 40, 40, 39}},
      {18, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 3}}, {44, 43, 43, 43, 43}},
      {19, 5, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {2, 3}}, {47, 48, 48, 46, 45}},
      {20, 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, {50, 50, 49, 49, 49}},
      {21, 5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}}, {53, 53, 51, 51, 52}},
      {22, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, {55, 55, 54, 54, 54}},
      {23, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 3}}, {58, 57, 57, 57, 56}},
      {24, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}}, {61, 60, 60, 59, 59}},
      {25, 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}, {63, 63, 64, 64, 62}},
      {26, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}, {67, 67, 66, 66, 65}},
      {27, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, {69, 68, 68, 68, 68}},
      {28, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, {71, 71, 71, 70, 70}},
      {29, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, {72, 72, 72, 72, 72}},
  };
  return catalog;
}

struct OrbitIndex {
  std::array<int, kOrbitCount> graphlet{};
  std::array<int, kOrbitCount> multiplicity{};
};

const OrbitIndex& orbit_index() {
  static const OrbitIndex index = [] {
    OrbitIndex idx;
    for (const auto& g : catalog_storage()) {
      for (int o : g.node_orbits) {
        idx.graphlet[o] = g.id;
        ++idx.multiplicity[o];
      }
    }
    return idx;
  }();
  return index;
}

// tables[size][mask]; masks use the low C(size, 2) bits.
using ClassTable = std::array<std::vector<GraphletClass>, kMaxGraphletSize + 1>;

const ClassTable& class_tables() {
  static const ClassTable tables = [] {
    ClassTable t;
    for (int k = 2; k <= kMaxGraphletSize; ++k) t[k].assign(std::size_t{1} << (k * (k - 1) / 2), {});
    for (const auto& g : catalog_storage()) {
      std::array<int, kMaxGraphletSize> perm{};
      std::iota(perm.begin(), perm.begin() + g.size, 0);
      do {
        std::uint32_t mask = 0;
        for (const auto& [a, b] : g.edges) mask |= 1U << pair_bit(perm[a], perm[b]);
        auto& entry = t[g.size][mask];
        entry.graphlet = static_cast<std::int8_t>(g.id);
        for (int i = 0; i < g.size; ++i) entry.orbit[perm[i]] = static_cast<std::int8_t>(g.node_orbits[i]);
      } while (std::next_permutation(perm.begin(), perm.begin() + g.size));
    }
    return t;
  }();
  return tables;
}

}  // namespace

std::span<const GraphletInfo> graphlet_catalog() { return catalog_storage(); }

int orbit_count_up_to(int max_size) {
  switch (max_size) {
    case 2: return 1;
    case 3: return 4;
    case 4: return 15;
    case 5: return 73;
    default: throw ParameterError("graphlet size must be between 2 and 5");
  }
}

int graphlet_count_up_to(int max_size) {
  switch (max_size) {
    case 2: return 1;
    case 3: return 3;
    case 4: return 9;
    case 5: return 30;
    default: throw ParameterError("graphlet size must be between 2 and 5");
  }
}

int graphlet_of_orbit(int orbit) {
  if (orbit < 0 || orbit >= kOrbitCount) throw IndexError("orbit id out of range");
  return orbit_index().graphlet[orbit];
}

int orbit_multiplicity(int orbit) {
  if (orbit < 0 || orbit >= kOrbitCount) throw IndexError("orbit id out of range");
  return orbit_index().multiplicity[orbit];
}

const GraphletClass& classify_graphlet(int size, std::uint32_t mask) {
  return class_tables()[size][mask];
}

}  // namespace netemd
