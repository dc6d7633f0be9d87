#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "netemd/errors.hpp"
#include "netemd/graph.hpp"
#include "test_util.hpp"

namespace netemd {
namespace {

TEST(Graph, DropsSelfLoopsAndDuplicates) {
  std::vector<Edge> edges = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}};
  Graph g(3, edges);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(Graph, RejectsOutOfRangeEndpoint) {
  std::vector<Edge> edges = {{0, 3}};
  EXPECT_THROW(Graph(3, edges), ParameterError);
}

TEST(Graph, ParsesEdgeListWithCommentsAndIsolatedNodes) {
  std::istringstream in("# a comment\n#nodes: a b c d\na b\nb c\n\nc a\n");
  Graph g = parse_edge_list(in, "tri");
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.degree(3), 0u);
  EXPECT_EQ(g.name(), "tri");
}

TEST(Graph, ParseErrorCarriesLineNumber) {
  std::istringstream in("a b\nc\n");
  try {
    parse_edge_list(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Graph, EmptyInputGivesEmptyGraph) {
  std::istringstream in("");
  Graph g = parse_edge_list(in);
  EXPECT_EQ(g.node_count(), 0u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Graph, WriteThenParseRoundTrips) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = testing::random_graph(12, 0.2, seed);
    std::stringstream buf;
    write_edge_list(buf, g);
    Graph back = parse_edge_list(buf);
    EXPECT_EQ(back, g);
  }
}

TEST(Graph, ContentHashIgnoresNameAndTracksEdges) {
  Graph a = testing::path_graph(4);
  Graph b = testing::path_graph(4);
  b.set_name("other");
  EXPECT_EQ(a.content_hash(), b.content_hash());
  EXPECT_NE(a.content_hash(), testing::complete_graph(4).content_hash());
}

TEST(Graph, KHopAndEgoNetwork) {
  Graph p = testing::path_graph(5);
  EXPECT_EQ(k_hop_nodes(p, 2, 1), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(k_hop_nodes(p, 0, 2), (std::vector<NodeId>{0, 1, 2}));
  Graph ego = ego_network(p, 2, 1);
  EXPECT_EQ(ego.node_count(), 3u);
  EXPECT_EQ(ego.edge_count(), 2u);
  EXPECT_EQ(ego.degree(0), 2u);  // the centre comes first
  EXPECT_THROW(k_hop_nodes(p, 9, 1), IndexError);
}

TEST(Graph, SpecEdgeListExamples) {
  std::istringstream a("0 1\n1 2\n");
  Graph g = parse_edge_list(a);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  std::istringstream b("a b\nb a\n# comment\na a\n");
  Graph h = parse_edge_list(b);
  EXPECT_EQ(h.node_count(), 2u);
  EXPECT_EQ(h.edge_count(), 1u);
}

TEST(Graph, EgoExamples) {
  std::vector<Edge> star_edges = {{0, 1}, {0, 2}, {0, 3}};
  Graph star(4, star_edges);
  EXPECT_EQ(ego_network(star, 0, 1), star);
  Graph p = testing::path_graph(3);
  Graph ego = ego_network(p, 0, 1);
  EXPECT_EQ(ego.node_count(), 2u);
  EXPECT_EQ(ego.edge_count(), 1u);
  std::vector<Edge> c5_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  Graph c5(5, c5_edges);
  for (NodeId v = 0; v < 5; ++v) {
    Graph e = ego_network(c5, v, 1);
    EXPECT_EQ(e.node_count(), 3u);
    EXPECT_EQ(e.edge_count(), 2u);
    EXPECT_EQ(e.degree(0), 2u);
  }
  EXPECT_THROW(ego_network(p, 0, 0), ParameterError);
}

TEST(Graph, EgoMatchesBreadthFirstOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = testing::random_graph(15, 0.15, seed);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      for (std::size_t k : {1u, 2u}) {
        // Reachable sets by repeated expansion over the edge list.
        std::vector<bool> in(g.node_count(), false);
        in[v] = true;
        for (std::size_t step = 0; step < k; ++step) {
          auto next = in;
          for (const auto& [a, b] : g.edges()) {
            if (in[a]) next[b] = true;
            if (in[b]) next[a] = true;
          }
          in = next;
        }
        std::size_t nodes = 0, edges = 0;
        for (NodeId u = 0; u < g.node_count(); ++u) nodes += in[u];
        for (const auto& [a, b] : g.edges()) edges += in[a] && in[b];
        Graph e = ego_network(g, v, k);
        EXPECT_EQ(e.node_count(), nodes);
        EXPECT_EQ(e.edge_count(), edges);
      }
    }
  }
}

TEST(Graph, DegreeSequence) {
  EXPECT_EQ(degree_sequence(testing::complete_graph(3)), (std::vector<std::size_t>{2, 2, 2}));
  std::vector<Edge> none;
  EXPECT_EQ(degree_sequence(Graph(4, none)), (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_EQ(degree_sequence(testing::path_graph(3)), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Graph, RelabelPreservesStructure) {
  Graph g = testing::random_graph(10, 0.3, 4);
  auto perm = testing::random_permutation(10, 5);
  Graph h = relabel(g, perm);
  EXPECT_EQ(h.edge_count(), g.edge_count());
  for (const auto& [u, v] : g.edges()) EXPECT_TRUE(h.has_edge(perm[u], perm[v]));
}

TEST(Graph, SummaryStats) {
  auto s = summary_stats(testing::complete_graph(4));
  EXPECT_EQ(s.edges, 6u);
  EXPECT_DOUBLE_EQ(s.density, 1.0);
  EXPECT_DOUBLE_EQ(s.avg_degree, 3.0);
  auto k2 = summary_stats(testing::complete_graph(2));
  EXPECT_DOUBLE_EQ(k2.density, 1.0);
  EXPECT_DOUBLE_EQ(k2.avg_degree, 1.0);
  std::vector<Edge> none;
  auto empty = summary_stats(Graph(10, none));
  EXPECT_EQ(empty.nodes, 10u);
  EXPECT_DOUBLE_EQ(empty.density, 0.0);
  EXPECT_DOUBLE_EQ(empty.avg_degree, 0.0);
}

TEST(Manifest, RoundTripAndMissingLabels) {
  const auto dir = std::filesystem::temp_directory_path() / "netemd_manifest_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "a.edges") << "0 1\n1 2\n";
    std::ofstream(dir / "b.edges") << "0 1\n";
  }
  std::vector<ManifestEntry> entries(2);
  entries[0].path = "a.edges";
  entries[0].class_label = "X";
  entries[0].time_label = "1";
  entries[1].path = "b.edges";
  entries[1].class_label = "Y";
  {
    std::ofstream out(dir / "manifest.tsv");
    write_manifest(out, entries);
  }
  auto read = read_manifest(dir / "manifest.tsv");
  ASSERT_EQ(read.size(), 2u);
  EXPECT_EQ(read[0].class_label, "X");
  EXPECT_EQ(read[1].time_label, std::nullopt);
  GraphDataset ds = load_dataset(dir / "manifest.tsv");
  EXPECT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds.class_labels, (std::vector<std::string>{"X", "Y"}));
  EXPECT_FALSE(ds.has_time_labels());  // one row lacks a time label
  EXPECT_EQ(ds.names(), (std::vector<std::string>{"a", "b"}));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace netemd
