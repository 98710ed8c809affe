#include <gtest/gtest.h>

#include <sstream>

#include "brute.hpp"
#include "rdom/error.hpp"
#include "rdom/generators.hpp"
#include "rdom/graph.hpp"

using namespace rdom;

namespace {

Graph cycle(int n) { return generate({family::Cycle{n}, 0}); }

Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
    es.emplace_back(i, i + 5);
  }
  return build_graph(10, es);
}

Graph star(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return build_graph(leaves + 1, es);
}

}  // namespace

TEST(Graph, BuildDropsDuplicates) {
  Graph g = build_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.m(), 3u);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_EQ(g.min_degree(), 2);
}

TEST(Graph, BuildRejectsBadInput) {
  try {
    build_graph(5, {{0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SelfLoop);
  }
  try {
    build_graph(2, {{0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::VertexOutOfRange);
  }
}

TEST(Graph, ClosedNeighborhood) {
  EXPECT_EQ(closed_neighborhood(cycle(5), {0}), (VertexSet{0, 1, 4}));
  EXPECT_TRUE(closed_neighborhood(cycle(5), {}).empty());
  EXPECT_EQ(closed_neighborhood(star(4), {0}).size(), 5u);
}

TEST(Graph, InducedCyclesMatchBruteForce) {
  EXPECT_EQ(induced_cycles_up_to(cycle(5), 5).size(), 1u);
  EXPECT_TRUE(induced_cycles_up_to(cycle(17), 8).empty());
  EXPECT_EQ(induced_cycles_up_to(petersen(), 5).size(), 12u);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    Graph g = brute::random_connected(5 + i % 8, 0.3, rng);
    for (int len : {4, 6, 9}) {
      std::set<std::vector<Vertex>> got;
      for (const auto& c : induced_cycles_up_to(g, len)) {
        EXPECT_TRUE(is_induced_cycle(g, c));
        auto vs = c.vertices;
        std::sort(vs.begin(), vs.end());
        got.insert(vs);
      }
      EXPECT_EQ(got, brute::induced_cycle_sets(g, len));
    }
  }
}

TEST(Graph, LongestPath) {
  Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(longest_path(p4).size(), 4u);
  auto c6 = longest_path(cycle(6));
  EXPECT_EQ(c6.size(), 6u);
  EXPECT_TRUE(is_path_in(cycle(6), c6));
  auto s = longest_path(star(3));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.vertices[1], 0);
}

TEST(Graph, ShortestConnectingPath) {
  Graph p5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(shortest_connecting_path(p5, {0}, {4}).vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  Graph two = generate({family::F22{5, 5}, 0});
  auto p = shortest_connecting_path(two, {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9});
  EXPECT_EQ(p.size(), 2u);
  Graph tris = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  try {
    shortest_connecting_path(tris, {0}, {3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoPath);
  }
}

TEST(Graph, ResidueCycleSearchMatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 80; ++i) {
    Graph g = brute::random_connected(6 + i % 7, 0.25, rng);
    std::vector<char> keep(g.n(), 1);
    for (unsigned res = 1; res < 8; ++res)
      EXPECT_EQ(has_cycle_with_residue(g, g.all_mask(), res), brute::has_residue_cycle(g, keep, res));
    std::size_t count = 0;
    for_each_cycle(g, g.all_mask(), g.n(), [&](const VertexCycle& c) {
      EXPECT_TRUE(is_cycle_in(g, c));
      ++count;
      return true;
    });
    EXPECT_EQ(count, brute::all_cycles(g).size());
  }
}

TEST(Graph, CanonicalCycle) {
  EXPECT_EQ(canonical_cycle({3, 2, 0, 1}).vertices, (std::vector<Vertex>{0, 1, 3, 2}));
}

TEST(Graph, EdgeListRoundTrip) {
  Graph g = petersen();
  std::stringstream ss;
  write_edge_list(ss, g);
  Graph h = read_edge_list(ss);
  EXPECT_EQ(h.n(), 10);
  EXPECT_EQ(h.edges(), g.edges());
}

TEST(Graph, EdgeListErrors) {
  std::istringstream bad("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(bad), Error);
  std::istringstream comment("# c\n3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(read_edge_list(comment).m(), 3u);
}

TEST(Graph, Components) {
  Graph tris = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(tris.connected());
  auto cs = tris.components();
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[1], (VertexSet{3, 4, 5}));
}
