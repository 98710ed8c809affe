#include <gtest/gtest.h>

#include "brute.hpp"
#include "rdom/constructors.hpp"
#include "rdom/error.hpp"
#include "rdom/generators.hpp"
#include "rdom/structure.hpp"

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

}  // namespace

TEST(Structure, Hypotheses) {
  auto c17 = check_hypotheses(cycle(17), 1);
  EXPECT_TRUE(c17.passes);
  auto pet = check_hypotheses(petersen(), 1);
  EXPECT_FALSE(pet.passes);
  EXPECT_FALSE(pet.n_ok);
  EXPECT_EQ(pet.forbidden_found.size(), 12u);
  EXPECT_TRUE(check_hypotheses(cycle(11), 0).passes);
  EXPECT_FALSE(check_hypotheses(cycle(8), 2).passes);
  EXPECT_TRUE(is_forbidden_length(8, 2));
  EXPECT_FALSE(is_forbidden_length(8, 1));
  EXPECT_FALSE(is_forbidden_length(6, 5));
}

TEST(Structure, HypothesesMatchBruteForce) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    Graph g = brute::random_connected(9 + i % 8, 0.15, rng);
    for (int k : {0, 1, 2}) {
      bool want = g.n() >= 6 * k + 9 && g.min_degree() >= 2;
      for (const auto& c : brute::induced_cycle_sets(g, 3 * k + 2))
        if (c.size() >= 5 && c.size() % 3 == 2) want = false;
      EXPECT_EQ(check_hypotheses(g, k).passes, want);
    }
  }
}

TEST(Structure, ResidueFloor) {
  EXPECT_TRUE(residue_floor_check(cycle(17), 1));
  EXPECT_TRUE(residue_floor_check(cycle(8), 1));
}

TEST(Structure, AttachmentEar) {
  auto a = find_attachment(cycle(6), {0, 1, 2});
  EXPECT_EQ(a.kind, AttachmentKind::Ear);
  EXPECT_EQ(a.path.size(), 3u);
  EXPECT_TRUE(attachment_is_closed(cycle(6), {0, 1, 2}, a));
}

TEST(Structure, AttachmentPendantCycle) {
  Graph g = generate({family::TailedCycle{4, 2}, 0});
  auto a = find_attachment(g, {4, 5});
  EXPECT_EQ(a.kind, AttachmentKind::PendantCycle);
  EXPECT_EQ(a.cycle.size(), 4u);
  EXPECT_EQ(a.cycle[0], 0);
  EXPECT_EQ(a.anchors, (std::vector<Vertex>{4}));
  EXPECT_TRUE(attachment_is_closed(g, {4, 5}, a));
}

TEST(Structure, AttachmentPendantTailedCycle) {
  // triangle 0-1-2 covered, 2-3 tail, C4 on 4..7 hung from 3
  Graph g = build_graph(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  auto a = find_attachment(g, {0, 1, 2});
  EXPECT_EQ(a.kind, AttachmentKind::PendantTailedCycle);
  EXPECT_EQ(a.tail, (std::vector<Vertex>{3}));
  EXPECT_EQ(a.cycle.size(), 4u);
  EXPECT_TRUE(attachment_is_closed(g, {0, 1, 2}, a));
}

TEST(Structure, Classify) {
  EXPECT_EQ(classify_component(cycle(6)).tag, ClassTag::F0);
  auto f02 = classify_component(generate({family::F02{6, 5, 0}, 0}));
  EXPECT_EQ(f02.tag, ClassTag::F02);
  EXPECT_TRUE(is_strong_class(f02));
  auto st = classify_component(star_of_cycles({5, 5, 5}).graph);
  EXPECT_EQ(st.tag, ClassTag::Brs);
  EXPECT_EQ(st.r, 0);
  EXPECT_EQ(st.s, 3);
  EXPECT_EQ(st.special_vertex, 0);
  EXPECT_FALSE(is_strong_class(st));
  auto f22 = classify_component(generate({family::F22{8, 8}, 0}));
  EXPECT_EQ(f22.tag, ClassTag::F22);
  EXPECT_FALSE(is_strong_class(f22));
  auto f3 = classify_component(generate({family::F3{{6, 8, 0}, {8, 8}, 0}, 0}));
  EXPECT_EQ(f3.tag, ClassTag::F3);
  EXPECT_TRUE(is_strong_class(f3));
  auto brs = classify_component(generate({family::Brs{{{5, 1}}, {5, 5}}, 0}));
  EXPECT_EQ(brs.tag, ClassTag::Brs);
  EXPECT_EQ(brs.r, 1);
  EXPECT_EQ(brs.s, 2);
  EXPECT_EQ(classify_component(petersen()).tag, ClassTag::Other);
  EXPECT_EQ(classify_component(cycle(7)).tag, ClassTag::Other);
}

TEST(Structure, DecomposeTwoC5AndConnector) {
  Graph g = build_graph(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5},
                             {0, 10}, {10, 5}});
  auto d = disjoint_bad_cycle_decomposition(g);
  EXPECT_EQ(validate_decomposition(g, d), "");
  EXPECT_TRUE(d.g1_vertices.empty());
  ASSERT_EQ(d.g2_components.size(), 1u);
  EXPECT_EQ(d.g2_components[0].cls.tag, ClassTag::Brs);
}

TEST(Structure, DecomposeTwoZeroCycles) {
  // C6 and C9 joined through 15, 16
  std::vector<Edge> es;
  for (int i = 0; i < 6; ++i) es.emplace_back(i, (i + 1) % 6);
  for (int i = 0; i < 9; ++i) es.emplace_back(6 + i, 6 + (i + 1) % 9);
  es.insert(es.end(), {{0, 15}, {15, 16}, {16, 6}});
  Graph g = build_graph(17, es);
  auto d = disjoint_bad_cycle_decomposition(g);
  EXPECT_EQ(validate_decomposition(g, d), "");
  EXPECT_EQ(d.g1_vertices, (VertexSet{15, 16}));
  ASSERT_EQ(d.g2_components.size(), 2u);
  for (const auto& c : d.g2_components) EXPECT_EQ(c.cls.tag, ClassTag::F0);
}

TEST(Structure, DecomposeStar) {
  Graph g = star_of_cycles({5, 5, 5}).graph;
  auto d = disjoint_bad_cycle_decomposition(g);
  EXPECT_EQ(validate_decomposition(g, d), "");
  EXPECT_TRUE(d.g1_vertices.empty());
  ASSERT_EQ(d.g2_components.size(), 1u);
  EXPECT_EQ(d.g2_components[0].cls.tag, ClassTag::Brs);
}

TEST(Structure, DecomposeChainThroughMiddleCycle) {
  // C5 - C5 - C8 in a chain; the pairing has to run through the middle C5
  Graph g = build_graph(20, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {3, 9}, {5, 6}, {5, 9}, {5, 18}, {6, 7},
                             {7, 8}, {8, 9}, {10, 11}, {10, 17}, {11, 12}, {12, 13}, {12, 19}, {13, 14},
                             {14, 15}, {15, 16}, {16, 17}, {18, 19}});
  auto d = disjoint_bad_cycle_decomposition(g);
  EXPECT_EQ(validate_decomposition(g, d), "");
  std::vector<char> keep(g.n(), 0);
  for (Vertex v : d.g1_vertices) keep[v] = 1;
  EXPECT_FALSE(brute::has_residue_cycle(g, keep, 0b101));
}

TEST(Structure, DecomposeNeedsTwoDisjointCycles) {
  try {
    disjoint_bad_cycle_decomposition(cycle(9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotEnoughDisjointCycles);
  }
}

TEST(Structure, ValidatorCatchesBrokenPartition) {
  Graph g = star_of_cycles({5, 5, 5}).graph;
  auto d = disjoint_bad_cycle_decomposition(g);
  d.g1_vertices.push_back(d.g2_components[0].vertices[0]);
  EXPECT_NE(validate_decomposition(g, d), "");
}

TEST(Structure, ShortBadCycle) {
  Graph g = generate({family::F02{6, 5, 2}, 0});
  auto c = find_short_bad_cycle(g, g.all_mask(), 0b100);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->size(), 5u);
  EXPECT_FALSE(find_short_bad_cycle(cycle(7), cycle(7).all_mask(), 0b101));
}
