#include <gtest/gtest.h>

#include "brute.hpp"
#include "rdom/error.hpp"
#include "rdom/generators.hpp"
#include "rdom/structure.hpp"

using namespace rdom;

TEST(Generators, Cycle) {
  Graph g = generate({family::Cycle{17}, 0});
  EXPECT_EQ(g.n(), 17);
  EXPECT_EQ(g.m(), 17u);
}

// The tailed cycle of order m+l has m+l edges: m on the cycle, l on the tail.
TEST(Generators, TailedCycle) {
  Graph g = generate({family::TailedCycle{4, 3}, 0});
  EXPECT_EQ(g.n(), 7);
  EXPECT_EQ(g.m(), 7u);
  int leaves = 0;
  for (Vertex v = 0; v < g.n(); ++v) leaves += g.degree(v) == 1;
  EXPECT_EQ(leaves, 1);
  EXPECT_EQ(g.degree(6), 1);
}

TEST(Generators, Brs) {
  Graph g = generate({family::Brs{{{5, 1}}, {5, 5}}, 0});
  EXPECT_EQ(g.n(), 17);
  EXPECT_EQ(g.degree(0), 3);
}

TEST(Generators, Shapes) {
  Graph f02 = generate({family::F02{6, 5, 2}, 0});
  EXPECT_EQ(f02.n(), 13);
  EXPECT_EQ(f02.m(), 14u);
  Graph f22 = generate({family::F22{8, 8}, 0});
  EXPECT_EQ(f22.n(), 16);
  EXPECT_TRUE(f22.has_edge(0, 8));
  Graph f3 = generate({family::F3{{6, 8, 0}, {8, 8}, 1}, 0});
  EXPECT_EQ(f3.n(), 31);
  EXPECT_EQ(f3.m(), 34u);
}

TEST(Generators, InvalidSpecs) {
  try {
    generate({family::F22{6, 8}, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SpecInvalid);
  }
  EXPECT_THROW(generate({family::Cycle{2}, 0}), Error);
}

TEST(Generators, RandomIsSeededAndFiltered) {
  FamilySpec spec{family::RandomMinDeg2{18, 0.07, 1}, 42};
  Graph a = generate(spec), b = generate(spec);
  EXPECT_EQ(a.edges(), b.edges());
  EXPECT_TRUE(check_hypotheses(a, 1).passes);
  EXPECT_TRUE(brute::connected(a));
  Graph c = generate({family::RandomMinDeg2{18, 0.07, 1}, 43});
  EXPECT_NE(a.edges(), c.edges());
}

TEST(Generators, SplitSeed) {
  EXPECT_EQ(split_seed(1, 0), split_seed(1, 0));
  EXPECT_NE(split_seed(1, 0), split_seed(1, 1));
  EXPECT_NE(split_seed(1, 0), split_seed(2, 0));
}

TEST(Generators, Suite) {
  auto s1 = family_suite(1, 20, 7);
  bool c17 = false, f22 = false;
  for (const auto& e : s1) {
    EXPECT_TRUE(check_hypotheses(e.graph, 1).forbidden_found.empty()) << describe(e.spec);
    c17 |= describe(e.spec) == describe({family::Cycle{17}, 0});
    f22 |= describe(e.spec) == describe({family::F22{8, 8}, 0});
  }
  EXPECT_TRUE(c17);
  EXPECT_TRUE(f22);

  auto s0 = family_suite(0, 12, 7);
  int c9 = 0, c11 = 0;
  for (const auto& e : s0) {
    c9 += describe(e.spec) == describe({family::Cycle{9}, 0});
    c11 += describe(e.spec) == describe({family::Cycle{11}, 0});
  }
  EXPECT_EQ(c9, 1);
  EXPECT_EQ(c11, 1);

  auto tiny = family_suite(0, 3, 7);
  ASSERT_EQ(tiny.size(), 1u);
  EXPECT_EQ(tiny[0].graph.n(), 3);
}

TEST(Generators, SuiteIsDeterministic) {
  auto a = family_suite(1, 18, 9), b = family_suite(1, 18, 9);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].graph.edges(), b[i].graph.edges());
}
