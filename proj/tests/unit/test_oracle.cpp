#include <gtest/gtest.h>

#include "brute.hpp"
#include "rdom/error.hpp"
#include "rdom/generators.hpp"
#include "rdom/oracle.hpp"

using namespace rdom;

namespace {
Graph cycle(int n) { return generate({family::Cycle{n}, 0}); }
Graph star(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return build_graph(leaves + 1, es);
}
}  // namespace

TEST(Oracle, KnownValues) {
  EXPECT_EQ(gamma_r_exact(cycle(5)).value, 4);
  EXPECT_EQ(gamma_r_exact(cycle(17)).value, 12);
  EXPECT_EQ(gamma_r_exact(star(4)).value, 2);
  EXPECT_EQ(differential_exact(cycle(5)).value, 1);
  EXPECT_EQ(differential_exact(star(4)).value, 3);
  EXPECT_EQ(differential_exact(cycle(17)).value, 5);
}

TEST(Oracle, ClosedForm) {
  EXPECT_EQ(closed_form(ClosedFormKind::Cycle, 11), 8);
  EXPECT_EQ(closed_form(ClosedFormKind::Path, 4), 3);
  EXPECT_EQ(closed_form(ClosedFormKind::Cycle, 3), 2);
  EXPECT_THROW(closed_form(ClosedFormKind::Cycle, 2), Error);
}

TEST(Oracle, Gallai) {
  EXPECT_TRUE(check_gallai(cycle(5)));
  EXPECT_TRUE(check_gallai(star(4)));
  EXPECT_TRUE(check_gallai(build_graph(2, {{0, 1}})));
  EXPECT_THROW(check_gallai(build_graph(3, {{0, 1}})), Error);
}

TEST(Oracle, WitnessesAreOptimalAndValid) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 120; ++i) {
    int n = 1 + i % 11;
    Graph g = n == 1 ? build_graph(1, {}) : brute::random_connected(n, 0.3, rng);
    auto gr = gamma_r_exact(g);
    EXPECT_EQ(gr.value, brute::gamma_r_labellings(g));
    EXPECT_TRUE(brute::is_rdf(g, gr.witness.values));
    EXPECT_EQ(brute::weight(gr.witness.values), gr.value);
    auto d = differential_exact(g);
    EXPECT_EQ(d.value, brute::differential(g));
    EXPECT_EQ(differential_of_set(g, d.set), d.value);
  }
}

TEST(Oracle, LimitIsEnforced) {
  try {
    gamma_r_exact(cycle(30), 26);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}
