#include <gtest/gtest.h>

#include <sstream>

#include "brute.hpp"
#include "rdom/generators.hpp"
#include "rdom/rdf.hpp"

using namespace rdom;

namespace {
Graph cycle(int n) { return generate({family::Cycle{n}, 0}); }
}  // namespace

TEST(Rdf, IsRdf) {
  Graph c5 = cycle(5);
  EXPECT_TRUE(is_rdf(c5, RomanFunction({2, 0, 1, 0, 2})));
  EXPECT_FALSE(is_rdf(c5, RomanFunction(5)));
  Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  RomanFunction f({0, 2, 0});
  EXPECT_TRUE(is_rdf(p3, f));
  EXPECT_EQ(f.weight(), 2);
}

TEST(Rdf, AgreesWithBruteForceOnAllLabellings) {
  Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
  std::vector<std::uint8_t> f(5, 0);
  for (int code = 0; code < 243; ++code) {
    int c = code;
    for (int v = 0; v < 5; ++v, c /= 3) f[v] = static_cast<std::uint8_t>(c % 3);
    EXPECT_EQ(is_rdf(g, RomanFunction(f)), brute::is_rdf(g, f));
  }
}

TEST(Rdf, ValidateTriple) {
  Graph c3 = cycle(3);
  RdfTriple t = empty_triple(3);
  for (int j = 0; j < 3; ++j) t[j].values[j] = 2;
  auto r = validate_triple(c3, t);
  EXPECT_TRUE(r.all_valid());
  EXPECT_EQ(r.weight_total, 6);
  EXPECT_EQ(r.strong_set, (VertexSet{0, 1, 2}));

  t[1] = RomanFunction(3);
  r = validate_triple(c3, t);
  EXPECT_FALSE(r.valid[1]);
  EXPECT_TRUE(r.valid[0]);
  EXPECT_EQ(r.min_index, 1);
}

TEST(Rdf, DifferentialOfSet) {
  EXPECT_EQ(differential_of_set(cycle(5), {0}), 1);
  Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_EQ(differential_of_set(star, {0}), 3);
  EXPECT_EQ(differential_of_set(star, {}), 0);
}

TEST(Rdf, RestrictAndLift) {
  Graph c6 = cycle(6);
  Subgraph s = induced_subgraph(c6, {1, 2, 3});
  RomanFunction host({0, 1, 2, 0, 1, 0});
  RomanFunction part = restrict_to(host, s);
  EXPECT_EQ(part.values, (std::vector<std::uint8_t>{1, 2, 0}));
  part.values[2] = 2;
  lift_into(host, part, s);
  EXPECT_EQ(host.values, (std::vector<std::uint8_t>{0, 1, 2, 2, 1, 0}));
}

TEST(Rdf, FormatParse) {
  RomanFunction f({2, 0, 1, 1});
  EXPECT_EQ(parse_function(format_function(f)), f);
}
