#include <gtest/gtest.h>

#include "rdom/engine.hpp"
#include "rdom/error.hpp"
#include "rdom/generators.hpp"
#include "report.hpp"

using namespace rdom;

TEST(Report, RoundTrip) {
  Graph g = generate({family::Cycle{17}, 0});
  auto cert = construct_bound_triple(g, 1);
  certify_bound(g, 1, cert, true);

  report::RunReport r;
  r.command = "verify";
  r.input_digest = report::digest("17 17\n");
  r.k = 1;
  r.n = 17;
  report::Part p;
  for (int v = 0; v < 17; ++v) p.vertices.push_back(v);
  p.hypothesis = report::from(check_hypotheses(g, 1));
  p.exact = report::Exact{12, 5, true};
  p.certificate = report::from(cert);
  r.parts.push_back(p);
  r.timing_ms["engine"] = 0.25;
  r.warnings.push_back("none");

  auto back = report::parse_json(report::to_json(r));
  EXPECT_EQ(back, r);
  EXPECT_TRUE(back.parts[0].certificate->tight);
  EXPECT_EQ(back.parts[0].certificate->gallai_ok, true);
}

TEST(Report, DecompositionAndBatch) {
  Graph g = generate({family::Brs{{}, {5, 5, 5}}, 0});
  report::RunReport r;
  r.command = "batch";
  report::Part p;
  p.decomposition = report::from(disjoint_bad_cycle_decomposition(g), true);
  r.parts.push_back(p);
  report::Batch b;
  b.k = 1;
  b.routes["Main"] = 3;
  b.failures.push_back({"C5", 5, "Th1", 4, std::nullopt, false});
  r.batch = b;
  EXPECT_EQ(report::parse_json(report::to_json(r, -1)), r);
}

TEST(Report, RejectsBadInput) {
  EXPECT_THROW(report::parse_json("{"), Error);
  EXPECT_THROW(report::parse_json(R"({"schema": 99})"), Error);
}

TEST(Report, Digest) {
  EXPECT_EQ(report::digest(""), "fnv1a64:cbf29ce484222325");
  EXPECT_EQ(report::digest("a"), "fnv1a64:af63dc4c8601ec8c");
}
