#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

namespace family {

struct Cycle {
  int n = 0;
};
struct TailedCycle {
  int m = 0;
  int l = 0;
};
// conn = interior vertices of the joining path (0 means an edge)
struct F02 {
  int n0 = 0;
  int n2 = 0;
  int conn = 0;
};
struct F22 {
  int a = 0;
  int b = 0;
};
struct F3 {
  F02 f02;
  F22 f22;
  int conn = 0;
};
struct Brs {
  std::vector<std::pair<int, int>> tails;  // (cycle length, tail length >= 1)
  std::vector<int> cycles;
};
// G(n, p) over a random spanning tree; k_filter < 0 skips the hypothesis check.
struct RandomMinDeg2 {
  int n = 0;
  double edge_prob = 0.0;
  int k_filter = -1;
};

}  // namespace family

using FamilyVariant = std::variant<family::Cycle, family::TailedCycle, family::F02, family::F22, family::F3,
                                   family::Brs, family::RandomMinDeg2>;

struct FamilySpec {
  FamilyVariant family;
  std::uint64_t seed = 0;
};

inline constexpr int kRandomRetries = 10000;

// Vertex numbering:
//   Cycle        0..n-1 in order
//   TailedCycle  cycle 0..m-1, tail m..m+l-1, edge 0-m
//   F02          C0, then C2, then the connector interior running C0[0] -> C2[0]
//   F22          C_a, then C_b, edge 0-a
//   F3           the F02 block, the F22 block, then the interior of a path joining
//                C0's vertex 1 to C_a's vertex 1
//   Brs          hub 0, then each tailed cycle (cycle, then tail; the tail's last
//                vertex meets the hub), then each cycle (its first vertex meets the hub)
Graph generate(const FamilySpec& spec);

// Short printable name such as "F02(6,8,1)".
std::string describe(const FamilySpec& spec);

struct SuiteEntry {
  Graph graph;
  FamilySpec spec;
};

// Every family with residue-legal parameters and n <= size_cap, minus graphs with a
// forbidden induced cycle for k, plus a few seeded random graphs.
std::vector<SuiteEntry> family_suite(int k, int size_cap, std::uint64_t seed);

// splitmix64 step, used to derive per-graph seeds.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace rdom
