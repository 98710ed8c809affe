#pragma once

#include <chrono>

#include "rdom/graph.hpp"
#include "rdom/rdf.hpp"

namespace rdom {

inline constexpr int kDefaultOracleLimit = 26;

struct ExactResult {
  int value = 0;
  RomanFunction witness;  // gamma_r_exact
  VertexSet set;          // differential_exact
  std::chrono::nanoseconds elapsed{0};
};

// Branch and bound over the set S of 2-labelled vertices; every vertex outside N[S]
// is forced to 1, so gamma_R = min_S 2|S| + |V \ N[S]|. Optimal ties resolve to the
// lexicographically smallest label vector.
ExactResult gamma_r_exact(const Graph& g, int limit = kDefaultOracleLimit);

// max_D |N[D]| - 2|D|, searched independently of gamma_r_exact.
ExactResult differential_exact(const Graph& g, int limit = kDefaultOracleLimit);

enum class ClosedFormKind { Path, Cycle };
int closed_form(ClosedFormKind kind, int n);

bool check_gallai(const Graph& g, int limit = kDefaultOracleLimit);

}  // namespace rdom
