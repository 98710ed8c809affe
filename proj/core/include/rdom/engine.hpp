#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdom/constructors.hpp"
#include "rdom/graph.hpp"
#include "rdom/oracle.hpp"
#include "rdom/rdf.hpp"
#include "rdom/structure.hpp"

namespace rdom {

enum class Route { Th1, Th2, Th3, MainDecomposition, OracleFallback };

const char* route_name(Route r);

// One assembly step: a seed piece, a decomposition component or an absorbed
// attachment.  `declared` is 2*covered plus the excess allowed so far.
struct StepRecord {
  std::string kind;
  int covered = 0;
  int weight = 0;
  int declared = 0;
  bool frontier_ok = true;
  bool weight_ok() const { return weight <= declared; }
};

struct CertificateChecks {
  bool rdf_valid = false;
  bool bound_ok = false;
  std::optional<bool> gallai_ok;  // only when the oracle ran
};

struct BoundCertificate {
  int k = 0;
  int n = 0;
  // (4k+8)n / (6k+11), unreduced
  std::int64_t bound_num = 0;
  std::int64_t bound_den = 1;
  RomanFunction witness;
  int witness_weight = 0;
  Route route = Route::OracleFallback;
  // (2k+3)n / (6k+11)
  std::int64_t diff_num = 0;
  std::int64_t diff_den = 1;
  int triple_weight = 0;  // 0 under OracleFallback
  std::vector<StepRecord> trace;
  std::string fallback_reason;
  CertificateChecks checks;

  bool tight() const { return std::int64_t{witness_weight} * bound_den == bound_num; }
};

struct EngineOptions {
  int oracle_limit = kDefaultOracleLimit;
  // cycles visited while choosing a route before giving up on the detection
  std::int64_t cycle_cap = 200000;
  DecompositionOptions decomposition;
};

// Pieces of a decomposition, labelled in place on a host-sized triple.  Both return
// the excess over 2|V(component)|.
int label_strong_component(RdfTriple& t, const ComponentClass& c);
// `avoid` lists vertices that must come out strong if at all possible (neighbours
// outside the component); the cheapest layout that manages it is used.
int label_nonstrong_component(const Graph& g, RdfTriple& t, const ComponentClass& c, const VertexSet& avoid);

AnchoredTriple triple_for_strong_component(const Graph& h, const ComponentClass& cls, int k);
AnchoredTriple triple_for_nonstrong_component(const Graph& h, const ComponentClass& cls, int k);

BoundCertificate construct_bound_triple(const Graph& g, int k, const EngineOptions& opt = {});

// Re-derives everything in `cert` from g and k.  With `use_oracle` the exact values
// are compared as well (n within the oracle limit).
bool certify_bound(const Graph& g, int k, BoundCertificate& cert, bool use_oracle = false,
                   int oracle_limit = kDefaultOracleLimit);

// w(6k+11) <= (4k+8)n
bool within_bound(std::int64_t weight, int n, int k);
// (n-w)(6k+11) >= (2k+3)n
bool differential_ok(std::int64_t weight, int n, int k);

}  // namespace rdom
