#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

struct HypothesisReport {
  int k = 0;
  int n = 0;
  bool n_ok = false;      // n >= 6k+9
  bool delta_ok = false;  // min degree >= 2
  std::vector<VertexCycle> forbidden_found;
  bool passes = false;
};

HypothesisReport check_hypotheses(const Graph& g, int k);

// Forbidden lengths for k: 5, 8, ..., 3k+2.
bool is_forbidden_length(int len, int k);

// Audit: every 2 mod 3 cycle is at least 3k+5 long if induced, 6k+8 if not.
// Throws HypothesisUnmet if g has min degree < 2, a forbidden induced cycle, or a
// cycle of length 0 mod 3.
bool residue_floor_check(const Graph& g, int k);

enum class AttachmentKind { Ear, PendantCycle, PendantTailedCycle };

struct Attachment {
  AttachmentKind kind = AttachmentKind::Ear;
  std::vector<Vertex> path;   // Ear: v_1..v_t
  std::vector<Vertex> cycle;  // x_1..x_m; x_1 meets the tail or the covered set
  std::vector<Vertex> tail;   // y_1..y_l with y_1 ~ x_1 and y_l next to the covered set
  std::vector<Vertex> anchors;  // Ear: {u, v} with u ~ v_1, v ~ v_t; otherwise {u}
};

Attachment find_attachment(const Graph& g, const VertexSet& covered);

// Independent re-check of an attachment's adjacency and closure conditions.
bool attachment_is_closed(const Graph& g, const VertexSet& covered, const Attachment& a);

enum class ClassTag { F0, F02, F22, F3, Brs, Other };

const char* tag_name(ClassTag t);

struct TailedPart {
  std::vector<Vertex> cycle;  // starts at x_1, the tail's attachment
  std::vector<Vertex> tail;   // y_1 ~ x_1 ... y_l ~ hub
};

// Witness layout per tag (vertex ids are those of the classified graph):
//   F0   cycles = {C}
//   F02  cycles = {C2, C0}; connectors = {[x2, interior.., x0]}; both cycles start at
//        their connector end
//   F22  cycles = {C1, C2}; connectors = {[x1, x2]}
//   F3   cycles = {A2, A0, D1, D2}; connectors = {F02 path, [d1, d2], Q} where Q runs
//        from its F02 end to D1; D1 starts at the Q end, D2 at the D1-D2 edge
//   Brs  special_vertex = hub; near_cycles start at the hub neighbour; tailed parts
struct ComponentClass {
  ClassTag tag = ClassTag::Other;
  int r = 0;
  int s = 0;
  std::optional<Vertex> special_vertex;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<std::vector<Vertex>> connectors;
  std::vector<std::vector<Vertex>> near_cycles;
  std::vector<TailedPart> tailed;
  // F3 only: the vertex of D1 joined to D2
  std::optional<Vertex> d1_link;
};

ComponentClass classify_component(const Graph& h);
bool is_strong_class(const ComponentClass& c);

// Shortest cycle inside `allowed` whose length mod 3 is in `residues` (bit r for
// residue r), first in canonical order among equal lengths.
std::optional<VertexCycle> find_short_bad_cycle(const Graph& g, std::uint64_t allowed, unsigned residues);

struct DecompComponent {
  VertexSet vertices;
  std::vector<Edge> edges;  // structural edges (host ids); chords are left out
  ComponentClass cls;       // witnesses in host ids
};

struct Decomposition {
  VertexSet g1_vertices;
  std::vector<DecompComponent> g2_components;
  std::string strategy;  // which seed ordering produced it
};

struct DecompositionOptions {
  int shuffles = 24;
  std::uint64_t seed = 0x5eed;
};

Decomposition disjoint_bad_cycle_decomposition(const Graph& g, const DecompositionOptions& opt = {});

// Empty string if valid, otherwise the first violated condition.
std::string validate_decomposition(const Graph& g, const Decomposition& d);

// Re-express a classification of a subgraph in host ids.
ComponentClass lift_class(const ComponentClass& c, const std::vector<Vertex>& to_host);

}  // namespace rdom
