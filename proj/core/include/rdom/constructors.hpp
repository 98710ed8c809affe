#pragma once

#include <vector>

#include "rdom/graph.hpp"
#include "rdom/rdf.hpp"

namespace rdom {

struct AnchoredTriple {
  Graph graph;
  RdfTriple triple;
  VertexSet strong_claimed;
  int weight_claimed = 0;
};

enum class ConnectorKind { Identify, Edge, Path };

struct Connector {
  ConnectorKind kind = ConnectorKind::Edge;
  int length = 0;  // interior vertex count for Path
};

inline constexpr int kStarItem = 11;

struct GadgetSpec {
  int item = 0;  // 1..10, or kStarItem
  int n1 = 0;
  int n2 = 0;
  Connector connector;
  std::vector<int> lengths;  // star only
};

// Vertex names x_i are 1-based; every builder below maps x_i to the (i-1)-th entry
// of its sequence.  Builders that create graphs number vertices as:
//   cycle            x_1..x_t                  -> 0..t-1
//   tailed cycle     x_1..x_m, y_1..y_l         -> 0..m-1, m..m+l-1   (x_1 ~ y_1)
//   gadget           C1, C2, z_1..z_L           -> C1 first, C2 next, path last
//                    (item 1 shares x_1; C2 then skips its first vertex)
//   star             hub, then each cycle       -> 0, 1..
//   chordal ear      x_1..x_m, y_1..y_l         -> 0..m-1, m..   (y_1 ~ x_1, y_l ~ x_j)
// Extensions append the new vertices after the base graph in the same order.

AnchoredTriple triple_for_cycle(int t);
AnchoredTriple triple_for_tailed_cycle(int m, int l);
AnchoredTriple extend_along_ear(const AnchoredTriple& base, Vertex u, Vertex v, int l);
AnchoredTriple attach_pendant_cycle(const AnchoredTriple& base, Vertex u, int t);
AnchoredTriple attach_pendant_tailed_cycle(const AnchoredTriple& base, Vertex u, int m, int l);
AnchoredTriple two_cycle_gadget(const GadgetSpec& spec);
AnchoredTriple star_of_cycles(const std::vector<int>& lengths);
AnchoredTriple cycle_with_chordal_ear(int p, int l, int j);

// Label writers on an arbitrary host.  Each takes the vertex sequences of the piece
// being labelled and raises labels (never lowers them) in the host-sized triple.
namespace labels {

using Seq = std::vector<Vertex>;

// Path ys with u ~ y_1 and v ~ y_l; u and v must already be strong.
void ear(RdfTriple& t, Vertex u, Vertex v, const Seq& ys);
// Cycle xs with u ~ x_1; length 1 or 2 mod 3.
void pendant_cycle(RdfTriple& t, Vertex u, const Seq& xs);
// Cycle xs, tail ys with x_1 ~ y_1 and y_l ~ u; cycle length 1 or 2 mod 3.
void pendant_tailed_cycle(RdfTriple& t, Vertex u, const Seq& xs, const Seq& ys);
// Standalone cycle.  Residue 0: weight 2t, all strong.  Residue 1: 2t+1, x_t weak.
// Residue 2: 2t+2, all strong.
void cycle(RdfTriple& t, const Seq& xs);
// Cycle xs of length 1 mod 3 with tail ys, x_1 ~ y_1.
void tailed_cycle(RdfTriple& t, const Seq& xs, const Seq& ys);
// Two-cycle gadget, items 1..10.  For item 1, c2[0] == c1[0].
void gadget(RdfTriple& t, int item, const Seq& c1, const Seq& c2, const Seq& zs);
void star(RdfTriple& t, Vertex hub, const std::vector<Seq>& cycles);
// Cycle of length 2 mod 3 with ear ys, y_1 ~ x_1 and y_l ~ x_j (1-based j).
void chordal_ear(RdfTriple& t, const Seq& xs, const Seq& ys, int j);
// Two 2-mod-3 cycles joined by the edge c1[0] c2[0]; weight 2n+1.  Only positions
// 1 and 0 mod 3 (1-based) of each cycle end up strong.
void f22_light(RdfTriple& t, const Seq& c1, const Seq& c2);

}  // namespace labels

// Gadget item for the given residues and connector interior length, or 0 if none.
int gadget_item_for(int n1_res, int n2_res, int path_len);

}  // namespace rdom
