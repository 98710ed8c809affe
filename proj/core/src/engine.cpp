#include "rdom/engine.hpp"

#include <algorithm>
#include <numeric>

#include "rdom/error.hpp"

namespace rdom {

namespace {

using Seq = std::vector<Vertex>;
using Mask = std::uint64_t;

constexpr unsigned kBad = (1u << 0) | (1u << 2);

Seq rotate_to(Seq c, Vertex v) {
  auto it = std::find(c.begin(), c.end(), v);
  std::rotate(c.begin(), it, c.end());
  return c;
}

// same start, opposite direction
Seq flip(Seq c) {
  if (c.size() > 1) std::reverse(c.begin() + 1, c.end());
  return c;
}

Seq reversed(Seq s) {
  std::reverse(s.begin(), s.end());
  return s;
}

Seq concat(std::initializer_list<Seq> parts) {
  Seq out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

int total_weight(const RdfTriple& t) { return t[0].weight() + t[1].weight() + t[2].weight(); }

bool strong_in(const RdfTriple& t, Vertex v) { return t[0][v] == 2 || t[1][v] == 2 || t[2][v] == 2; }

bool all_strong(const RdfTriple& t, const VertexSet& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return strong_in(t, v); });
}

int gadget_between(RdfTriple& t, const Seq& c1, const Seq& c2, const Seq& z) {
  int item = gadget_item_for(static_cast<int>(c1.size() % 3), static_cast<int>(c2.size() % 3),
                             static_cast<int>(z.size()));
  if (item == 0) throw Error(Errc::WrongClass, "no gadget for these residues");
  labels::gadget(t, item, c1, c2, z);
  return item >= 5 && item <= 7 ? 2 : 1;
}

// +1 for a 2 mod 3 cycle, +0 for 1 mod 3
int pendant(RdfTriple& t, Vertex anchor, const Seq& cycle, const Seq& tail) {
  if (tail.empty()) labels::pendant_cycle(t, anchor, cycle);
  else labels::pendant_tailed_cycle(t, anchor, cycle, tail);
  return cycle.size() % 3 == 2 ? 1 : 0;
}

VertexSet class_vertices(const ComponentClass& c) {
  Seq vs;
  auto add = [&](const Seq& s) { vs.insert(vs.end(), s.begin(), s.end()); };
  for (const auto& s : c.cycles) add(s);
  for (const auto& s : c.connectors) add(s);
  for (const auto& s : c.near_cycles) add(s);
  for (const auto& tp : c.tailed) {
    add(tp.cycle);
    add(tp.tail);
  }
  if (c.special_vertex) vs.push_back(*c.special_vertex);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Seq interior(const Seq& path) {
  if (path.size() < 2) return {};
  return Seq(path.begin() + 1, path.end() - 1);
}

// Brs with at most two near cycles: the first two pieces through the hub form a
// 2 mod 3 gadget, the rest hang off the hub.
int label_brs_small(RdfTriple& t, const ComponentClass& c) {
  const Vertex z = *c.special_vertex;
  int excess;
  std::size_t used_tails = 0;
  if (c.s == 2) {
    excess = gadget_between(t, c.near_cycles[0], c.near_cycles[1], {z});
  } else if (c.s == 1) {
    const auto& tp = c.tailed[0];
    excess = gadget_between(t, c.near_cycles[0], tp.cycle, concat({{z}, reversed(tp.tail)}));
    used_tails = 1;
  } else {
    const auto& a = c.tailed[0];
    const auto& b = c.tailed[1];
    excess = gadget_between(t, a.cycle, b.cycle, concat({a.tail, {z}, reversed(b.tail)}));
    used_tails = 2;
  }
  for (std::size_t i = used_tails; i < c.tailed.size(); ++i) excess += pendant(t, z, c.tailed[i].cycle, c.tailed[i].tail);
  return excess;
}

}  // namespace

const char* route_name(Route r) {
  switch (r) {
    case Route::Th1: return "Th1";
    case Route::Th2: return "Th2";
    case Route::Th3: return "Th3";
    case Route::MainDecomposition: return "MainDecomposition";
    case Route::OracleFallback: return "OracleFallback";
  }
  return "OracleFallback";
}

bool within_bound(std::int64_t weight, int n, int k) {
  return weight * (6 * k + 11) <= std::int64_t{4 * k + 8} * n;
}

bool differential_ok(std::int64_t weight, int n, int k) {
  return (n - weight) * (6 * k + 11) >= std::int64_t{2 * k + 3} * n;
}

int label_strong_component(RdfTriple& t, const ComponentClass& c) {
  switch (c.tag) {
    case ClassTag::F0:
      labels::cycle(t, c.cycles[0]);
      return 0;
    case ClassTag::F02:
      return gadget_between(t, c.cycles[0], c.cycles[1], interior(c.connectors[0]));
    case ClassTag::F3: {
      int excess = gadget_between(t, c.cycles[0], c.cycles[1], interior(c.connectors[0]));
      const Seq& q = c.connectors[2];
      excess += pendant(t, q.front(), c.cycles[2], reversed(interior(q)));
      excess += pendant(t, *c.d1_link, c.cycles[3], {});
      return excess;
    }
    case ClassTag::Brs:
      if (c.s <= 2 && c.r + c.s >= 2) return label_brs_small(t, c);
      break;
    default:
      break;
  }
  throw Error(Errc::NotStrongClass, std::string(tag_name(c.tag)) + " is not a strong class");
}

int label_nonstrong_component(const Graph& g, RdfTriple& t, const ComponentClass& c, const VertexSet& avoid) {
  (void)g;
  if (c.tag == ClassTag::F22) {
    // the light layout leaves a third of each cycle weak; try all four directions
    for (int o = 0; o < 4; ++o) {
      Seq a = o & 1 ? flip(c.cycles[0]) : c.cycles[0];
      Seq b = o & 2 ? flip(c.cycles[1]) : c.cycles[1];
      RdfTriple trial = t;
      labels::f22_light(trial, a, b);
      if (all_strong(trial, avoid)) {
        t = std::move(trial);
        return 1;
      }
    }
    labels::gadget(t, 5, c.cycles[0], c.cycles[1], {});
    return 2;
  }
  if (c.tag == ClassTag::Brs && c.s >= 3) {
    const Vertex z = *c.special_vertex;
    RdfTriple trial = t;
    labels::star(trial, z, c.near_cycles);
    int excess = 4 - c.s;
    for (const auto& tp : c.tailed) excess += pendant(trial, z, tp.cycle, tp.tail);
    if (all_strong(trial, avoid)) {
      t = std::move(trial);
      return excess;
    }
    // every vertex strong, at one extra unit per piece beyond the first two
    excess = gadget_between(t, c.near_cycles[0], c.near_cycles[1], {z});
    for (std::size_t i = 2; i < c.near_cycles.size(); ++i) excess += pendant(t, z, c.near_cycles[i], {});
    for (const auto& tp : c.tailed) excess += pendant(t, z, tp.cycle, tp.tail);
    return excess;
  }
  throw Error(Errc::WrongClass, std::string(tag_name(c.tag)) + " is not handled as a non-strong component");
}

AnchoredTriple triple_for_strong_component(const Graph& h, const ComponentClass& cls, int k) {
  (void)k;
  if (!is_strong_class(cls)) throw Error(Errc::NotStrongClass, std::string(tag_name(cls.tag)) + " is not a strong class");
  AnchoredTriple a;
  a.graph = h;
  a.triple = empty_triple(h.n());
  int excess = label_strong_component(a.triple, cls);
  a.weight_claimed = 2 * h.n() + excess;
  a.strong_claimed.resize(h.n());
  std::iota(a.strong_claimed.begin(), a.strong_claimed.end(), 0);
  return a;
}

AnchoredTriple triple_for_nonstrong_component(const Graph& h, const ComponentClass& cls, int k) {
  (void)k;
  AnchoredTriple a;
  a.graph = h;
  a.triple = empty_triple(h.n());
  if (cls.tag == ClassTag::Brs && cls.s >= 3) {
    a.weight_claimed = 2 * h.n() + label_nonstrong_component(h, a.triple, cls, {});
    a.strong_claimed = strong_vertices(a.triple);
    return a;
  }
  if (cls.tag != ClassTag::F22) throw Error(Errc::WrongClass, "expected F22 or Brs with s >= 3");
  VertexSet own = class_vertices(cls);
  if (static_cast<int>(own.size()) == h.n()) {
    a.weight_claimed = 2 * h.n() + label_nonstrong_component(h, a.triple, cls, {});
    a.strong_claimed = strong_vertices(a.triple);
    return a;
  }
  // F22 with a pendant 1 mod 3 cycle (maybe tailed) on one of its cycles: gadget
  // items 2-4 between that cycle and the pendant, the other cycle hangs off the link
  Attachment at = find_attachment(h, own);
  if (at.kind == AttachmentKind::Ear || at.cycle.size() % 3 != 1 ||
      static_cast<int>(own.size() + at.cycle.size() + at.tail.size()) != h.n())
    throw Error(Errc::WrongClass, "extra vertices are not a single pendant 1 mod 3 cycle");
  Vertex u = at.anchors[0];
  int home = std::find(cls.cycles[0].begin(), cls.cycles[0].end(), u) != cls.cycles[0].end() ? 0 : 1;
  const Seq& other = cls.cycles[1 - home];
  Vertex link = cls.cycles[home][0];
  for (int o = 0; o < 2; ++o) {
    RdfTriple t = empty_triple(h.n());
    Seq c1 = rotate_to(cls.cycles[home], u);
    if (o) c1 = flip(c1);
    int excess = gadget_between(t, c1, at.cycle, reversed(at.tail));
    if (!strong_in(t, link)) continue;
    excess += pendant(t, link, other, {});
    a.triple = std::move(t);
    a.weight_claimed = 2 * h.n() + excess;
    a.strong_claimed = strong_vertices(a.triple);
    return a;
  }
  throw Error(Errc::WrongClass, "link vertex never strong");
}

namespace {

// Covered-set bookkeeping shared by every route.
struct Assembly {
  const Graph& g;
  RdfTriple t;
  std::vector<char> covered;
  int ncov = 0;
  int excess = 0;
  std::vector<StepRecord> trace;
  const std::vector<char>* outside = nullptr;  // frontier override

  explicit Assembly(const Graph& graph) : g(graph), t(empty_triple(graph.n())), covered(graph.n(), 0) {}

  void cover(const Seq& vs) {
    for (Vertex v : vs)
      if (!covered[v]) {
        covered[v] = 1;
        ++ncov;
      }
  }

  VertexSet covered_set() const {
    VertexSet s;
    for (Vertex v = 0; v < g.n(); ++v)
      if (covered[v]) s.push_back(v);
    return s;
  }

  bool frontier_ok() const {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!covered[v] || strong_in(t, v)) continue;
      for (Vertex w : g.adj(v))
        if (outside ? (*outside)[w] : !covered[w]) return false;
    }
    return true;
  }

  void record(const std::string& kind) {
    StepRecord r;
    r.kind = kind;
    r.covered = ncov;
    r.weight = total_weight(t);
    r.declared = 2 * ncov + excess;
    r.frontier_ok = frontier_ok();
    trace.push_back(r);
    if (!r.weight_ok()) throw Error(Errc::ConditionViolated, kind + ": running weight over its allowance");
    if (!r.frontier_ok) throw Error(Errc::ConditionViolated, kind + ": weak vertex on the frontier");
  }

  // Absorb the rest of the graph one attachment at a time.
  void grow() {
    while (ncov < g.n()) {
      Attachment a = find_attachment(g, covered_set());
      std::string kind;
      if (a.kind == AttachmentKind::Ear) {
        labels::ear(t, a.anchors[0], a.anchors[1], a.path);
        cover(a.path);
        kind = "ear";
      } else {
        excess += pendant(t, a.anchors[0], a.cycle, a.tail);
        cover(a.cycle);
        cover(a.tail);
        kind = a.tail.empty() ? "pendant-cycle" : "pendant-tailed-cycle";
      }
      record(kind);
    }
  }
};

struct RouteFailure {
  std::string reason;
};

void th1(Assembly& as) {
  const Graph& g = as.g;
  Seq z = longest_path(g).vertices;
  int j = 0;
  for (int i = 1; i < static_cast<int>(z.size()); ++i)
    if (g.has_edge(z[0], z[i])) j = i;
  if (j < 2) throw RouteFailure{"longest path start has no back edge"};
  // cycle z_j, z_{j-1}, ..., z_1 so that x_1 meets the tail and x_m = z_1
  Seq cyc(z.begin(), z.begin() + j + 1);
  std::reverse(cyc.begin(), cyc.end());
  Seq tail(z.begin() + j + 1, z.end());
  if (cyc.size() % 3 != 1) throw RouteFailure{"seed cycle is not 1 mod 3"};
  if (tail.empty()) labels::cycle(as.t, cyc);
  else labels::tailed_cycle(as.t, cyc, tail);
  as.excess = 1;
  as.cover(cyc);
  as.cover(tail);
  as.record(tail.empty() ? "seed-cycle" : "seed-tailed-cycle");
  as.grow();
}

void th2(Assembly& as, const Seq& c) {
  labels::cycle(as.t, c);
  as.cover(c);
  as.record("seed-cycle");
  as.grow();
}

void th3(Assembly& as, const Seq& c0) {
  const Graph& g = as.g;
  const int m = static_cast<int>(c0.size());
  as.cover(c0);
  if (m == g.n()) {
    labels::cycle(as.t, c0);
    as.excess = 2;
    as.record("seed-cycle");
    return;
  }
  Attachment a = find_attachment(g, as.covered_set());
  std::string kind;
  if (a.kind == AttachmentKind::Ear) {
    const int l = static_cast<int>(a.path.size());
    Vertex u = a.anchors[0], v = a.anchors[1];
    if (u == v) {
      Seq c1 = rotate_to(c0, u);
      Seq c2 = concat({{u}, a.path});
      labels::gadget(as.t, 1, c1, c2, {});
      as.excess = 1;
      kind = "seed-gadget-1";
    } else if (l % 3 == 0) {
      labels::cycle(as.t, c0);
      labels::ear(as.t, u, v, a.path);
      as.excess = 2;
      kind = "seed-cycle-ear";
    } else {
      Seq x = rotate_to(c0, u);
      int j = static_cast<int>(std::find(x.begin(), x.end(), v) - x.begin()) + 1;
      bool legal = l % 3 == 1 ? j % 3 != 2 : j % 3 == 2;
      if (!legal) throw RouteFailure{"chordal ear position outside both cases"};
      labels::chordal_ear(as.t, x, a.path, j);
      as.excess = 1;
      kind = "seed-chordal-ear";
    }
    as.cover(a.path);
  } else {
    if (a.cycle.size() % 3 != 1) throw RouteFailure{"pendant cycle is not 1 mod 3"};
    Seq c1 = rotate_to(c0, a.anchors[0]);
    as.excess = gadget_between(as.t, c1, a.cycle, reversed(a.tail));
    as.cover(a.cycle);
    as.cover(a.tail);
    kind = "seed-gadget";
  }
  as.record(kind);
  as.grow();
}

void main_route(Assembly& as, const Decomposition& d) {
  const Graph& g = as.g;
  std::vector<char> in_g1(g.n(), 0);
  for (Vertex v : d.g1_vertices) in_g1[v] = 1;
  // while G2 is being labelled the frontier that matters is G1, not the
  // components still waiting
  as.outside = &in_g1;
  for (const auto& comp : d.g2_components) {
    const auto& c = comp.cls;
    if (is_strong_class(c)) {
      as.excess += label_strong_component(as.t, c);
    } else {
      VertexSet avoid;
      for (Vertex v : comp.vertices)
        for (Vertex w : g.adj(v))
          if (in_g1[w]) {
            avoid.push_back(v);
            break;
          }
      as.excess += label_nonstrong_component(g, as.t, c, avoid);
    }
    as.cover(comp.vertices);
    as.record(std::string("component-") + tag_name(c.tag));
  }
  as.outside = nullptr;
  as.grow();
}

}  // namespace

namespace {

enum class Detect { Th1, Th2, Th3, Main, Unknown };

struct Detection {
  Detect kind = Detect::Unknown;
  Seq cycle;
  std::string note;
};

Detection detect_route(const Graph& g, const EngineOptions& opt) {
  Detection d;
  const Mask all = g.all_mask();
  if (!has_cycle_with_residue(g, all, kBad)) {
    d.kind = Detect::Th1;
    return d;
  }
  std::int64_t visited = 0;
  bool capped = false;
  if (has_cycle_with_residue(g, all, 1u << 0)) {
    bool found = false;
    for_each_cycle(g, all, g.n(), [&](const VertexCycle& c) {
      if (++visited > opt.cycle_cap) {
        capped = true;
        return false;
      }
      if (c.residue() != 0) return true;
      if (has_cycle_with_residue(g, all & ~to_mask(VertexSet(c.vertices)), kBad)) return true;
      d.cycle = c.vertices;
      found = true;
      return false;
    });
    if (found) {
      d.kind = Detect::Th2;
      return d;
    }
    d.kind = capped ? Detect::Unknown : Detect::Main;
    if (capped) d.note = "cycle enumeration cap reached";
    return d;
  }
  // no 0 mod 3 cycle: Th3 unless two 2 mod 3 cycles are disjoint
  bool disjoint = false;
  for_each_cycle(g, all, g.n(), [&](const VertexCycle& c) {
    if (++visited > opt.cycle_cap) {
      capped = true;
      return false;
    }
    if (c.residue() != 2) return true;
    Seq sorted_c = c.vertices;
    std::sort(sorted_c.begin(), sorted_c.end());
    if (has_cycle_with_residue(g, all & ~to_mask(sorted_c), 1u << 2)) {
      disjoint = true;
      return false;
    }
    return true;
  });
  if (disjoint) {
    d.kind = Detect::Main;
  } else if (capped) {
    d.note = "cycle enumeration cap reached";
  } else {
    d.kind = Detect::Th3;
    d.cycle = find_short_bad_cycle(g, all, 1u << 2)->vertices;
  }
  return d;
}

void fill_rationals(BoundCertificate& c) {
  c.bound_num = std::int64_t{4 * c.k + 8} * c.n;
  c.bound_den = 6 * c.k + 11;
  c.diff_num = std::int64_t{2 * c.k + 3} * c.n;
  c.diff_den = 6 * c.k + 11;
}

}  // namespace

BoundCertificate construct_bound_triple(const Graph& g, int k, const EngineOptions& opt) {
  if (k < 0) throw Error(Errc::HypothesisUnmet, "k must be non-negative");
  if (!g.maskable()) throw Error(Errc::TooLarge, "engine handles n <= 64");
  HypothesisReport h = check_hypotheses(g, k);
  if (!h.passes) {
    std::string why = !h.n_ok ? "n below 6k+9" : !h.delta_ok ? "minimum degree below 2" : "forbidden induced cycle";
    throw Error(Errc::HypothesisUnmet, why);
  }
  if (!g.connected()) throw Error(Errc::Disconnected, "engine expects a connected graph");

  BoundCertificate cert;
  cert.k = k;
  cert.n = g.n();
  fill_rationals(cert);

  std::string failure;
  std::optional<Assembly> done;
  Route route = Route::OracleFallback;
  try {
    Detection det = detect_route(g, opt);
    Detect kind = det.kind;
    std::optional<Decomposition> dec;
    if (kind == Detect::Unknown || kind == Detect::Main) {
      try {
        dec = disjoint_bad_cycle_decomposition(g, opt.decomposition);
        kind = Detect::Main;
      } catch (const Error& e) {
        throw RouteFailure{det.note.empty() ? std::string(e.what()) : det.note};
      }
    }
    Assembly as(g);
    switch (kind) {
      case Detect::Th1:
        route = Route::Th1;
        th1(as);
        break;
      case Detect::Th2:
        route = Route::Th2;
        th2(as, det.cycle);
        break;
      case Detect::Th3:
        route = Route::Th3;
        th3(as, det.cycle);
        break;
      default:
        route = Route::MainDecomposition;
        main_route(as, *dec);
        break;
    }
    done.emplace(std::move(as));
  } catch (const RouteFailure& f) {
    failure = f.reason;
  } catch (const Error& e) {
    failure = std::string(route_name(route)) + ": " + e.what();
  }

  if (done) {
    TripleReport rep = validate_triple(g, done->t);
    cert.trace = done->trace;
    cert.triple_weight = rep.weight_total;
    if (!rep.all_valid()) {
      failure = std::string(route_name(route)) + ": assembled triple is not a triple of RDFs";
    } else if (!within_bound(rep.weights[rep.min_index], g.n(), k)) {
      failure = std::string(route_name(route)) + ": lightest function weighs " +
                std::to_string(rep.weights[rep.min_index]) + ", over the bound";
    } else {
      cert.route = route;
      cert.witness = done->t[rep.min_index];
      cert.witness_weight = rep.weights[rep.min_index];
      cert.checks.rdf_valid = true;
      cert.checks.bound_ok = true;
      return cert;
    }
  }

  if (g.n() > std::min(opt.oracle_limit, kMaskLimit - 1))
    throw Error(Errc::TooLargeForFallback, failure + "; n=" + std::to_string(g.n()) + " is past the oracle limit");
  ExactResult ex = gamma_r_exact(g, opt.oracle_limit);
  cert.route = Route::OracleFallback;
  cert.fallback_reason = failure;
  cert.witness = ex.witness;
  cert.witness_weight = ex.value;
  cert.checks.rdf_valid = is_rdf(g, ex.witness);
  cert.checks.bound_ok = within_bound(ex.value, g.n(), k);
  return cert;
}

bool certify_bound(const Graph& g, int k, BoundCertificate& cert, bool use_oracle, int oracle_limit) {
  if (cert.witness.size() != g.n() || !is_rdf(g, cert.witness))
    throw Error(Errc::InvalidWitness, "witness is not a Roman dominating function of the graph");
  if (cert.witness.weight() != cert.witness_weight)
    throw Error(Errc::InvalidWitness, "recorded weight " + std::to_string(cert.witness_weight) + " but the witness weighs " +
                                          std::to_string(cert.witness.weight()));
  if (cert.k != k || cert.n != g.n()) throw Error(Errc::InvalidWitness, "certificate was made for another (n, k)");
  fill_rationals(cert);
  cert.checks.rdf_valid = true;
  cert.checks.bound_ok = within_bound(cert.witness_weight, g.n(), k) && differential_ok(cert.witness_weight, g.n(), k);
  if (use_oracle) {
    ExactResult gr = gamma_r_exact(g, oracle_limit);
    ExactResult df = differential_exact(g, oracle_limit);
    cert.checks.gallai_ok = gr.value + df.value == g.n() && gr.value <= cert.witness_weight &&
                            g.n() - cert.witness_weight <= df.value;
  }
  if (!cert.checks.bound_ok) {
    std::string dump = "graph " + std::to_string(g.n()) + " " + std::to_string(g.m()) + ":";
    for (auto [u, v] : g.edges()) dump += " " + std::to_string(u) + "-" + std::to_string(v);
    throw Error(Errc::BoundViolated, "witness weight " + std::to_string(cert.witness_weight) + " exceeds " +
                                         std::to_string(cert.bound_num) + "/" + std::to_string(cert.bound_den) + "; " + dump);
  }
  return true;
}

}  // namespace rdom
