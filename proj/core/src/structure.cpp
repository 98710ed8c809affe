#include "rdom/structure.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

#include "rdom/error.hpp"

namespace rdom {

namespace {

using Seq = std::vector<Vertex>;

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet sorted(Seq s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Seq rotate_to(Seq c, Vertex v) {
  auto it = std::find(c.begin(), c.end(), v);
  std::rotate(c.begin(), it, c.end());
  return c;
}

}  // namespace

bool is_forbidden_length(int len, int k) { return len >= 5 && len <= 3 * k + 2 && len % 3 == 2; }

HypothesisReport check_hypotheses(const Graph& g, int k) {
  HypothesisReport r;
  r.k = k;
  r.n = g.n();
  r.n_ok = g.n() >= 6 * k + 9;
  r.delta_ok = g.n() > 0 && g.min_degree() >= 2;
  if (k >= 1)
    for (auto& c : induced_cycles_up_to(g, 3 * k + 2))
      if (is_forbidden_length(static_cast<int>(c.size()), k)) r.forbidden_found.push_back(std::move(c));
  r.passes = r.n_ok && r.delta_ok && r.forbidden_found.empty();
  return r;
}

bool residue_floor_check(const Graph& g, int k) {
  auto h = check_hypotheses(g, k);
  if (!h.delta_ok) throw Error(Errc::HypothesisUnmet, "minimum degree below 2");
  if (!h.forbidden_found.empty()) throw Error(Errc::HypothesisUnmet, "forbidden induced cycle present");
  if (has_cycle_with_residue(g, g.all_mask(), 1u << 0)) throw Error(Errc::HypothesisUnmet, "cycle of length 0 mod 3");
  bool ok = true;
  for_each_cycle(g, g.all_mask(), g.n(), [&](const VertexCycle& c) {
    if (c.residue() != 2) return true;
    int len = static_cast<int>(c.size());
    int floor = is_induced_cycle(g, c) ? 3 * k + 5 : 6 * k + 8;
    if (len < floor) ok = false;
    return ok;
  });
  return ok;
}

Attachment find_attachment(const Graph& g, const VertexSet& covered_in) {
  const int n = g.n();
  VertexSet covered = sorted(covered_in);
  if (covered.empty() || static_cast<int>(covered.size()) >= n)
    throw Error(Errc::NoAttachment, "covered set must be a nonempty proper subset");
  std::vector<char> in_x(n, 0);
  for (Vertex v : covered) {
    if (v < 0 || v >= n) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
    in_x[v] = 1;
  }
  auto xnbrs = [&](Vertex v) {
    Seq out;
    for (Vertex w : g.adj(v))
      if (in_x[w]) out.push_back(w);
    return out;
  };

  // Longest path in the uncovered part whose first vertex sees the covered set;
  // lexicographically smallest among the longest.
  Seq best, cur;
  std::vector<char> on(n, 0);
  std::vector<int> mark(n, 0);
  int stamp = 0;
  auto reach = [&](Vertex v) {
    ++stamp;
    Seq st{v};
    mark[v] = stamp;
    int cnt = 0;
    while (!st.empty()) {
      Vertex x = st.back();
      st.pop_back();
      ++cnt;
      for (Vertex w : g.adj(x))
        if (!in_x[w] && !on[w] && mark[w] != stamp) {
          mark[w] = stamp;
          st.push_back(w);
        }
    }
    return cnt;
  };
  int uncovered = n - static_cast<int>(covered.size());
  bool done = false;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (cur.size() > best.size()) {
      best = cur;
      if (static_cast<int>(best.size()) == uncovered) done = true;
    }
    for (Vertex w : g.adj(v)) {
      if (done) return;
      if (in_x[w] || on[w]) continue;
      if (static_cast<int>(cur.size()) + reach(w) <= static_cast<int>(best.size())) continue;
      on[w] = 1;
      cur.push_back(w);
      self(self, w);
      cur.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < n && !done; ++s) {
    if (in_x[s] || xnbrs(s).empty()) continue;
    on[s] = 1;
    cur.assign(1, s);
    dfs(dfs, s);
    on[s] = 0;
  }
  if (best.empty()) throw Error(Errc::NoAttachment, "no uncovered vertex touches the covered set");

  Attachment a;
  const int t = static_cast<int>(best.size());
  Vertex last = best.back();
  auto last_x = xnbrs(last);
  if (!last_x.empty()) {
    a.kind = AttachmentKind::Ear;
    a.path = best;
    auto first_x = xnbrs(best.front());
    if (t == 1) {
      a.anchors = {first_x[0], first_x.size() > 1 ? first_x[1] : first_x[0]};
    } else {
      Vertex shared = -1;
      for (Vertex w : first_x)
        if (std::binary_search(last_x.begin(), last_x.end(), w)) {
          shared = w;
          break;
        }
      if (shared >= 0) a.anchors = {shared, shared};
      else a.anchors = {first_x[0], last_x[0]};
    }
    return a;
  }
  int j = -1;
  for (int i = 0; i + 1 < t; ++i)
    if (g.has_edge(last, best[i])) {
      j = i;
      break;
    }
  if (j < 0 || t - j < 3) throw Error(Errc::NoAttachment, "path end has degree below 2");
  a.anchors = {xnbrs(best.front())[0]};
  if (j == 0) {
    a.kind = AttachmentKind::PendantCycle;
    a.cycle = best;
  } else {
    a.kind = AttachmentKind::PendantTailedCycle;
    a.cycle.assign(best.begin() + j, best.end());
    a.tail.assign(best.rend() - j, best.rend());
  }
  return a;
}

bool attachment_is_closed(const Graph& g, const VertexSet& covered_in, const Attachment& a) {
  const int n = g.n();
  VertexSet covered = sorted(covered_in);
  auto in_x = [&](Vertex v) { return contains(covered, v); };
  Seq body = a.kind == AttachmentKind::Ear ? a.path : a.cycle;
  body.insert(body.end(), a.tail.begin(), a.tail.end());
  for (Vertex v : body)
    if (v < 0 || v >= n || in_x(v)) return false;
  VertexSet bset = sorted(body);
  if (bset.size() != body.size()) return false;
  auto closed = [&](Vertex v) {
    for (Vertex w : g.adj(v))
      if (!in_x(w) && !contains(bset, w)) return false;
    return true;
  };
  for (Vertex u : a.anchors)
    if (!in_x(u)) return false;

  if (a.kind == AttachmentKind::Ear) {
    if (a.path.empty() || a.anchors.size() != 2) return false;
    if (!is_path_in(g, VertexPath{a.path})) return false;
    if (!g.has_edge(a.anchors[0], a.path.front()) || !g.has_edge(a.anchors[1], a.path.back())) return false;
    return closed(a.path.front()) && closed(a.path.back());
  }
  if (a.anchors.size() != 1 || !is_cycle_in(g, VertexCycle{a.cycle})) return false;
  if (a.kind == AttachmentKind::PendantCycle) {
    if (!a.tail.empty() || !g.has_edge(a.anchors[0], a.cycle.front())) return false;
    return closed(a.cycle.back());
  }
  if (a.tail.empty() || !is_path_in(g, VertexPath{a.tail})) return false;
  if (!g.has_edge(a.tail.front(), a.cycle.front()) || !g.has_edge(a.tail.back(), a.anchors[0])) return false;
  return closed(a.cycle.back());
}

const char* tag_name(ClassTag t) {
  switch (t) {
    case ClassTag::F0: return "F0";
    case ClassTag::F02: return "F02";
    case ClassTag::F22: return "F22";
    case ClassTag::F3: return "F3";
    case ClassTag::Brs: return "Brs";
    case ClassTag::Other: return "Other";
  }
  return "Other";
}

namespace {

// Cycles of a graph whose blocks are all bridges or chordless cycles with no vertex
// on two cycles.  Returns false otherwise.
bool cactus_cycles(const Graph& h, std::vector<Seq>& cycles) {
  const int n = h.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    for (Vertex w : h.adj(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<Edge> b;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            b.push_back(e);
            if (e == Edge{v, w}) break;
          }
          blocks.push_back(std::move(b));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);

  std::vector<int> on_cycle(n, -1);
  for (auto& b : blocks) {
    if (b.size() == 1) continue;
    std::map<Vertex, Seq> nb;
    for (auto [u, v] : b) {
      nb[u].push_back(v);
      nb[v].push_back(u);
    }
    if (nb.size() != b.size()) return false;
    for (auto& [v, ws] : nb)
      if (ws.size() != 2) return false;
    Seq c;
    Vertex start = nb.begin()->first, prev = -1, cur = start;
    do {
      c.push_back(cur);
      const auto& ws = nb[cur];
      Vertex next = ws[0] != prev ? ws[0] : ws[1];
      prev = cur;
      cur = next;
    } while (cur != start);
    if (c.size() != nb.size()) return false;
    for (Vertex v : c) {
      if (on_cycle[v] >= 0) return false;
      on_cycle[v] = static_cast<int>(cycles.size());
    }
    cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Seq& a, const Seq& b) { return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end()); });
  return true;
}

ComponentClass classify_two(const Graph& h, const std::vector<Seq>& cycles, const std::vector<int>& on_cycle) {
  ComponentClass out;
  const int n = h.n();
  int cyc_vertices = static_cast<int>(cycles[0].size() + cycles[1].size());
  if (static_cast<int>(h.m()) != n + 1) return out;
  Vertex ends[2] = {-1, -1};
  for (int c = 0; c < 2; ++c)
    for (Vertex v : cycles[c]) {
      if (h.degree(v) == 3) {
        if (ends[c] >= 0) return out;
        ends[c] = v;
      } else if (h.degree(v) != 2) {
        return out;
      }
    }
  if (ends[0] < 0 || ends[1] < 0) return out;
  for (Vertex v = 0; v < n; ++v)
    if (on_cycle[v] < 0 && h.degree(v) != 2) return out;
  // walk the connector
  Seq path{ends[0]};
  Vertex prev = ends[0], cur = -1;
  for (Vertex w : h.adj(ends[0]))
    if (on_cycle[w] != 0) cur = w;
  if (cur < 0) return out;
  path.push_back(cur);
  while (on_cycle[cur] < 0) {
    Vertex next = h.adj(cur)[0] != prev ? h.adj(cur)[0] : h.adj(cur)[1];
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  if (path.back() != ends[1]) return out;
  if (static_cast<int>(path.size()) - 2 + cyc_vertices != n) return out;

  const int L = static_cast<int>(path.size()) - 2;
  int r0 = static_cast<int>(cycles[0].size() % 3), r1 = static_cast<int>(cycles[1].size() % 3);
  Seq a = rotate_to(cycles[0], ends[0]), b = rotate_to(cycles[1], ends[1]);
  if ((r0 == 0 && r1 == 2) || (r0 == 2 && r1 == 0)) {
    out.tag = ClassTag::F02;
    if (r0 == 2) {
      out.cycles = {a, b};
      out.connectors = {path};
    } else {
      out.cycles = {b, a};
      out.connectors = {Seq(path.rbegin(), path.rend())};
    }
    return out;
  }
  if (r0 != 2 || r1 != 2) return out;
  if (L == 0) {
    out.tag = ClassTag::F22;
    out.cycles = {a, b};
    out.connectors = {path};
  } else if (L == 1) {
    out.tag = ClassTag::Brs;
    out.r = 0;
    out.s = 2;
    out.special_vertex = path[1];
    out.near_cycles = {a, b};
  } else {
    out.tag = ClassTag::Brs;
    out.r = 1;
    out.s = 1;
    out.special_vertex = path[1];
    out.near_cycles = {a};
    TailedPart tp;
    tp.cycle = b;
    // y_1 next to the cycle, y_l next to the hub
    for (int i = L; i >= 2; --i) tp.tail.push_back(path[i]);
    out.tailed = {tp};
  }
  return out;
}

ComponentClass classify_brs(const Graph& h, const std::vector<Seq>& cycles, const std::vector<int>& on_cycle) {
  const int n = h.n();
  const int c = static_cast<int>(cycles.size());
  for (const auto& cy : cycles)
    if (cy.size() % 3 != 2) return {};
  for (Vertex z = 0; z < n; ++z) {
    if (on_cycle[z] >= 0 || h.degree(z) != c) continue;
    ComponentClass out;
    out.tag = ClassTag::Brs;
    out.special_vertex = z;
    std::vector<char> seen(n, 0);
    seen[z] = 1;
    bool ok = true;
    int covered = 1;
    for (Vertex w : h.adj(z)) {
      if (on_cycle[w] >= 0) {
        const auto& cy = cycles[on_cycle[w]];
        for (Vertex v : cy) {
          if (seen[v] || h.degree(v) != (v == w ? 3 : 2)) ok = false;
          seen[v] = 1;
        }
        covered += static_cast<int>(cy.size());
        out.near_cycles.push_back(rotate_to(cy, w));
        continue;
      }
      // tail from w toward its cycle
      Seq tail_rev{w};
      Vertex prev = z, cur = w;
      while (ok && on_cycle[cur] < 0) {
        if (h.degree(cur) != 2 || seen[cur]) {
          ok = false;
          break;
        }
        seen[cur] = 1;
        Vertex next = h.adj(cur)[0] != prev ? h.adj(cur)[0] : h.adj(cur)[1];
        prev = cur;
        cur = next;
        if (on_cycle[cur] < 0) tail_rev.push_back(cur);
      }
      if (!ok) break;
      const auto& cy = cycles[on_cycle[cur]];
      for (Vertex v : cy) {
        if (seen[v] || h.degree(v) != (v == cur ? 3 : 2)) ok = false;
        seen[v] = 1;
      }
      covered += static_cast<int>(cy.size() + tail_rev.size());
      TailedPart tp;
      tp.cycle = rotate_to(cy, cur);
      tp.tail.assign(tail_rev.rbegin(), tail_rev.rend());
      out.tailed.push_back(std::move(tp));
    }
    if (!ok || covered != n) continue;
    out.r = static_cast<int>(out.tailed.size());
    out.s = static_cast<int>(out.near_cycles.size());
    return out;
  }
  return {};
}

ComponentClass classify_f3(const Graph& h, const std::vector<Seq>& cycles, const std::vector<int>& on_cycle) {
  const int n = h.n();
  if (cycles.size() != 4) return {};
  int zeros = 0, twos = 0;
  for (const auto& c : cycles) {
    zeros += c.size() % 3 == 0;
    twos += c.size() % 3 == 2;
  }
  if (zeros != 1 || twos != 3) return {};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j || cycles[i].size() % 3 != 2 || cycles[j].size() % 3 != 2) continue;
      std::vector<char> in(n, 0);
      for (Vertex v : cycles[i]) in[v] = 1;
      for (Vertex v : cycles[j]) in[v] = 2;
      Edge link{-1, -1};
      int between = 0;
      std::vector<Edge> leaving;
      for (Vertex v = 0; v < n; ++v) {
        if (!in[v]) continue;
        for (Vertex w : h.adj(v)) {
          if (in[v] == 1 && in[w] == 2) {
            ++between;
            link = {v, w};
          } else if (!in[w]) {
            leaving.emplace_back(v, w);
          }
        }
      }
      if (between != 1 || leaving.size() != 1) continue;
      Vertex q_end = leaving[0].first;
      if (in[q_end] != 1) continue;  // Q must land on cycle i
      Seq q{q_end};
      Vertex prev = q_end, cur = leaving[0].second;
      while (on_cycle[cur] < 0 && h.degree(cur) == 2) {
        q.push_back(cur);
        Vertex next = h.adj(cur)[0] != prev ? h.adj(cur)[0] : h.adj(cur)[1];
        prev = cur;
        cur = next;
        if (in[cur]) break;
      }
      if (in[cur]) continue;
      q.push_back(cur);
      VertexSet rest;
      std::vector<char> drop(n, 0);
      for (Vertex v = 0; v < n; ++v) drop[v] = in[v] != 0;
      for (std::size_t k = 1; k + 1 < q.size(); ++k) drop[q[k]] = 1;
      for (Vertex v = 0; v < n; ++v)
        if (!drop[v]) rest.push_back(v);
      Subgraph sub = induced_subgraph(h, rest);
      ComponentClass f02 = classify_component(sub.graph);
      if (f02.tag != ClassTag::F02) continue;
      f02 = lift_class(f02, sub.to_host);
      ComponentClass out;
      out.tag = ClassTag::F3;
      out.cycles = {f02.cycles[0], f02.cycles[1], rotate_to(cycles[i], q_end), rotate_to(cycles[j], link.second)};
      out.connectors = {f02.connectors[0], {link.first, link.second}, Seq(q.rbegin(), q.rend())};
      out.d1_link = link.first;
      return out;
    }
  return {};
}

}  // namespace

ComponentClass classify_component(const Graph& h) {
  ComponentClass other;
  if (h.n() < 3 || !h.connected()) return other;
  std::vector<Seq> cycles;
  if (!cactus_cycles(h, cycles)) return other;
  std::vector<int> on_cycle(h.n(), -1);
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
    for (Vertex v : cycles[i]) on_cycle[v] = i;

  if (cycles.size() == 1) {
    if (static_cast<int>(cycles[0].size()) == h.n() && cycles[0].size() % 3 == 0) {
      ComponentClass out;
      out.tag = ClassTag::F0;
      out.cycles = {rotate_to(cycles[0], *std::min_element(cycles[0].begin(), cycles[0].end()))};
      return out;
    }
    return other;
  }
  if (cycles.size() == 2) return classify_two(h, cycles, on_cycle);
  if (cycles.size() < 2) return other;
  ComponentClass b = classify_brs(h, cycles, on_cycle);
  if (b.tag == ClassTag::Brs) return b;
  return classify_f3(h, cycles, on_cycle);
}

bool is_strong_class(const ComponentClass& c) {
  switch (c.tag) {
    case ClassTag::F0:
    case ClassTag::F02:
    case ClassTag::F3:
      return true;
    case ClassTag::Brs:
      return c.s <= 2 && c.r + c.s >= 2;
    default:
      return false;
  }
}

ComponentClass lift_class(const ComponentClass& c, const std::vector<Vertex>& to_host) {
  ComponentClass out = c;
  auto map_seq = [&](Seq& s) {
    for (Vertex& v : s) v = to_host[v];
  };
  if (out.special_vertex) out.special_vertex = to_host[*out.special_vertex];
  if (out.d1_link) out.d1_link = to_host[*out.d1_link];
  for (auto& s : out.cycles) map_seq(s);
  for (auto& s : out.connectors) map_seq(s);
  for (auto& s : out.near_cycles) map_seq(s);
  for (auto& tp : out.tailed) {
    map_seq(tp.cycle);
    map_seq(tp.tail);
  }
  return out;
}

std::optional<VertexCycle> find_short_bad_cycle(const Graph& g, std::uint64_t allowed, unsigned residues) {
  if (!has_cycle_with_residue(g, allowed, residues)) return std::nullopt;
  int top = std::popcount(allowed);
  for (int len = 3; len <= top; ++len) {
    if (!(residues >> (len % 3) & 1)) continue;
    std::optional<VertexCycle> found;
    for_each_cycle(g, allowed, len, [&](const VertexCycle& c) {
      if (static_cast<int>(c.size()) != len) return true;
      found = c;
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

namespace {

enum class Packing { LengthFirst, ZeroFirst, TwosOnly };

const char* packing_name(Packing p) {
  switch (p) {
    case Packing::LengthFirst: return "length-first";
    case Packing::ZeroFirst: return "zero-first";
    case Packing::TwosOnly: return "twos-only";
  }
  return "?";
}

// 0 mod 3 cycles left out by TwosOnly are picked up from G1 after pairing.
std::vector<Seq> greedy_family(const Graph& g, Packing mode, const std::vector<Seq>& seeds = {}) {
  std::vector<Seq> fam = seeds;
  std::uint64_t allowed = g.all_mask();
  for (const auto& c : seeds)
    for (Vertex v : c) allowed &= ~(std::uint64_t{1} << v);
  auto take = [&](unsigned residues) {
    while (auto c = find_short_bad_cycle(g, allowed, residues)) {
      for (Vertex v : c->vertices) allowed &= ~(std::uint64_t{1} << v);
      fam.push_back(std::move(c->vertices));
    }
  };
  if (mode == Packing::ZeroFirst) take(1u << 0);
  take(mode == Packing::TwosOnly ? 1u << 2 : (1u << 0) | (1u << 2));
  return fam;
}

// Vertex-disjoint pairs of bad cycles, lightest first.  Greedy packing can strand
// itself on a short cycle that meets every other one; these seeds get around that.
std::vector<std::pair<Seq, Seq>> disjoint_pairs(const Graph& g, std::size_t cycle_cap, std::size_t want) {
  std::vector<std::pair<std::uint64_t, Seq>> bad;
  for_each_cycle(g, g.all_mask(), g.n(), [&](const VertexCycle& c) {
    if (c.residue() != 1) bad.emplace_back(to_mask(c.vertices), c.vertices);
    return bad.size() < cycle_cap;
  });
  std::stable_sort(bad.begin(), bad.end(), [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> found;  // total, i, j
  for (std::size_t i = 0; i < bad.size(); ++i)
    for (std::size_t j = i + 1; j < bad.size(); ++j)
      if (!(bad[i].first & bad[j].first)) found.emplace_back(bad[i].second.size() + bad[j].second.size(), i, j);
  std::stable_sort(found.begin(), found.end());
  std::vector<std::pair<Seq, Seq>> out;
  for (std::size_t f = 0; f < found.size() && out.size() < want; ++f)
    out.emplace_back(bad[std::get<1>(found[f])].second, bad[std::get<2>(found[f])].second);
  return out;
}

struct Unit {
  enum Kind { Zero, Two, Done } kind;
  Seq cycle;
};

struct Building {
  VertexSet vertices;
  std::vector<Edge> edges;
  Vertex hub = -1;  // Brs components accept more cycles at the hub
};

void add_cycle(Building& b, const Seq& c) {
  for (std::size_t i = 0; i < c.size(); ++i) b.edges.emplace_back(c[i], c[(i + 1) % c.size()]);
  b.vertices.insert(b.vertices.end(), c.begin(), c.end());
}

void add_path(Building& b, const Seq& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) b.edges.emplace_back(p[i], p[i + 1]);
  b.vertices.insert(b.vertices.end(), p.begin(), p.end());
}

std::optional<Decomposition> pair_up(const Graph& g, const std::vector<Seq>& family) {
  const int n = g.n();
  std::vector<Unit> units;
  std::vector<int> unit_of(n, -1);
  std::vector<char> used(n, 0);
  for (const auto& c : family) {
    units.push_back({c.size() % 3 == 0 ? Unit::Zero : Unit::Two, c});
    for (Vertex v : c) {
      unit_of[v] = static_cast<int>(units.size()) - 1;
      used[v] = 1;
    }
  }
  std::vector<Building> built;
  std::vector<int> hub_comp(n, -1);

  for (std::size_t ui = 0; ui < units.size(); ++ui) {
    if (units[ui].kind != Unit::Two) continue;
    const Seq& me = units[ui].cycle;
    VertexSet a = sorted(me), b;
    for (Vertex v = 0; v < n; ++v) {
      int u = unit_of[v];
      if (u >= 0 && u != static_cast<int>(ui) && units[u].kind != Unit::Done) b.push_back(v);
      if (hub_comp[v] >= 0) b.push_back(v);
    }
    if (b.empty()) return std::nullopt;
    b = sorted(b);
    VertexSet keep;
    for (Vertex v = 0; v < n; ++v)
      if (!used[v] || contains(a, v) || contains(b, v)) keep.push_back(v);
    Subgraph sub = induced_subgraph(g, keep);
    VertexSet sa, sb;
    for (Vertex v : a) sa.push_back(sub.from_host[v]);
    for (Vertex v : b) sb.push_back(sub.from_host[v]);
    VertexPath sp;
    try {
      sp = shortest_connecting_path(sub.graph, sorted(sa), sorted(sb));
    } catch (const Error&) {
      return std::nullopt;
    }
    Seq path;
    for (Vertex v : sp.vertices) path.push_back(sub.to_host[v]);
    Vertex x = path.front(), y = path.back();
    const int L = static_cast<int>(path.size()) - 2;
    Seq interior(path.begin() + 1, path.end() - 1);
    for (Vertex v : interior) used[v] = 1;
    units[ui].kind = Unit::Done;

    if (hub_comp[y] >= 0) {
      Building& bd = built[hub_comp[y]];
      add_cycle(bd, me);
      add_path(bd, path);
      continue;
    }
    int other = unit_of[y];
    Building bd;
    add_cycle(bd, me);
    add_cycle(bd, units[other].cycle);
    add_path(bd, path);
    if (units[other].kind == Unit::Two && L >= 1) {
      // any interior vertex works as the hub; the busiest one is the likeliest
      // meeting point for later cycles
      bd.hub = path[1];
      for (Vertex w : interior)
        if (g.degree(w) > g.degree(bd.hub)) bd.hub = w;
    }
    (void)x;
    units[other].kind = Unit::Done;
    built.push_back(std::move(bd));
    if (built.back().hub >= 0) hub_comp[built.back().hub] = static_cast<int>(built.size()) - 1;
  }
  for (auto& u : units)
    if (u.kind == Unit::Zero) {
      Building bd;
      add_cycle(bd, u.cycle);
      built.push_back(std::move(bd));
      u.kind = Unit::Done;
    }
  std::uint64_t rest = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!used[v]) rest |= std::uint64_t{1} << v;
  while (auto c = find_short_bad_cycle(g, rest, 1u << 0)) {
    Building bd;
    add_cycle(bd, c->vertices);
    for (Vertex v : c->vertices) rest &= ~(std::uint64_t{1} << v);
    built.push_back(std::move(bd));
  }

  Decomposition d;
  std::vector<char> in_g2(n, 0);
  for (auto& bd : built) {
    DecompComponent comp;
    comp.vertices = sorted(bd.vertices);
    comp.edges = bd.edges;
    for (Vertex v : comp.vertices) in_g2[v] = 1;
    Subgraph sub = edge_subgraph(g, comp.vertices, comp.edges);
    comp.cls = lift_class(classify_component(sub.graph), sub.to_host);
    d.g2_components.push_back(std::move(comp));
  }
  for (Vertex v = 0; v < n; ++v)
    if (!in_g2[v]) d.g1_vertices.push_back(v);
  return d;
}

}  // namespace

Decomposition disjoint_bad_cycle_decomposition(const Graph& g, const DecompositionOptions& opt) {
  if (!g.maskable()) throw Error(Errc::TooLarge, "decomposition needs n <= 64");
  if (!g.connected()) throw Error(Errc::Disconnected, "decomposition needs a connected graph");
  const int n = g.n();
  std::mt19937_64 rng(opt.seed);
  std::string last_reason = "fewer than two disjoint bad cycles";
  auto attempt_with = [&](std::vector<Seq> fam, const std::string& name) -> std::optional<Decomposition> {
    if (fam.size() < 2) return std::nullopt;
    auto d = pair_up(g, fam);
    if (!d) {
      last_reason = "no pairing of the 2 mod 3 cycles";
      return std::nullopt;
    }
    d->strategy = name;
    if (validate_decomposition(g, *d).empty()) return d;
    last_reason = "assembled decomposition failed validation";
    return std::nullopt;
  };

  for (int attempt = 0; attempt < 3 + opt.shuffles; ++attempt) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Packing mode = static_cast<Packing>(attempt % 3);
    std::string name = packing_name(mode);
    if (attempt >= 3) {
      std::shuffle(perm.begin(), perm.end(), rng);
      name += "/shuffle" + std::to_string(attempt - 3);
    }
    // relabel v -> perm[v], search there, map back
    std::vector<Vertex> back(n);
    std::vector<Edge> es;
    for (Vertex v = 0; v < n; ++v) back[perm[v]] = v;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    Graph pg = build_graph(n, es);
    auto fam = greedy_family(pg, mode);
    for (auto& c : fam)
      for (Vertex& v : c) v = back[v];
    if (auto d = attempt_with(std::move(fam), name)) return *d;
  }
  // A connector may have to run through a cycle of the packing, which then stops
  // being a cycle of G2; retry with each cycle left out.
  for (Packing mode : {Packing::LengthFirst, Packing::ZeroFirst, Packing::TwosOnly}) {
    auto full = greedy_family(g, mode);
    if (full.size() < 3) continue;
    for (std::size_t drop = 0; drop < full.size(); ++drop) {
      auto fam = full;
      fam.erase(fam.begin() + static_cast<std::ptrdiff_t>(drop));
      if (auto d = attempt_with(std::move(fam), std::string(packing_name(mode)) + "/drop" + std::to_string(drop)))
        return *d;
    }
  }
  auto pairs = disjoint_pairs(g, 20000, 16);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (Packing mode : {Packing::LengthFirst, Packing::ZeroFirst, Packing::TwosOnly}) {
      auto fam = greedy_family(g, mode, {pairs[i].first, pairs[i].second});
      if (auto d = attempt_with(std::move(fam), "pair" + std::to_string(i) + "/" + packing_name(mode))) return *d;
    }
  throw Error(Errc::NotEnoughDisjointCycles, last_reason);
}

std::string validate_decomposition(const Graph& g, const Decomposition& d) {
  const int n = g.n();
  std::vector<int> owner(n, -2);
  for (Vertex v : d.g1_vertices) {
    if (v < 0 || v >= n) return "G1 vertex out of range";
    if (owner[v] != -2) return "vertex " + std::to_string(v) + " listed twice";
    owner[v] = -1;
  }
  for (int i = 0; i < static_cast<int>(d.g2_components.size()); ++i)
    for (Vertex v : d.g2_components[i].vertices) {
      if (v < 0 || v >= n) return "component vertex out of range";
      if (owner[v] != -2) return "vertex " + std::to_string(v) + " in two parts";
      owner[v] = i;
    }
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] == -2) return "vertex " + std::to_string(v) + " not covered";
  if (has_cycle_with_residue(g, to_mask(d.g1_vertices), (1u << 0) | (1u << 2)))
    return "G1 contains a cycle of length 0 or 2 mod 3";
  for (int i = 0; i < static_cast<int>(d.g2_components.size()); ++i) {
    const auto& c = d.g2_components[i];
    for (auto [u, v] : c.edges)
      if (owner[u] != i || owner[v] != i || !g.has_edge(u, v))
        return "component " + std::to_string(i) + " has a foreign edge";
    Subgraph sub = edge_subgraph(g, c.vertices, c.edges);
    if (classify_component(sub.graph).tag == ClassTag::Other)
      return "component " + std::to_string(i) + " is not in any family";
  }
  return "";
}

}  // namespace rdom
