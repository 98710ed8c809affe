#pragma once

// Slow, obviously-correct reference computations.  Nothing here calls into the
// library beyond reading adjacency from a Graph.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "rdom/graph.hpp"

namespace brute {

using rdom::Graph;
using rdom::Vertex;

inline bool adjacent(const Graph& g, Vertex u, Vertex v) {
  const auto& a = g.adj(u);
  return std::find(a.begin(), a.end(), v) != a.end();
}

// every 0 has a neighbour labelled 2
inline bool is_rdf(const Graph& g, const std::vector<std::uint8_t>& f) {
  if (static_cast<int>(f.size()) != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (f[v] > 2) return false;
    if (f[v] != 0) continue;
    bool ok = false;
    for (Vertex w = 0; w < g.n() && !ok; ++w)
      if (f[w] == 2 && adjacent(g, v, w)) ok = true;
    if (!ok) return false;
  }
  return true;
}

inline int weight(const std::vector<std::uint8_t>& f) {
  int w = 0;
  for (auto x : f) w += x;
  return w;
}

// Every labelling in {0,1,2}^n.  Only for n <= 11 or so.
inline int gamma_r_labellings(const Graph& g) {
  const int n = g.n();
  std::vector<std::uint8_t> f(n, 0);
  int best = 2 * n + 1;
  std::function<void(int, int)> rec = [&](int i, int w) {
    if (w >= best) return;
    if (i == n) {
      if (is_rdf(g, f)) best = w;
      return;
    }
    for (std::uint8_t x = 0; x <= 2; ++x) {
      f[i] = x;
      rec(i + 1, w + x);
    }
    f[i] = 0;
  };
  rec(0, 0);
  return best;
}

// All 2^n choices of the 2-labelled set V2; each remaining vertex not next to V2
// pays 1.
inline int gamma_r_subsets(const Graph& g) {
  const int n = g.n();
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = 1u << v;
    for (Vertex w : g.adj(v)) closed[v] |= 1u << w;
  }
  int best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::uint32_t dom = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) dom |= closed[v];
    int w = 2 * __builtin_popcount(s) + (n - __builtin_popcount(dom));
    best = std::min(best, w);
  }
  return best;
}

// max over D of |B(D)| - |D|, B(D) the outside vertices with a neighbour in D
inline int differential(const Graph& g) {
  const int n = g.n();
  int best = 0;
  for (std::uint32_t d = 0; d < (1u << n); ++d) {
    int b = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (d >> v & 1) continue;
      for (Vertex w : g.adj(v))
        if (d >> w & 1) {
          ++b;
          break;
        }
    }
    best = std::max(best, b - __builtin_popcount(d));
  }
  return best;
}

// Every simple cycle once, as a vertex list starting at its smallest vertex.
inline std::vector<std::vector<Vertex>> all_cycles(const Graph& g, std::size_t cap = 2000000) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.n();
  std::vector<Vertex> path;
  std::vector<char> on(n, 0);
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex s, Vertex v) {
    if (out.size() >= cap) return;
    for (Vertex w : g.adj(v)) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= s || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(s, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on[s] = 1;
    dfs(s, s);
    on[s] = 0;
  }
  return out;
}

inline bool induced(const Graph& g, const std::vector<Vertex>& c) {
  int edges = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) edges += adjacent(g, c[i], c[j]);
  return edges == static_cast<int>(c.size());
}

// Vertex sets of the induced cycles with length in [3, max_len].
inline std::set<std::vector<Vertex>> induced_cycle_sets(const Graph& g, int max_len) {
  std::set<std::vector<Vertex>> out;
  for (auto c : all_cycles(g)) {
    if (static_cast<int>(c.size()) > max_len || !induced(g, c)) continue;
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

// Does the subgraph induced by `keep` hold a cycle with length mod 3 in `residues`?
inline bool has_residue_cycle(const Graph& g, const std::vector<char>& keep, unsigned residues) {
  for (const auto& c : all_cycles(g)) {
    if (!(residues >> (c.size() % 3) & 1)) continue;
    if (std::all_of(c.begin(), c.end(), [&](Vertex v) { return keep[v] != 0; })) return true;
  }
  return false;
}

inline bool two_disjoint_bad_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> bad;
  for (const auto& c : all_cycles(g))
    if (c.size() % 3 != 1) bad.push_back(c);
  for (std::size_t i = 0; i < bad.size(); ++i) {
    std::vector<char> used(g.n(), 0);
    for (Vertex v : bad[i]) used[v] = 1;
    for (std::size_t j = i + 1; j < bad.size(); ++j)
      if (std::none_of(bad[j].begin(), bad[j].end(), [&](Vertex v) { return used[v] != 0; })) return true;
  }
  return false;
}

inline bool connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> st{0};
  seen[0] = 1;
  int count = 0;
  while (!st.empty()) {
    Vertex v = st.back();
    st.pop_back();
    ++count;
    for (Vertex w : g.adj(v))
      if (!seen[w]) {
        seen[w] = 1;
        st.push_back(w);
      }
  }
  return count == g.n();
}

// Random connected graph with no isolated vertex: random tree plus G(n, p).
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::vector<rdom::Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back(static_cast<int>(rng() % v), v);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) es.emplace_back(a, b);
  return rdom::build_graph(n, es);
}

}  // namespace brute
