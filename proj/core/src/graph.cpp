#include "rdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "rdom/error.hpp"

namespace rdom {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n)
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n - 1));
}

}  // namespace

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::min_degree() const {
  int d = std::numeric_limits<int>::max();
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return n() == 0 ? 0 : d;
}

std::uint64_t Graph::all_mask() const {
  return n() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n()) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<int> comp(n(), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n(); ++s) {
    if (comp[s] >= 0) continue;
    VertexSet cur{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (Vertex w : adj_[cur[i]])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          cur.push_back(w);
        }
    std::sort(cur.begin(), cur.end());
    out.push_back(std::move(cur));
  }
  return out;
}

bool Graph::connected() const { return n() <= 1 || components().size() == 1; }

Graph build_graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw Error(Errc::BadOrder, "negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw Error(Errc::SelfLoop, "self-loop at " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t m2 = 0;
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    m2 += a.size();
  }
  g.m_ = m2 / 2;
  if (n <= kMaskLimit) {
    g.mask_.assign(n, 0);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : g.adj_[u]) g.mask_[u] |= std::uint64_t{1} << v;
  }
  return g;
}

Graph extend_graph(const Graph& g, int extra, const std::vector<Edge>& edges) {
  auto all = g.edges();
  all.insert(all.end(), edges.begin(), edges.end());
  return build_graph(g.n() + extra, all);
}

bool is_path_in(const Graph& g, const VertexPath& p) {
  std::vector<char> seen(g.n(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Vertex v = p.vertices[i];
    if (v < 0 || v >= g.n() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_cycle_in(const Graph& g, const VertexCycle& c) {
  if (c.size() < 3) return false;
  if (!is_path_in(g, VertexPath{c.vertices})) return false;
  return g.has_edge(c.vertices.front(), c.vertices.back());
}

bool is_induced_cycle(const Graph& g, const VertexCycle& c) {
  if (!is_cycle_in(g, c)) return false;
  std::vector<char> on(g.n(), 0);
  for (Vertex v : c.vertices) on[v] = 1;
  for (Vertex v : c.vertices) {
    int inside = 0;
    for (Vertex w : g.adj(v)) inside += on[w];
    if (inside != 2) return false;
  }
  return true;
}

VertexCycle canonical_cycle(std::vector<Vertex> vs) {
  if (vs.empty()) return {};
  auto it = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), it, vs.end());
  if (vs.size() > 2 && vs.back() < vs[1]) std::reverse(vs.begin() + 1, vs.end());
  return VertexCycle{std::move(vs)};
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
  Subgraph s;
  s.from_host.assign(g.n(), -1);
  for (Vertex v : vs) {
    check_vertex(g.n(), v);
    if (s.from_host[v] < 0) {
      s.from_host[v] = static_cast<int>(s.to_host.size());
      s.to_host.push_back(v);
    }
  }
  std::vector<Edge> es;
  for (Vertex v : s.to_host)
    for (Vertex w : g.adj(v))
      if (v < w && s.from_host[w] >= 0) es.emplace_back(s.from_host[v], s.from_host[w]);
  s.graph = build_graph(static_cast<int>(s.to_host.size()), es);
  return s;
}

Subgraph edge_subgraph(const Graph& g, const VertexSet& vs, const std::vector<Edge>& edges) {
  Subgraph s;
  s.from_host.assign(g.n(), -1);
  for (Vertex v : vs) {
    check_vertex(g.n(), v);
    if (s.from_host[v] < 0) {
      s.from_host[v] = static_cast<int>(s.to_host.size());
      s.to_host.push_back(v);
    }
  }
  std::vector<Edge> es;
  for (auto [u, v] : edges) {
    if (!g.has_edge(u, v)) throw Error(Errc::HostMismatch, "edge not in host graph");
    if (s.from_host[u] < 0 || s.from_host[v] < 0) throw Error(Errc::HostMismatch, "edge leaves vertex set");
    es.emplace_back(s.from_host[u], s.from_host[v]);
  }
  s.graph = build_graph(static_cast<int>(s.to_host.size()), es);
  return s;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : s) {
    check_vertex(g.n(), v);
    in[v] = 1;
    for (Vertex w : g.adj(v)) in[w] = 1;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

std::vector<VertexCycle> induced_cycles_up_to(const Graph& g, int max_len) {
  std::vector<VertexCycle> out;
  if (max_len < 3) return out;
  const int n = g.n();
  std::vector<char> on(n, 0);
  std::vector<Vertex> path;

  // path[0] = s is the minimum vertex of the cycle; w extends path[k-1].
  auto extend = [&](auto&& self, Vertex s) -> void {
    Vertex last = path.back();
    for (Vertex w : g.adj(last)) {
      if (w <= s || on[w]) continue;
      bool chord = false;
      bool closes = false;
      for (Vertex x : g.adj(w)) {
        if (!on[x] || x == last) continue;
        if (x == s) closes = true;
        else {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (closes) {
        if (path[1] < w) {
          auto cyc = path;
          cyc.push_back(w);
          out.push_back(VertexCycle{std::move(cyc)});
        }
        continue;
      }
      if (static_cast<int>(path.size()) + 1 >= max_len) continue;
      on[w] = 1;
      path.push_back(w);
      self(self, s);
      path.pop_back();
      on[w] = 0;
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    on[s] = 1;
    path.assign(1, s);
    for (Vertex v : g.adj(s)) {
      if (v <= s) continue;
      on[v] = 1;
      path.push_back(v);
      extend(extend, s);
      path.pop_back();
      on[v] = 0;
    }
    on[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const VertexCycle& a, const VertexCycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.vertices < b.vertices;
  });
  return out;
}

VertexPath longest_path(const Graph& g) {
  const int n = g.n();
  if (n == 0) throw Error(Errc::BadOrder, "empty graph");
  if (!g.connected()) throw Error(Errc::Disconnected, "longest_path needs a connected graph");

  std::vector<Vertex> best, cur;
  std::vector<char> on(n, 0);
  std::vector<int> mark(n, 0);
  int stamp = 0;

  // Vertices reachable from v without touching the current path.
  auto reach = [&](Vertex v) {
    ++stamp;
    std::vector<Vertex> st{v};
    mark[v] = stamp;
    int cnt = 0;
    while (!st.empty()) {
      Vertex x = st.back();
      st.pop_back();
      ++cnt;
      for (Vertex w : g.adj(x))
        if (!on[w] && mark[w] != stamp) {
          mark[w] = stamp;
          st.push_back(w);
        }
    }
    return cnt;
  };

  bool done = false;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (cur.size() > best.size()) {
      best = cur;
      if (static_cast<int>(best.size()) == n) done = true;
    }
    for (Vertex w : g.adj(v)) {
      if (done) return;
      if (on[w]) continue;
      if (static_cast<int>(cur.size()) + reach(w) <= static_cast<int>(best.size())) continue;
      on[w] = 1;
      cur.push_back(w);
      self(self, w);
      cur.pop_back();
      on[w] = 0;
    }
  };

  for (Vertex s = 0; s < n && !done; ++s) {
    on[s] = 1;
    cur.assign(1, s);
    dfs(dfs, s);
    on[s] = 0;
  }
  return VertexPath{best};
}

VertexPath shortest_connecting_path(const Graph& g, const VertexSet& a, const VertexSet& b) {
  const int n = g.n();
  if (a.empty() || b.empty()) throw Error(Errc::NoPath, "empty endpoint set");
  std::vector<char> in_a(n, 0), in_b(n, 0);
  for (Vertex v : a) {
    check_vertex(n, v);
    in_a[v] = 1;
  }
  for (Vertex v : b) {
    check_vertex(n, v);
    if (in_a[v]) throw Error(Errc::NoPath, "endpoint sets overlap");
    in_b[v] = 1;
  }

  // Distance to B through interior vertices outside A and B.
  std::vector<int> db(n, -1);
  std::deque<Vertex> q;
  for (Vertex v = 0; v < n; ++v)
    if (in_b[v]) {
      db[v] = 0;
      q.push_back(v);
    }
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    for (Vertex w : g.adj(x))
      if (db[w] < 0 && !in_b[w]) {
        db[w] = db[x] + 1;
        if (!in_a[w]) q.push_back(w);
      }
  }
  Vertex start = -1;
  for (Vertex v = 0; v < n; ++v)
    if (in_a[v] && db[v] > 0 && (start < 0 || db[v] < db[start])) start = v;
  if (start < 0) throw Error(Errc::NoPath, "no path between the sets");

  // Among shortest paths from `start`, the target is the smallest reachable b at the
  // right distance; the interior follows smallest ids toward it.
  std::vector<int> da(n, -1);
  da[start] = 0;
  q.assign(1, start);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    if (x != start && (in_a[x] || in_b[x])) continue;
    for (Vertex w : g.adj(x))
      if (da[w] < 0) {
        da[w] = da[x] + 1;
        q.push_back(w);
      }
  }
  Vertex target = -1;
  for (Vertex v = 0; v < n; ++v)
    if (in_b[v] && da[v] == db[start]) {
      target = v;
      break;
    }

  std::vector<int> dt(n, -1);
  dt[target] = 0;
  q.assign(1, target);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    for (Vertex w : g.adj(x))
      if (dt[w] < 0 && !in_b[w]) {
        dt[w] = dt[x] + 1;
        if (!in_a[w]) q.push_back(w);
      }
  }
  VertexPath p{{start}};
  Vertex cur = start;
  while (cur != target) {
    Vertex next = -1;
    for (Vertex w : g.adj(cur)) {
      if (w == target && dt[cur] == 1) {
        next = w;
        break;
      }
      if (!in_a[w] && !in_b[w] && dt[w] == dt[cur] - 1) {
        next = w;
        break;
      }
    }
    cur = next;
    p.vertices.push_back(cur);
  }
  return p;
}

bool for_each_cycle(const Graph& g, std::uint64_t allowed, int max_len,
                    const std::function<bool(const VertexCycle&)>& fn) {
  if (!g.maskable()) throw Error(Errc::TooLarge, "cycle enumeration needs n <= 64");
  allowed &= g.all_mask();
  std::vector<Vertex> path;
  bool stop = false;
  auto dfs = [&](auto&& self, Vertex s, std::uint64_t free) -> void {
    Vertex v = path.back();
    std::uint64_t nb = g.adj_mask(v);
    if (path.size() >= 3 && (nb >> s & 1) && path[1] < v) {
      if (!fn(VertexCycle{path})) {
        stop = true;
        return;
      }
    }
    if (static_cast<int>(path.size()) >= max_len) return;
    for (std::uint64_t c = nb & free; c && !stop; c &= c - 1) {
      Vertex w = std::countr_zero(c);
      path.push_back(w);
      self(self, s, free & ~(std::uint64_t{1} << w));
      path.pop_back();
    }
  };
  for (std::uint64_t r = allowed; r && !stop; r &= r - 1) {
    Vertex s = std::countr_zero(r);
    // only vertices above s may follow it
    std::uint64_t above = s >= 63 ? 0 : allowed & (~std::uint64_t{0} << (s + 1));
    path.assign(1, s);
    dfs(dfs, s, above);
  }
  return !stop;
}

bool has_cycle_with_residue(const Graph& g, std::uint64_t allowed, unsigned residues) {
  if (!g.maskable()) throw Error(Errc::TooLarge, "cycle search needs n <= 64");
  allowed &= g.all_mask();
  // Vertices of degree < 2 inside `allowed` lie on no cycle; peel them first.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t r = allowed; r; r &= r - 1) {
      Vertex v = std::countr_zero(r);
      if (std::popcount(g.adj_mask(v) & allowed) < 2) {
        allowed &= ~(std::uint64_t{1} << v);
        changed = true;
      }
    }
  }
  if (!allowed) return false;
  bool found = false;
  auto dfs = [&](auto&& self, Vertex s, Vertex v, int len, std::uint64_t free) -> void {
    std::uint64_t nb = g.adj_mask(v);
    if (len >= 3 && (nb >> s & 1) && (residues >> (len % 3) & 1)) {
      found = true;
      return;
    }
    for (std::uint64_t c = nb & free; c && !found; c &= c - 1) {
      Vertex w = std::countr_zero(c);
      self(self, s, w, len + 1, free & ~(std::uint64_t{1} << w));
    }
  };
  for (std::uint64_t r = allowed; r && !found; r &= r - 1) {
    Vertex s = std::countr_zero(r);
    std::uint64_t above = s >= 63 ? 0 : allowed & (~std::uint64_t{0} << (s + 1));
    dfs(dfs, s, s, 1, above);
  }
  return found;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& msg) {
    throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a >> b)) fail("expected two integers");
    std::string rest;
    if (ls >> rest && rest[0] != '#') fail("trailing input '" + rest + "'");
    if (n < 0) {
      if (a < 0 || b < 0 || a > 1000000) fail("bad header");
      n = static_cast<int>(a);
      m = b;
      continue;
    }
    if (static_cast<long long>(edges.size()) >= m) fail("more edges than declared");
    if (a < 0 || b < 0 || a >= n || b >= n) fail("vertex out of range");
    if (a == b) fail("self-loop");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (n < 0) throw Error(Errc::ParseError, "missing header line");
  if (static_cast<long long>(edges.size()) != m)
    throw Error(Errc::ParseError, "expected " + std::to_string(m) + " edges, got " + std::to_string(edges.size()));
  return build_graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::uint64_t to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= std::uint64_t{1} << v;
  return m;
}

VertexSet from_mask(std::uint64_t m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace rdom
