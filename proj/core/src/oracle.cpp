#include "rdom/oracle.hpp"

#include <algorithm>
#include <bit>

#include "rdom/error.hpp"

namespace rdom {

namespace {

using Mask = std::uint64_t;

void check_size(const Graph& g, int limit) {
  int cap = std::min(limit, kMaskLimit - 1);
  if (g.n() > cap)
    throw Error(Errc::TooLarge, "n=" + std::to_string(g.n()) + " exceeds oracle limit " + std::to_string(cap));
}

Mask bit(int v) { return Mask{1} << v; }

}  // namespace

ExactResult gamma_r_exact(const Graph& g, int limit) {
  check_size(g, limit);
  auto t0 = std::chrono::steady_clock::now();
  const int n = g.n();
  const Mask all = g.all_mask();
  std::vector<Mask> closed(n);
  int maxdeg = 0;
  for (int v = 0; v < n; ++v) {
    closed[v] = g.closed_mask(v);
    maxdeg = std::max(maxdeg, g.degree(v));
  }
  // a 2-label dominates at most span vertices, a 1-label exactly one
  const int span = std::max(maxdeg + 1, 2);
  // dead[i]: vertices whose whole closed neighbourhood lies in 0..i-1, so once the
  // search passes i nothing can still dominate them.
  std::vector<Mask> dead(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    Mask prefix = i >= 64 ? ~Mask{0} : bit(i) - 1;
    for (int v = 0; v < n; ++v)
      if ((closed[v] & ~prefix) == 0) dead[i] |= bit(v);
  }

  auto labels = [&](Mask s) {
    Mask dom = 0;
    for (Mask r = s; r; r &= r - 1) dom |= closed[std::countr_zero(r)];
    RomanFunction f(n);
    for (int v = 0; v < n; ++v) f.values[v] = (s >> v & 1) ? 2 : ((dom >> v & 1) ? 0 : 1);
    return f;
  };

  int best = n;
  RomanFunction best_f(std::vector<std::uint8_t>(n, 1));

  auto dfs = [&](auto&& self, int idx, Mask s, Mask dom, int twos) -> void {
    Mask open = all & ~dom;
    int forced = std::popcount(open & dead[idx]);
    int rest = std::popcount(open & ~dead[idx]);
    int lb = twos + forced + (2 * rest + span - 1) / span;
    if (lb > best) return;
    if (idx == n) {
      int w = twos + forced;
      RomanFunction f = labels(s);
      if (w < best || f.values < best_f.values) {
        best = w;
        best_f = std::move(f);
      }
      return;
    }
    self(self, idx + 1, s | bit(idx), dom | closed[idx], twos + 2);
    self(self, idx + 1, s, dom, twos);
  };
  if (n > 0) dfs(dfs, 0, 0, 0, 0);

  ExactResult r;
  r.value = best;
  r.witness = std::move(best_f);
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

ExactResult differential_exact(const Graph& g, int limit) {
  check_size(g, limit);
  auto t0 = std::chrono::steady_clock::now();
  const int n = g.n();
  std::vector<Mask> closed(n), suffix(n + 1, 0);
  for (int v = 0; v < n; ++v) closed[v] = g.closed_mask(v);
  for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] | closed[v];

  int best = 0;
  Mask best_d = 0;
  auto dfs = [&](auto&& self, int idx, Mask d, Mask cov, int size) -> void {
    int val = std::popcount(cov) - 2 * size;
    if (val > best) {
      best = val;
      best_d = d;
    }
    if (idx == n) return;
    int ub = std::popcount(cov | suffix[idx]) - 2 * size;
    int ub2 = val;
    for (int v = idx; v < n; ++v) ub2 += std::max(0, std::popcount(closed[v] & ~cov) - 2);
    if (std::min(ub, ub2) <= best) return;
    self(self, idx + 1, d | bit(idx), cov | closed[idx], size + 1);
    self(self, idx + 1, d, cov, size);
  };
  dfs(dfs, 0, 0, 0, 0);

  ExactResult r;
  r.value = best;
  r.set = from_mask(best_d);
  r.elapsed = std::chrono::steady_clock::now() - t0;
  return r;
}

int closed_form(ClosedFormKind kind, int n) {
  if (kind == ClosedFormKind::Path && n < 1) throw Error(Errc::BadOrder, "path needs n >= 1");
  if (kind == ClosedFormKind::Cycle && n < 3) throw Error(Errc::BadOrder, "cycle needs n >= 3");
  return (2 * n + 2) / 3;
}

bool check_gallai(const Graph& g, int limit) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) throw Error(Errc::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
  check_size(g, limit);
  return gamma_r_exact(g, limit).value + differential_exact(g, limit).value == g.n();
}

}  // namespace rdom
