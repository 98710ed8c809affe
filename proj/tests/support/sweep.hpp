#pragma once

// Constructor sweep over residue-legal parameters.  Expected weights and strong sets
// are written out here from the weight formulas rather than read back from the
// builders, and validity is re-checked with brute::is_rdf.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "brute.hpp"
#include "rdom/constructors.hpp"

namespace sweep {

using rdom::AnchoredTriple;
using rdom::Vertex;
using rdom::VertexSet;

struct Result {
  int cases = 0;
  std::vector<std::string> failures;
};

inline VertexSet range(int lo, int hi) {
  VertexSet out;
  for (int v = lo; v < hi; ++v) out.push_back(v);
  return out;
}

inline VertexSet minus(VertexSet s, std::initializer_list<Vertex> drop) {
  s.erase(std::remove_if(s.begin(), s.end(),
                         [&](Vertex v) { return std::find(drop.begin(), drop.end(), v) != drop.end(); }),
          s.end());
  return s;
}

inline VertexSet strong_of(const rdom::RdfTriple& t) {
  VertexSet out;
  for (int v = 0; v < t[0].size(); ++v)
    if (t[0][v] == 2 || t[1][v] == 2 || t[2][v] == 2) out.push_back(v);
  return out;
}

inline void check(Result& r, const std::string& name, const AnchoredTriple& a, int max_weight,
                  const VertexSet& must_be_strong) {
  ++r.cases;
  std::string why;
  int total = 0;
  for (int i = 0; i < 3; ++i) {
    if (!brute::is_rdf(a.graph, a.triple[i].values)) why += " f" + std::to_string(i + 1) + "-invalid";
    total += brute::weight(a.triple[i].values);
  }
  if (total > max_weight) why += " weight " + std::to_string(total) + ">" + std::to_string(max_weight);
  if (a.weight_claimed > max_weight) why += " claim " + std::to_string(a.weight_claimed);
  auto strong = strong_of(a.triple);
  if (!std::includes(strong.begin(), strong.end(), must_be_strong.begin(), must_be_strong.end()))
    why += " strong-set";
  VertexSet claimed = a.strong_claimed;
  std::sort(claimed.begin(), claimed.end());
  if (!std::includes(strong.begin(), strong.end(), claimed.begin(), claimed.end())) why += " claimed-strong";
  if (!why.empty()) r.failures.push_back(name + ":" + why);
}

inline std::string tag(const char* what, std::initializer_list<int> ps) {
  std::string s = what;
  s += "(";
  bool first = true;
  for (int p : ps) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + ")";
}

// Bases for the extension builders: small strong-anchored triples.
inline std::vector<std::pair<std::string, AnchoredTriple>> bases() {
  return {{"C3", rdom::triple_for_cycle(3)},
          {"C4", rdom::triple_for_cycle(4)},
          {"C6", rdom::triple_for_cycle(6)},
          {"C7", rdom::triple_for_cycle(7)},
          {"C4,2", rdom::triple_for_tailed_cycle(4, 2)}};
}

inline Result run(int order_cap = 20) {
  Result r;

  for (int t = 3; t <= order_cap; ++t) {
    if (t % 3 == 2) continue;
    int w = t % 3 == 0 ? 2 * t : 2 * t + 1;
    check(r, tag("cycle", {t}), rdom::triple_for_cycle(t), w, t % 3 == 0 ? range(0, t) : range(0, t - 1));
  }

  for (int m = 4; m <= order_cap; m += 3)
    for (int l = 1; l <= 9 && m + l <= order_cap; ++l)
      check(r, tag("tailed", {m, l}), rdom::triple_for_tailed_cycle(m, l), 2 * (m + l) + 1,
            minus(range(0, m + l), {m - 1}));

  for (const auto& [bname, b] : bases()) {
    const int n0 = b.graph.n();
    const int w0 = b.weight_claimed;
    VertexSet s0 = b.strong_claimed;
    std::sort(s0.begin(), s0.end());
    auto with = [&](VertexSet extra) {
      VertexSet s = s0;
      s.insert(s.end(), extra.begin(), extra.end());
      std::sort(s.begin(), s.end());
      return s;
    };
    for (Vertex u : s0)
      for (Vertex v : s0)
        for (int l = 1; l <= 9 && n0 + l <= order_cap; ++l) {
          auto a = rdom::extend_along_ear(b, u, v, l);
          std::string name = bname + "+" + tag("ear", {u, v, l});
          check(r, name, a, w0 + 2 * l, with(range(n0 + 1, n0 + l - 1)));
          for (int i = 0; i < 3; ++i)
            for (int x = 0; x < n0; ++x)
              if (a.triple[i][x] != b.triple[i][x]) {
                r.failures.push_back(name + ": base label changed");
                i = 3;
                break;
              }
        }
    for (Vertex u : s0)
      for (int t = 4; n0 + t <= order_cap; ++t) {
        if (t % 3 == 0) continue;
        auto a = rdom::attach_pendant_cycle(b, u, t);
        bool one = t % 3 == 1;
        check(r, bname + "+" + tag("pendant", {u, t}), a, w0 + 2 * t + (one ? 0 : 1),
              with(one ? range(n0, n0 + t - 1) : range(n0, n0 + t)));
      }
    for (Vertex u : s0)
      for (int m = 4; n0 + m < order_cap; ++m) {
        if (m % 3 == 0) continue;
        for (int l = 1; l <= 9 && n0 + m + l <= order_cap; ++l) {
          auto a = rdom::attach_pendant_tailed_cycle(b, u, m, l);
          bool one = m % 3 == 1;
          VertexSet add = range(n0, n0 + m + l);
          if (one) add = minus(add, {n0 + m - 1});
          check(r, bname + "+" + tag("pendant-tailed", {u, m, l}), a, w0 + 2 * (m + l) + (one ? 0 : 1), with(add));
        }
      }
  }

  // item 1: C1 and C2 share their first vertex
  for (int n1 = 5; n1 <= order_cap; n1 += 3)
    for (int n2 = 3; n1 + n2 - 1 <= order_cap; ++n2) {
      rdom::GadgetSpec s{1, n1, n2, {rdom::ConnectorKind::Identify, 0}, {}};
      int n = n1 + n2 - 1;
      check(r, tag("gadget1", {n1, n2}), rdom::two_cycle_gadget(s), 2 * n + 1,
            minus(range(0, n), {n1, n1 + n2 - 2}));
    }

  for (int item = 2; item <= 10; ++item) {
    int want = item <= 4 ? 1 : (item <= 7 ? 2 : 0);
    for (int n1 = 5; n1 <= order_cap; n1 += 3)
      for (int n2 = 3; n2 <= order_cap; ++n2)
        for (int len = 0; len <= 8; ++len) {
          if (n2 % 3 != want || len % 3 != (item - 2) % 3) continue;
          int n = n1 + n2 + len;
          if (n > order_cap) continue;
          rdom::GadgetSpec s{item, n1, n2, {len == 0 ? rdom::ConnectorKind::Edge : rdom::ConnectorKind::Path, len}, {}};
          VertexSet strong = range(0, n);
          int w = 2 * n + 1;
          if (item <= 4) strong = minus(strong, {n1 + n2 - 1});
          else if (item <= 7) w = 2 * n + 2;
          check(r, tag("gadget", {item, n1, n2, len}), rdom::two_cycle_gadget(s), w, strong);
        }
  }

  // stars: every multiset of 2 mod 3 lengths, 3 to 5 cycles; order may pass the cap
  // only for the all-C5 stars
  std::vector<int> lens;
  std::function<void(int)> stars = [&](int from) {
    int s = static_cast<int>(lens.size());
    int n = 1;
    for (int l : lens) n += l;
    if (s >= 3 && (n <= order_cap || n == 5 * s + 1)) {
      std::string name = "star(";
      for (int l : lens) name += std::to_string(l) + " ";
      name.back() = ')';
      check(r, name, rdom::star_of_cycles(lens), 2 * n - s + 4, {0});
    }
    if (s == 5) return;
    for (int l = from; l <= 17; l += 3) {
      if (n + l > std::max(order_cap, 26)) break;
      lens.push_back(l);
      stars(l);
      lens.pop_back();
    }
  };
  stars(5);

  for (int p = 1; 3 * p + 2 <= order_cap; ++p)
    for (int l = 1; l <= 12; ++l)
      for (int j = 2; j <= 3 * p + 2; ++j) {
        if (l % 3 == 0 || (l % 3 == 1 && j % 3 == 2) || (l % 3 == 2 && j % 3 != 2)) continue;
        int m = 3 * p + 2, n = m + l;
        if (n > order_cap) continue;
        check(r, tag("chordal", {p, l, j}), rdom::cycle_with_chordal_ear(p, l, j), 2 * n + 1,
              minus(range(0, n), {m, m + l - 1}));
      }
  return r;
}

}  // namespace sweep
