#include "rdom/constructors.hpp"

#include <algorithm>
#include <numeric>

#include "rdom/error.hpp"

namespace rdom {

namespace labels {

namespace {

// floor(a/3); range bounds like (l-5)/3 go negative for short pieces and must
// then describe an empty range
int fl(int a) { return a >= 0 ? a / 3 : -((-a + 2) / 3); }

// 1-based; indices outside the sequence are ignored
void put(RdfTriple& t, int j, const Seq& s, int idx, int val) {
  if (idx < 1 || idx > static_cast<int>(s.size())) return;
  auto& x = t[j].values[s[idx - 1]];
  if (x < val) x = static_cast<std::uint8_t>(val);
}

// s[3i+off] = 2 for 0 <= i <= hi
void run(RdfTriple& t, int j, const Seq& s, int off, int hi) {
  for (int i = 0; i <= hi; ++i) put(t, j, s, 3 * i + off, 2);
}

int strong_index(const RdfTriple& t, Vertex v, int skip = -1) {
  for (int j = 0; j < 3; ++j)
    if (j != skip && t[j][v] == 2) return j;
  return -1;
}

void others(int a, int& b, int& c) {
  b = a == 0 ? 1 : 0;
  c = 3 - a - b;
}

}  // namespace

void ear(RdfTriple& t, Vertex u, Vertex v, const Seq& y) {
  const int l = static_cast<int>(y.size());
  if (l < 1) throw Error(Errc::BadLength, "ear needs at least one vertex");
  int a = strong_index(t, u);
  if (a < 0) throw Error(Errc::NotStrong, "anchor " + std::to_string(u) + " is not strong");
  int b = strong_index(t, v, a);
  if (b < 0 && t[a][v] != 2) throw Error(Errc::NotStrong, "anchor " + std::to_string(v) + " is not strong");

  if (b >= 0) {
    int c = 3 - a - b;
    switch (l % 3) {
      case 0:
        run(t, a, y, 3, l / 3 - 1);
        run(t, b, y, 1, l / 3 - 1);
        run(t, c, y, 2, l / 3 - 1);
        break;
      case 1:
        run(t, a, y, 3, fl(l - 4));
        run(t, b, y, 2, fl(l - 4));
        run(t, c, y, 1, fl(l - 1));
        break;
      case 2:
        run(t, a, y, 3, fl(l - 5));
        put(t, a, y, l, 1);
        run(t, b, y, 2, fl(l - 5));
        put(t, b, y, l - 1, 1);
        run(t, c, y, 1, fl(l - 2));
        break;
    }
    return;
  }
  // both anchors strong only in component a
  int c;
  others(a, b, c);
  switch (l % 3) {
    case 0:
      put(t, a, y, 2, 1);
      run(t, a, y, 4, fl(l - 6));
      run(t, b, y, 2, l / 3 - 1);
      put(t, c, y, 1, 1);
      run(t, c, y, 3, l / 3 - 1);
      break;
    case 1:
      put(t, a, y, 2, 1);
      put(t, a, y, l - 1, 1);
      run(t, a, y, 4, fl(l - 7));
      put(t, b, y, 1, 1);
      run(t, b, y, 3, fl(l - 4));
      put(t, c, y, l, 1);
      run(t, c, y, 2, fl(l - 4));
      break;
    case 2:
      run(t, a, y, 3, fl(l - 5));
      run(t, b, y, 1, fl(l - 2));
      run(t, c, y, 2, fl(l - 2));
      break;
  }
}

void pendant_cycle(RdfTriple& t, Vertex u, const Seq& x) {
  const int m = static_cast<int>(x.size());
  int a = strong_index(t, u);
  if (a < 0) throw Error(Errc::NotStrong, "anchor " + std::to_string(u) + " is not strong");
  int b, c;
  others(a, b, c);
  const int p = m / 3;
  if (m % 3 == 1) {
    run(t, a, x, 3, p - 1);
    put(t, b, x, 3 * p, 1);
    run(t, b, x, 1, p - 1);
    put(t, c, x, 3 * p + 1, 1);
    run(t, c, x, 2, p - 1);
  } else if (m % 3 == 2) {
    run(t, a, x, 3, p - 1);
    put(t, a, x, 3 * p + 2, 1);
    run(t, b, x, 1, p);
    run(t, c, x, 2, p);
  } else {
    throw Error(Errc::BadResidue, "pendant cycle length " + std::to_string(m) + " is 0 mod 3");
  }
}

void pendant_tailed_cycle(RdfTriple& t, Vertex u, const Seq& x, const Seq& y) {
  const int m = static_cast<int>(x.size());
  const int l = static_cast<int>(y.size());
  if (l < 1) throw Error(Errc::BadTail, "tail must be nonempty");
  int a = strong_index(t, u);
  if (a < 0) throw Error(Errc::NotStrong, "anchor " + std::to_string(u) + " is not strong");
  int b, c;
  others(a, b, c);
  const int p = m / 3;
  if (m % 3 == 1) {
    switch (l % 3) {
      case 0:
        run(t, a, x, 3, p - 1);
        run(t, a, y, 1, l / 3 - 1);
        put(t, b, x, 3 * p, 1);
        run(t, b, x, 1, p - 1);
        run(t, b, y, 3, l / 3 - 1);
        put(t, c, x, 3 * p + 1, 1);
        run(t, c, x, 2, p - 1);
        run(t, c, y, 2, l / 3 - 1);
        break;
      case 1:
        put(t, a, x, 3 * p + 1, 1);
        run(t, a, x, 2, p - 1);
        run(t, a, y, 2, fl(l - 4));
        // this 1 belongs to b; a already covers x_{3p}
        put(t, b, x, 3 * p, 1);
        run(t, b, x, 1, p - 1);
        run(t, b, y, 3, fl(l - 4));
        run(t, c, x, 3, p - 1);
        run(t, c, y, 1, fl(l - 1));
        break;
      case 2:
        put(t, a, x, 3 * p, 1);
        run(t, a, x, 1, p - 1);
        run(t, a, y, 3, fl(l - 5));
        put(t, b, x, 3 * p + 1, 1);
        run(t, b, x, 2, p - 1);
        run(t, b, y, 2, fl(l - 2));
        run(t, c, x, 3, p - 1);
        run(t, c, y, 1, fl(l - 2));
        break;
    }
    return;
  }
  if (m % 3 != 2) throw Error(Errc::BadResidue, "pendant tailed cycle length " + std::to_string(m) + " is 0 mod 3");
  auto pa = [&](int j) { run(t, j, x, 1, p); };
  auto pb = [&](int j) { run(t, j, x, 2, p); };
  auto pc = [&](int j) {
    run(t, j, x, 3, p - 1);
    put(t, j, x, 3 * p + 2, 1);
  };
  switch (l % 3) {
    case 0:
      pc(a);
      run(t, a, y, 1, l / 3 - 1);
      pa(b);
      run(t, b, y, 3, l / 3 - 1);
      pb(c);
      run(t, c, y, 2, l / 3 - 1);
      break;
    case 1:
      pb(a);
      run(t, a, y, 2, fl(l - 4));
      pa(b);
      run(t, b, y, 3, fl(l - 4));
      pc(c);
      run(t, c, y, 1, fl(l - 1));
      break;
    case 2:
      pa(a);
      run(t, a, y, 3, fl(l - 5));
      pb(b);
      run(t, b, y, 2, fl(l - 2));
      pc(c);
      run(t, c, y, 1, fl(l - 2));
      break;
  }
}

void cycle(RdfTriple& t, const Seq& x) {
  const int m = static_cast<int>(x.size());
  if (m < 3) throw Error(Errc::BadLength, "cycle needs at least 3 vertices");
  const int p = m / 3;
  switch (m % 3) {
    case 0:
      for (int j = 0; j < 3; ++j) run(t, j, x, j + 1, p - 1);
      break;
    case 1: {
      int q = fl(m - 4);
      put(t, 0, x, m - 1, 1);
      run(t, 0, x, 1, q);
      put(t, 1, x, m, 1);
      run(t, 1, x, 2, q);
      put(t, 2, x, 1, 1);
      run(t, 2, x, 3, q);
      break;
    }
    case 2:
      // no weight-2t+1 triple exists here; each f_j takes every third vertex
      // with wraparound
      run(t, 0, x, 1, p);
      run(t, 1, x, 2, p);
      run(t, 2, x, 3, p - 1);
      put(t, 2, x, 1, 2);
      break;
  }
}

void tailed_cycle(RdfTriple& t, const Seq& x, const Seq& y) {
  const int m = static_cast<int>(x.size());
  const int l = static_cast<int>(y.size());
  if (m % 3 != 1 || m < 4) throw Error(Errc::BadResidue, "tailed cycle needs m = 1 mod 3, m >= 4");
  if (l < 1) throw Error(Errc::BadTail, "tail must be nonempty");
  int q = fl(m - 4);
  put(t, 0, x, m - 1, 1);
  run(t, 0, x, 1, q);
  put(t, 1, x, m, 1);
  run(t, 1, x, 2, q);
  run(t, 2, x, 3, q);
  switch (l % 3) {
    case 0:
      run(t, 0, y, 3, fl(l - 3));
      run(t, 1, y, 2, fl(l - 3));
      put(t, 2, y, l, 1);
      run(t, 2, y, 1, fl(l - 3));
      break;
    case 1:
      run(t, 0, y, 3, fl(l - 4));
      put(t, 1, y, l, 1);
      run(t, 1, y, 2, fl(l - 4));
      run(t, 2, y, 1, fl(l - 1));
      break;
    case 2:
      put(t, 0, y, l, 1);
      run(t, 0, y, 3, fl(l - 5));
      run(t, 1, y, 2, fl(l - 2));
      run(t, 2, y, 1, fl(l - 2));
      break;
  }
}

void gadget(RdfTriple& t, int item, const Seq& c1, const Seq& c2, const Seq& z) {
  const int n1 = static_cast<int>(c1.size());
  const int n2 = static_cast<int>(c2.size());
  const int k = static_cast<int>(z.size()) / 3;

  run(t, 0, c1, 1, fl(n1 - 2));
  run(t, 1, c1, 2, fl(n1 - 2));
  if (item == 1) put(t, 2, c1, 1, 2);
  else put(t, 2, c1, n1, 1);
  run(t, 2, c1, 3, fl(n1 - 5));

  const int q = n2 / 3;
  auto two_a = [&](int j) { run(t, j, c2, 1, q); };
  auto two_b = [&](int j) { run(t, j, c2, 2, q); };
  auto two_c = [&](int j) {
    run(t, j, c2, 3, q - 1);
    put(t, j, c2, n2, 1);
  };

  switch (item) {
    case 1:
      if (n2 % 3 == 2) {
        run(t, 0, c2, 4, fl(n2 - 5));
        run(t, 1, c2, 3, fl(n2 - 5));
        put(t, 1, c2, n2, 1);
        put(t, 2, c2, 3, 1);
        put(t, 2, c2, n2 - 1, 1);
        run(t, 2, c2, 5, fl(n2 - 8));
      } else if (n2 % 3 == 0) {
        run(t, 0, c2, 4, fl(n2 - 6));
        run(t, 1, c2, 3, fl(n2 - 3));
        put(t, 2, c2, 3, 1);
        run(t, 2, c2, 5, fl(n2 - 6));
      } else {
        run(t, 0, c2, 4, fl(n2 - 7));
        put(t, 0, c2, n2 - 1, 1);
        run(t, 1, c2, 3, fl(n2 - 4));
        run(t, 2, c2, 2, fl(n2 - 4));
      }
      break;
    case 2:
      run(t, 0, z, 3, k - 1);
      run(t, 0, c2, 3, fl(n2 - 4));
      run(t, 1, z, 2, k - 1);
      run(t, 1, c2, 2, fl(n2 - 4));
      put(t, 1, c2, n2, 1);
      run(t, 2, z, 1, k - 1);
      run(t, 2, c2, 1, fl(n2 - 4));
      put(t, 2, c2, n2 - 1, 1);
      break;
    case 3:
      run(t, 0, z, 3, k - 1);
      run(t, 0, c2, 2, fl(n2 - 4));
      put(t, 0, c2, n2, 1);
      run(t, 1, z, 2, k - 1);
      run(t, 1, c2, 1, fl(n2 - 4));
      put(t, 1, c2, n2 - 1, 1);
      run(t, 2, z, 1, k);
      run(t, 2, c2, 3, fl(n2 - 4));
      break;
    case 4:
      run(t, 0, z, 3, k - 1);
      run(t, 0, c2, 1, fl(n2 - 4));
      put(t, 0, c2, n2 - 1, 1);
      run(t, 1, z, 2, k);
      run(t, 1, c2, 3, fl(n2 - 4));
      run(t, 2, z, 1, k);
      run(t, 2, c2, 2, fl(n2 - 4));
      put(t, 2, c2, n2, 1);
      break;
    case 5:
      run(t, 0, z, 3, k - 1);
      run(t, 0, c2, 3, fl(n2 - 5));
      put(t, 0, c2, n2, 1);
      run(t, 1, z, 2, k - 1);
      run(t, 1, c2, 2, fl(n2 - 2));
      run(t, 2, z, 1, k - 1);
      run(t, 2, c2, 1, fl(n2 - 2));
      break;
    case 6:
      run(t, 0, z, 3, k - 1);
      run(t, 1, z, 2, k - 1);
      run(t, 2, z, 1, k);
      two_b(0);
      two_a(1);
      two_c(2);
      break;
    case 7:
      run(t, 0, z, 3, k - 1);
      run(t, 1, z, 2, k);
      run(t, 2, z, 1, k);
      two_a(0);
      two_c(1);
      two_b(2);
      break;
    case 8:
      run(t, 0, z, 3, k - 1);
      run(t, 1, z, 2, k - 1);
      run(t, 2, z, 1, k - 1);
      run(t, 0, c2, 3, q - 1);
      run(t, 1, c2, 2, q - 1);
      run(t, 2, c2, 1, q - 1);
      break;
    case 9:
      run(t, 0, z, 3, k - 1);
      run(t, 1, z, 2, k - 1);
      run(t, 2, z, 1, k);
      run(t, 0, c2, 3, q - 1);
      run(t, 1, c2, 1, q - 1);
      run(t, 2, c2, 2, q - 1);
      break;
    case 10:
      run(t, 0, z, 3, k - 1);
      run(t, 1, z, 2, k);
      run(t, 2, z, 1, k);
      run(t, 0, c2, 1, q - 1);
      run(t, 1, c2, 3, q - 1);
      run(t, 2, c2, 2, q - 1);
      break;
    default:
      throw Error(Errc::SpecInvalid, "no gadget item " + std::to_string(item));
  }
}

void star(RdfTriple& t, Vertex hub, const std::vector<Seq>& cycles) {
  for (int j = 0; j < 3; ++j) {
    t[j].values[hub] = 2;
    for (const auto& x : cycles) {
      int m = static_cast<int>(x.size());
      run(t, j, x, 3, m / 3 - 1);
      put(t, j, x, m, 1);
    }
  }
}

void chordal_ear(RdfTriple& t, const Seq& x0, const Seq& y, int j) {
  const int m = static_cast<int>(x0.size());
  const int l = static_cast<int>(y.size());
  const int p = m / 3;
  if (l % 3 == 2) {
    // x_{3p+2} here; the printed index is off
    put(t, 0, x0, 3 * p + 2, 1);
    run(t, 0, x0, 3, p - 1);
    run(t, 0, y, 1, fl(l - 2));
    run(t, 1, x0, 2, p);
    run(t, 1, y, 2, fl(l - 5));
    put(t, 1, y, l - 1, 1);
    run(t, 2, x0, 1, p);
    run(t, 2, y, 3, fl(l - 5));
    put(t, 2, y, l, 1);
    return;
  }
  // l = 1 mod 3.  Written for j = 0 mod 3; j = 1 mod 3 walks the cycle the other way.
  Seq x = x0;
  if (j % 3 == 1) std::reverse(x.begin() + 1, x.end());
  run(t, 2, x, 1, p);
  run(t, 2, y, 3, fl(l - 4));
  run(t, 1, x, 2, p);
  run(t, 1, y, 2, fl(l - 4));
  put(t, 1, y, l, 1);
  run(t, 0, x, 3, p - 1);
  put(t, 0, x, 3 * p + 2, 1);
  if (l == 1) {
    put(t, 0, x, 1, 1);
  } else {
    run(t, 0, y, 1, fl(l - 4));
    put(t, 0, y, l - 1, 1);
  }
}

void f22_light(RdfTriple& t, const Seq& c1, const Seq& c2) {
  const int n1 = static_cast<int>(c1.size());
  const int n2 = static_cast<int>(c2.size());
  const int p = n1 / 3, q = n2 / 3;
  run(t, 0, c1, 1, p);
  run(t, 0, c2, 3, q - 1);
  put(t, 0, c2, n2, 1);
  run(t, 1, c2, 1, q);
  run(t, 1, c1, 3, p - 1);
  put(t, 1, c1, n1, 1);
  run(t, 2, c1, 1, p);
  for (int i = 1; i <= q; ++i) put(t, 2, c2, 3 * i + 1, 2);
  put(t, 2, c2, 2, 1);
}

}  // namespace labels

namespace {

using labels::Seq;

Seq iota_seq(int from, int count) {
  Seq s(count);
  std::iota(s.begin(), s.end(), from);
  return s;
}

void add_cycle_edges(std::vector<Edge>& es, const Seq& x) {
  for (std::size_t i = 0; i < x.size(); ++i) es.emplace_back(x[i], x[(i + 1) % x.size()]);
}

void add_path_edges(std::vector<Edge>& es, const Seq& y) {
  for (std::size_t i = 0; i + 1 < y.size(); ++i) es.emplace_back(y[i], y[i + 1]);
}

VertexSet all_but(int n, VertexSet drop) {
  std::sort(drop.begin(), drop.end());
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!std::binary_search(drop.begin(), drop.end(), v)) out.push_back(v);
  return out;
}

AnchoredTriple grow(const AnchoredTriple& base, int extra, const std::vector<Edge>& es) {
  AnchoredTriple out;
  out.graph = extend_graph(base.graph, extra, es);
  out.triple = base.triple;
  for (auto& f : out.triple) f.values.resize(out.graph.n(), 0);
  out.strong_claimed = base.strong_claimed;
  out.weight_claimed = base.weight_claimed;
  return out;
}

void claim_strong(AnchoredTriple& a, const Seq& vs) {
  a.strong_claimed.insert(a.strong_claimed.end(), vs.begin(), vs.end());
  std::sort(a.strong_claimed.begin(), a.strong_claimed.end());
  a.strong_claimed.erase(std::unique(a.strong_claimed.begin(), a.strong_claimed.end()), a.strong_claimed.end());
}

void check_anchor(const AnchoredTriple& base, Vertex u) {
  if (u < 0 || u >= base.graph.n()) throw Error(Errc::VertexOutOfRange, "anchor " + std::to_string(u));
  if (!is_strong(base.triple, u)) throw Error(Errc::NotStrong, "anchor " + std::to_string(u) + " is not strong");
}

}  // namespace

AnchoredTriple triple_for_cycle(int t) {
  if (t < 3) throw Error(Errc::BadLength, "cycle needs t >= 3");
  if (t % 3 == 2) throw Error(Errc::UnsupportedResidue, "no standalone triple for t = 2 mod 3");
  AnchoredTriple a;
  Seq x = iota_seq(0, t);
  std::vector<Edge> es;
  add_cycle_edges(es, x);
  a.graph = build_graph(t, es);
  a.triple = empty_triple(t);
  labels::cycle(a.triple, x);
  if (t % 3 == 0) {
    a.weight_claimed = 2 * t;
    a.strong_claimed = x;
  } else {
    a.weight_claimed = 2 * t + 1;
    a.strong_claimed = all_but(t, {t - 1});
  }
  return a;
}

AnchoredTriple triple_for_tailed_cycle(int m, int l) {
  if (m < 4 || m % 3 != 1) throw Error(Errc::BadResidue, "tailed cycle needs m = 1 mod 3, m >= 4");
  if (l < 1) throw Error(Errc::BadTail, "tail must be nonempty");
  AnchoredTriple a;
  Seq x = iota_seq(0, m), y = iota_seq(m, l);
  std::vector<Edge> es;
  add_cycle_edges(es, x);
  add_path_edges(es, y);
  es.emplace_back(x[0], y[0]);
  a.graph = build_graph(m + l, es);
  a.triple = empty_triple(m + l);
  labels::tailed_cycle(a.triple, x, y);
  a.weight_claimed = 2 * (m + l) + 1;
  a.strong_claimed = all_but(m + l, {m - 1});
  return a;
}

AnchoredTriple extend_along_ear(const AnchoredTriple& base, Vertex u, Vertex v, int l) {
  if (l < 1) throw Error(Errc::BadLength, "ear length must be >= 1");
  check_anchor(base, u);
  check_anchor(base, v);
  const int n = base.graph.n();
  Seq y = iota_seq(n, l);
  std::vector<Edge> es;
  add_path_edges(es, y);
  es.emplace_back(u, y.front());
  es.emplace_back(v, y.back());
  AnchoredTriple out = grow(base, l, es);
  labels::ear(out.triple, u, v, y);
  out.weight_claimed += 2 * l;
  if (l > 2) claim_strong(out, Seq(y.begin() + 1, y.end() - 1));
  return out;
}

AnchoredTriple attach_pendant_cycle(const AnchoredTriple& base, Vertex u, int t) {
  if (t % 3 == 0) throw Error(Errc::BadResidue, "pendant cycle length must be 1 or 2 mod 3");
  if (t < 4) throw Error(Errc::BadLength, "pendant cycle needs t >= 4");
  check_anchor(base, u);
  const int n = base.graph.n();
  Seq x = iota_seq(n, t);
  std::vector<Edge> es;
  add_cycle_edges(es, x);
  es.emplace_back(u, x[0]);
  AnchoredTriple out = grow(base, t, es);
  labels::pendant_cycle(out.triple, u, x);
  if (t % 3 == 1) {
    out.weight_claimed += 2 * t;
    claim_strong(out, Seq(x.begin(), x.end() - 1));
  } else {
    out.weight_claimed += 2 * t + 1;
    claim_strong(out, x);
  }
  return out;
}

AnchoredTriple attach_pendant_tailed_cycle(const AnchoredTriple& base, Vertex u, int m, int l) {
  if (m % 3 == 0) throw Error(Errc::BadResidue, "cycle length must be 1 or 2 mod 3");
  if (m < 4) throw Error(Errc::BadLength, "cycle needs m >= 4");
  if (l < 1) throw Error(Errc::BadTail, "tail must be nonempty");
  check_anchor(base, u);
  const int n = base.graph.n();
  Seq x = iota_seq(n, m), y = iota_seq(n + m, l);
  std::vector<Edge> es;
  add_cycle_edges(es, x);
  add_path_edges(es, y);
  es.emplace_back(x[0], y[0]);
  es.emplace_back(y.back(), u);
  AnchoredTriple out = grow(base, m + l, es);
  labels::pendant_tailed_cycle(out.triple, u, x, y);
  out.weight_claimed += 2 * (m + l) + (m % 3 == 2 ? 1 : 0);
  Seq added = x;
  if (m % 3 == 1) added.pop_back();
  added.insert(added.end(), y.begin(), y.end());
  claim_strong(out, added);
  return out;
}

int gadget_item_for(int n1_res, int n2_res, int path_len) {
  if (n1_res != 2 || path_len < 0) return 0;
  switch (n2_res) {
    case 1: return 2 + path_len % 3;
    case 2: return 5 + path_len % 3;
    case 0: return 8 + path_len % 3;
  }
  return 0;
}

AnchoredTriple two_cycle_gadget(const GadgetSpec& spec) {
  if (spec.item == kStarItem) return star_of_cycles(spec.lengths);
  const int item = spec.item;
  if (item < 1 || item > 10) throw Error(Errc::SpecInvalid, "gadget item must be 1..11");
  const int n1 = spec.n1, n2 = spec.n2;
  if (n1 < 5 || n1 % 3 != 2) throw Error(Errc::ResidueMismatch, "C1 must have length 2 mod 3, >= 5");

  if (item == 1) {
    if (spec.connector.kind != ConnectorKind::Identify)
      throw Error(Errc::ConnectorMismatch, "item 1 identifies x_1 of both cycles");
    if (n2 < 3) throw Error(Errc::ResidueMismatch, "C2 needs at least 3 vertices");
    const int n = n1 + n2 - 1;
    Seq c1 = iota_seq(0, n1);
    Seq c2{0};
    for (int i = 0; i < n2 - 1; ++i) c2.push_back(n1 + i);
    std::vector<Edge> es;
    add_cycle_edges(es, c1);
    add_cycle_edges(es, c2);
    AnchoredTriple a;
    a.graph = build_graph(n, es);
    a.triple = empty_triple(n);
    labels::gadget(a.triple, 1, c1, c2, {});
    a.weight_claimed = 2 * n + 1;
    a.strong_claimed = all_but(n, {c2[1], c2.back()});
    return a;
  }

  const int want = item <= 4 ? 1 : (item <= 7 ? 2 : 0);
  const int min2 = want == 0 ? 3 : (want == 1 ? 4 : 5);
  if (n2 % 3 != want || n2 < min2)
    throw Error(Errc::ResidueMismatch, "item " + std::to_string(item) + " needs n2 = " + std::to_string(want) +
                                           " mod 3, n2 >= " + std::to_string(min2));
  int len;
  switch (spec.connector.kind) {
    case ConnectorKind::Identify:
      throw Error(Errc::ConnectorMismatch, "only item 1 identifies vertices");
    case ConnectorKind::Edge:
      len = 0;
      break;
    default:
      len = spec.connector.length;
  }
  if (len < 0 || len % 3 != (item - 2) % 3)
    throw Error(Errc::ConnectorMismatch, "item " + std::to_string(item) + " needs a connector of length " +
                                             std::to_string((item - 2) % 3) + " mod 3");

  const int n = n1 + n2 + len;
  Seq c1 = iota_seq(0, n1), c2 = iota_seq(n1, n2), z = iota_seq(n1 + n2, len);
  std::vector<Edge> es;
  add_cycle_edges(es, c1);
  add_cycle_edges(es, c2);
  add_path_edges(es, z);
  if (len == 0) {
    es.emplace_back(c1[0], c2[0]);
  } else {
    es.emplace_back(c1[0], z.front());
    es.emplace_back(z.back(), c2[0]);
  }
  AnchoredTriple a;
  a.graph = build_graph(n, es);
  a.triple = empty_triple(n);
  labels::gadget(a.triple, item, c1, c2, z);
  a.weight_claimed = 2 * n + ((item >= 5 && item <= 7) ? 2 : 1);
  a.strong_claimed = item <= 4 ? all_but(n, {c2.back()}) : all_but(n, {});
  return a;
}

AnchoredTriple star_of_cycles(const std::vector<int>& lengths) {
  const int s = static_cast<int>(lengths.size());
  if (s < 3) throw Error(Errc::TooFewCycles, "star needs at least 3 cycles");
  for (int m : lengths)
    if (m < 5 || m % 3 != 2) throw Error(Errc::BadResidue, "star cycles must have length 2 mod 3, >= 5");
  int n = 1;
  std::vector<Seq> cycles;
  std::vector<Edge> es;
  for (int m : lengths) {
    cycles.push_back(iota_seq(n, m));
    add_cycle_edges(es, cycles.back());
    es.emplace_back(0, n);
    n += m;
  }
  AnchoredTriple a;
  a.graph = build_graph(n, es);
  a.triple = empty_triple(n);
  labels::star(a.triple, 0, cycles);
  a.weight_claimed = 2 * n - s + 4;
  a.strong_claimed = {0};
  for (const auto& x : cycles)
    for (int i = 3; i < static_cast<int>(x.size()); i += 3) a.strong_claimed.push_back(x[i - 1]);
  std::sort(a.strong_claimed.begin(), a.strong_claimed.end());
  return a;
}

AnchoredTriple cycle_with_chordal_ear(int p, int l, int j) {
  if (p < 1) throw Error(Errc::BadResidue, "cycle length 3p+2 needs p >= 1");
  if (l < 1) throw Error(Errc::BadLength, "ear must be nonempty");
  if (l % 3 == 0) throw Error(Errc::BadResidue, "ear length must be 1 or 2 mod 3");
  const int m = 3 * p + 2;
  if (j < 2 || j > m) throw Error(Errc::ConditionViolated, "attachment index must be in 2..3p+2");
  if (l % 3 == 1 && j % 3 == 2) throw Error(Errc::ConditionViolated, "(a): l = 1 mod 3 forbids j = 2 mod 3");
  if (l % 3 == 2 && j % 3 != 2) throw Error(Errc::ConditionViolated, "(b): l = 2 mod 3 needs j = 2 mod 3");
  const int n = m + l;
  Seq x = iota_seq(0, m), y = iota_seq(m, l);
  std::vector<Edge> es;
  add_cycle_edges(es, x);
  add_path_edges(es, y);
  es.emplace_back(y.front(), x[0]);
  es.emplace_back(y.back(), x[j - 1]);
  AnchoredTriple a;
  a.graph = build_graph(n, es);
  a.triple = empty_triple(n);
  labels::chordal_ear(a.triple, x, y, j);
  a.weight_claimed = 2 * n + 1;
  a.strong_claimed = all_but(n, {y.front(), y.back()});
  return a;
}

}  // namespace rdom
