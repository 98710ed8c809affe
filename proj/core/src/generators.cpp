#include "rdom/generators.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "rdom/error.hpp"
#include "rdom/structure.hpp"

namespace rdom {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using namespace family;

// Distributions in <random> are implementation defined; these are not.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t s) : eng(s) {}
  double real() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t lim = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = eng();
    while (x >= lim);
    return x % n;
  }
};

void bad(const std::string& msg) { throw Error(Errc::SpecInvalid, msg); }

struct Builder {
  int n = 0;
  std::vector<Edge> edges;
  int cycle(int len) {
    int s = n;
    for (int i = 0; i < len; ++i) edges.emplace_back(s + i, s + (i + 1) % len);
    n += len;
    return s;
  }
  // fresh path of `len` vertices from a to b; an edge when len == 0
  void join(Vertex a, Vertex b, int len) {
    Vertex prev = a;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, n);
      prev = n++;
    }
    edges.emplace_back(prev, b);
  }
};

void check(const F02& f) {
  if (f.n0 < 3 || f.n0 % 3 != 0) bad("F02 needs n0 >= 3 with n0 = 0 mod 3");
  if (f.n2 < 5 || f.n2 % 3 != 2) bad("F02 needs n2 >= 5 with n2 = 2 mod 3");
  if (f.conn < 0) bad("negative connector");
}

void check(const F22& f) {
  if (f.a < 5 || f.a % 3 != 2 || f.b < 5 || f.b % 3 != 2) bad("F22 cycles must be >= 5 and 2 mod 3");
}

void put_f02(Builder& b, const F02& f) {
  int c0 = b.cycle(f.n0);
  int c2 = b.cycle(f.n2);
  b.join(c0, c2, f.conn);
}

void put_f22(Builder& b, const F22& f) {
  int ca = b.cycle(f.a);
  int cb = b.cycle(f.b);
  b.edges.emplace_back(ca, cb);
}

Graph random_graph(const RandomMinDeg2& r, std::uint64_t seed) {
  if (r.n < 3) bad("random graph needs n >= 3");
  if (!(r.edge_prob >= 0.0 && r.edge_prob <= 1.0)) bad("edge_prob outside [0,1]");
  if (r.k_filter >= 0 && r.n < 6 * r.k_filter + 9) bad("n below 6k+9 can never pass the hypotheses");
  if (r.n > kMaskLimit) bad("random graphs are capped at 64 vertices");
  Rng rng(split_seed(seed, 0));
  for (int attempt = 0; attempt < kRandomRetries; ++attempt) {
    // random labelled tree from a Prufer sequence keeps the graph connected
    std::vector<int> code(r.n - 2), deg(r.n, 1);
    for (int& c : code) {
      c = static_cast<int>(rng.below(r.n));
      ++deg[c];
    }
    std::vector<Edge> es;
    for (int c : code) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      es.emplace_back(leaf, c);
      --deg[leaf];
      --deg[c];
    }
    int u = -1;
    for (int v = 0; v < r.n; ++v)
      if (deg[v] == 1) {
        if (u < 0) u = v;
        else es.emplace_back(u, v);
      }
    for (int a = 0; a < r.n; ++a)
      for (int b = a + 1; b < r.n; ++b)
        if (rng.real() < r.edge_prob) es.emplace_back(a, b);
    Graph g = build_graph(r.n, es);
    if (g.min_degree() < 2) continue;
    if (r.k_filter >= 0 && !check_hypotheses(g, r.k_filter).passes) continue;
    return g;
  }
  throw Error(Errc::RetriesExhausted, "no acceptable graph after " + std::to_string(kRandomRetries) + " tries");
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  Builder b;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Cycle>) {
          if (f.n < 3) bad("cycle needs n >= 3");
          b.cycle(f.n);
        } else if constexpr (std::is_same_v<T, TailedCycle>) {
          if (f.m < 3 || f.l < 1) bad("tailed cycle needs m >= 3 and l >= 1");
          b.cycle(f.m);
          b.n += f.l;
          b.edges.emplace_back(0, f.m);
          for (int i = 0; i + 1 < f.l; ++i) b.edges.emplace_back(f.m + i, f.m + i + 1);
        } else if constexpr (std::is_same_v<T, F02>) {
          check(f);
          put_f02(b, f);
        } else if constexpr (std::is_same_v<T, F22>) {
          check(f);
          put_f22(b, f);
        } else if constexpr (std::is_same_v<T, F3>) {
          check(f.f02);
          check(f.f22);
          if (f.conn < 0) bad("negative connector");
          put_f02(b, f.f02);
          int base = b.n;
          put_f22(b, f.f22);
          b.join(1, base + 1, f.conn);
        } else if constexpr (std::is_same_v<T, Brs>) {
          if (f.tails.size() + f.cycles.size() < 2) bad("Brs needs r + s >= 2");
          b.n = 1;
          for (auto [m, l] : f.tails) {
            if (m < 5 || m % 3 != 2) bad("Brs cycles must be >= 5 and 2 mod 3");
            if (l < 1) bad("Brs tails need l >= 1");
            int c = b.cycle(m);
            b.join(c, 0, l);
          }
          for (int m : f.cycles) {
            if (m < 5 || m % 3 != 2) bad("Brs cycles must be >= 5 and 2 mod 3");
            int c = b.cycle(m);
            b.edges.emplace_back(0, c);
          }
        } else {
          b.n = -1;
        }
      },
      spec.family);
  if (b.n < 0) return random_graph(std::get<RandomMinDeg2>(spec.family), spec.seed);
  return build_graph(b.n, b.edges);
}

std::string describe(const FamilySpec& spec) {
  std::ostringstream os;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Cycle>) {
          os << "C" << f.n;
        } else if constexpr (std::is_same_v<T, TailedCycle>) {
          os << "C" << f.m << "," << f.l;
        } else if constexpr (std::is_same_v<T, F02>) {
          os << "F02(" << f.n0 << "," << f.n2 << "," << f.conn << ")";
        } else if constexpr (std::is_same_v<T, F22>) {
          os << "F22(" << f.a << "," << f.b << ")";
        } else if constexpr (std::is_same_v<T, F3>) {
          os << "F3(" << f.f02.n0 << "," << f.f02.n2 << "," << f.f02.conn << ";" << f.f22.a << "," << f.f22.b << ";"
             << f.conn << ")";
        } else if constexpr (std::is_same_v<T, Brs>) {
          os << "B(";
          for (auto [m, l] : f.tails) os << m << "+" << l << " ";
          os << "|";
          for (int m : f.cycles) os << " " << m;
          os << ")";
        } else {
          os << "G(" << f.n << "," << f.edge_prob << ")#" << spec.seed;
        }
      },
      spec.family);
  return os.str();
}

namespace {

void brs_sweep(int cap, std::vector<FamilySpec>& out) {
  // non-decreasing (m, l) tails then non-decreasing cycles
  std::vector<std::pair<int, int>> tails;
  std::vector<int> cycles;
  std::function<void(int, std::pair<int, int>)> add_tail;
  std::function<void(int, int)> add_cycle = [&](int used, int min_m) {
    if (tails.size() + cycles.size() >= 2) out.push_back({Brs{tails, cycles}, 0});
    for (int m = min_m; used + m <= cap; m += 3) {
      cycles.push_back(m);
      add_cycle(used + m, m);
      cycles.pop_back();
    }
  };
  add_tail = [&](int used, std::pair<int, int> lo) {
    add_cycle(used, 5);
    for (int m = lo.first; used + m + 1 <= cap; m += 3)
      for (int l = m == lo.first ? lo.second : 1; used + m + l <= cap; ++l) {
        tails.emplace_back(m, l);
        add_tail(used + m + l, {m, l});
        tails.pop_back();
      }
  };
  add_tail(1, {5, 1});
}

}  // namespace

std::vector<SuiteEntry> family_suite(int k, int cap, std::uint64_t seed) {
  std::vector<FamilySpec> specs;
  for (int n = 3; n <= cap; ++n) specs.push_back({Cycle{n}, 0});
  for (int m = 3; m < cap; ++m)
    for (int l = 1; m + l <= cap; ++l) specs.push_back({TailedCycle{m, l}, 0});
  for (int n0 = 3; n0 + 5 <= cap; n0 += 3)
    for (int n2 = 5; n0 + n2 <= cap; n2 += 3)
      for (int c = 0; n0 + n2 + c <= cap; ++c) specs.push_back({F02{n0, n2, c}, 0});
  for (int a = 5; a + 5 <= cap; a += 3)
    for (int b = a; a + b <= cap; b += 3) specs.push_back({F22{a, b}, 0});
  for (int n0 = 3; n0 + 15 <= cap; n0 += 3)
    for (int n2 = 5; n0 + n2 + 10 <= cap; n2 += 3)
      for (int c1 = 0; n0 + n2 + c1 + 10 <= cap; ++c1)
        for (int a = 5; n0 + n2 + c1 + a + 5 <= cap; a += 3)
          for (int b = a; n0 + n2 + c1 + a + b <= cap; b += 3)
            for (int c = 0; n0 + n2 + c1 + a + b + c <= cap; ++c)
              specs.push_back({F3{F02{n0, n2, c1}, F22{a, b}, c}, 0});
  brs_sweep(cap, specs);
  int lo = 6 * k + 9;
  for (int i = 0; i < 4 && lo <= cap; ++i) {
    int n = lo + static_cast<int>(split_seed(seed, 100 + i) % static_cast<std::uint64_t>(cap - lo + 1));
    specs.push_back({RandomMinDeg2{n, 0.07, k}, split_seed(seed, i)});
  }

  std::vector<SuiteEntry> out;
  for (auto& s : specs) {
    Graph g;
    try {
      g = generate(s);
    } catch (const Error& e) {
      if (e.code() == Errc::RetriesExhausted) continue;
      throw;
    }
    if (k >= 1 && !check_hypotheses(g, k).forbidden_found.empty()) continue;
    out.push_back({std::move(g), std::move(s)});
  }
  return out;
}

}  // namespace rdom
