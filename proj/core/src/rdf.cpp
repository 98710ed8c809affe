#include "rdom/rdf.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rdom/error.hpp"

namespace rdom {

int RomanFunction::weight() const { return std::accumulate(values.begin(), values.end(), 0); }

RdfTriple empty_triple(int n) { return {RomanFunction(n), RomanFunction(n), RomanFunction(n)}; }

bool is_rdf(const Graph& g, const RomanFunction& f) {
  if (f.size() != g.n())
    throw Error(Errc::HostMismatch, "function has " + std::to_string(f.size()) + " labels, graph has " +
                                        std::to_string(g.n()) + " vertices");
  for (Vertex v = 0; v < g.n(); ++v) {
    if (f[v] > 2) return false;
    if (f[v] != 0) continue;
    bool ok = false;
    for (Vertex w : g.adj(v))
      if (f[w] == 2) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

TripleReport validate_triple(const Graph& g, const RdfTriple& t) {
  TripleReport r;
  for (int j = 0; j < 3; ++j) {
    r.valid[j] = is_rdf(g, t[j]);
    r.weights[j] = t[j].weight();
    r.weight_total += r.weights[j];
    if (r.weights[j] < r.weights[r.min_index]) r.min_index = j;
  }
  r.strong_set = strong_vertices(t);
  return r;
}

bool is_strong(const RdfTriple& t, Vertex v) { return t[0][v] == 2 || t[1][v] == 2 || t[2][v] == 2; }

VertexSet strong_vertices(const RdfTriple& t) {
  VertexSet out;
  for (Vertex v = 0; v < t[0].size(); ++v)
    if (is_strong(t, v)) out.push_back(v);
  return out;
}

int differential_of_set(const Graph& g, const VertexSet& d) {
  std::vector<char> in(g.n(), 0), border(g.n(), 0);
  int size = 0;
  for (Vertex v : d) {
    if (v < 0 || v >= g.n()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
    if (!in[v]) ++size;
    in[v] = 1;
  }
  int b = 0;
  for (Vertex v : d)
    for (Vertex w : g.adj(v))
      if (!in[w] && !border[w]) {
        border[w] = 1;
        ++b;
      }
  return b - size;
}

RomanFunction restrict_to(const RomanFunction& f, const Subgraph& s) {
  RomanFunction r(static_cast<int>(s.to_host.size()));
  for (std::size_t i = 0; i < s.to_host.size(); ++i) r.values[i] = f[s.to_host[i]];
  return r;
}

void lift_into(RomanFunction& host, const RomanFunction& f, const Subgraph& s) {
  if (f.size() != static_cast<int>(s.to_host.size())) throw Error(Errc::HostMismatch, "subgraph size mismatch");
  for (std::size_t i = 0; i < s.to_host.size(); ++i) host.values[s.to_host[i]] = f.values[i];
}

std::string format_function(const RomanFunction& f) {
  std::string s;
  for (int i = 0; i < f.size(); ++i) {
    if (i) s += ' ';
    s += static_cast<char>('0' + f[i]);
  }
  return s;
}

RomanFunction parse_function(const std::string& line) {
  std::istringstream in(line);
  RomanFunction f;
  int x;
  while (in >> x) {
    if (x < 0 || x > 2) throw Error(Errc::ParseError, "label out of range: " + std::to_string(x));
    f.values.push_back(static_cast<std::uint8_t>(x));
  }
  if (!in.eof()) throw Error(Errc::ParseError, "bad label list");
  return f;
}

void write_triple(std::ostream& out, const RdfTriple& t) {
  for (const auto& f : t) out << format_function(f) << '\n';
}

}  // namespace rdom
