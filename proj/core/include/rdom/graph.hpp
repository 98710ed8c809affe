#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rdom {

using Vertex = int;
// Sorted, duplicate-free.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Bitmask algorithms cap the vertex count here.
inline constexpr int kMaskLimit = 64;

class Graph {
public:
  Graph() = default;

  int n() const { return static_cast<int>(adj_.size()); }
  std::size_t m() const { return m_; }
  const std::vector<Vertex>& adj(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  int min_degree() const;

  // Valid only when n() <= kMaskLimit.
  std::uint64_t adj_mask(Vertex v) const { return mask_[v]; }
  std::uint64_t closed_mask(Vertex v) const { return mask_[v] | (std::uint64_t{1} << v); }
  std::uint64_t all_mask() const;
  bool maskable() const { return n() <= kMaskLimit; }

  std::vector<Edge> edges() const;
  bool connected() const;
  std::vector<VertexSet> components() const;

  friend Graph build_graph(int n, const std::vector<Edge>& edges);

private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> mask_;
  std::size_t m_ = 0;
};

// Duplicates are dropped; self-loops and out-of-range ids throw.
Graph build_graph(int n, const std::vector<Edge>& edges);

// Adds `extra` fresh vertices (ids n..n+extra-1) and the given edges.
Graph extend_graph(const Graph& g, int extra, const std::vector<Edge>& edges);

struct VertexPath {
  std::vector<Vertex> vertices;
  std::size_t size() const { return vertices.size(); }
  bool operator==(const VertexPath&) const = default;
};

struct VertexCycle {
  std::vector<Vertex> vertices;
  std::size_t size() const { return vertices.size(); }
  int residue() const { return static_cast<int>(vertices.size() % 3); }
  bool operator==(const VertexCycle&) const = default;
};

bool is_path_in(const Graph& g, const VertexPath& p);
bool is_cycle_in(const Graph& g, const VertexCycle& c);
bool is_induced_cycle(const Graph& g, const VertexCycle& c);

// Rotation starting at the minimum vertex, oriented toward the smaller neighbour.
VertexCycle canonical_cycle(std::vector<Vertex> vs);

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;
  std::vector<int> from_host;  // -1 where the host vertex is absent
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& vs);
// Subgraph on `vs` keeping only the listed host edges.
Subgraph edge_subgraph(const Graph& g, const VertexSet& vs, const std::vector<Edge>& edges);

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

std::vector<VertexCycle> induced_cycles_up_to(const Graph& g, int max_len);

VertexPath longest_path(const Graph& g);

VertexPath shortest_connecting_path(const Graph& g, const VertexSet& a, const VertexSet& b);

// Cycle enumeration over the vertices in `allowed`. Each cycle is reported once in
// canonical form; the callback returns false to stop. Returns false if stopped.
bool for_each_cycle(const Graph& g, std::uint64_t allowed, int max_len,
                    const std::function<bool(const VertexCycle&)>& fn);

// True iff the subgraph induced by `allowed` has a cycle whose length mod 3 is in
// `residues` (bit r set means residue r).
bool has_cycle_with_residue(const Graph& g, std::uint64_t allowed, unsigned residues);

// Edge-list text format.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

std::uint64_t to_mask(const VertexSet& s);
VertexSet from_mask(std::uint64_t m);

}  // namespace rdom
