#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

struct RomanFunction {
  std::vector<std::uint8_t> values;

  RomanFunction() = default;
  explicit RomanFunction(int n) : values(n, 0) {}
  explicit RomanFunction(std::vector<std::uint8_t> v) : values(std::move(v)) {}

  int size() const { return static_cast<int>(values.size()); }
  int weight() const;
  std::uint8_t operator[](Vertex v) const { return values[v]; }
  bool operator==(const RomanFunction&) const = default;
};

using RdfTriple = std::array<RomanFunction, 3>;

RdfTriple empty_triple(int n);

struct TripleReport {
  std::array<bool, 3> valid{};
  std::array<int, 3> weights{};
  int weight_total = 0;
  VertexSet strong_set;
  int min_index = 0;  // lowest index among the lightest components

  bool all_valid() const { return valid[0] && valid[1] && valid[2]; }
};

bool is_rdf(const Graph& g, const RomanFunction& f);
TripleReport validate_triple(const Graph& g, const RdfTriple& t);
VertexSet strong_vertices(const RdfTriple& t);
bool is_strong(const RdfTriple& t, Vertex v);

// |B(D)| - |D|, with B(D) the vertices outside D that have a neighbour in D.
int differential_of_set(const Graph& g, const VertexSet& d);

// f restricted to the subgraph's vertices, in subgraph ids.
RomanFunction restrict_to(const RomanFunction& f, const Subgraph& s);
// Copy subgraph labels back onto host ids; other host labels are kept.
void lift_into(RomanFunction& host, const RomanFunction& f, const Subgraph& s);

std::string format_function(const RomanFunction& f);
RomanFunction parse_function(const std::string& line);
void write_triple(std::ostream& out, const RdfTriple& t);

}  // namespace rdom
