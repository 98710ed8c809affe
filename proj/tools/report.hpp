#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdom/engine.hpp"
#include "rdom/structure.hpp"

namespace rdom::report {

inline constexpr int kSchema = 1;

struct Hypothesis {
  int k = 0;
  int n = 0;
  bool n_ok = false;
  bool delta_ok = false;
  std::vector<std::vector<int>> forbidden_found;
  bool passes = false;
  bool operator==(const Hypothesis&) const = default;
};

struct Exact {
  int gamma_r = 0;
  int differential = 0;
  bool gallai = false;
  bool operator==(const Exact&) const = default;
};

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool operator==(const Fraction&) const = default;
};

struct Certificate {
  int k = 0;
  int n = 0;
  std::string route;
  Fraction bound;
  std::vector<int> witness;
  int witness_weight = 0;
  Fraction differential_lower;
  bool rdf_valid = false;
  bool bound_ok = false;
  std::optional<bool> gallai_ok;
  bool tight = false;
  int steps = 0;
  bool steps_ok = true;
  std::string fallback_reason;
  bool operator==(const Certificate&) const = default;
};

struct DecompPart {
  std::vector<int> vertices;
  std::string tag;
  int r = 0;
  int s = 0;
  bool operator==(const DecompPart&) const = default;
};

struct Decomp {
  std::string strategy;
  std::vector<int> g1;
  std::vector<DecompPart> parts;
  bool valid = false;
  bool operator==(const Decomp&) const = default;
};

// One connected component of the input (the whole graph when connected).
struct Part {
  std::vector<int> vertices;
  std::optional<Hypothesis> hypothesis;
  std::optional<Exact> exact;
  std::optional<Certificate> certificate;
  std::optional<Decomp> decomposition;
  bool operator==(const Part&) const = default;
};

struct BatchEntry {
  std::string name;
  int n = 0;
  std::string route;
  int witness_weight = 0;
  std::optional<int> gamma_r;
  bool ok = true;
  bool operator==(const BatchEntry&) const = default;
};

struct Batch {
  int k = 0;
  int cap = 0;
  std::uint64_t seed = 0;
  int generated = 0;
  int checked = 0;
  std::map<std::string, int> routes;
  std::vector<BatchEntry> failures;
  bool operator==(const Batch&) const = default;
};

struct RunReport {
  int schema = kSchema;
  std::string command;
  std::string input_digest;
  std::optional<int> k;
  int n = 0;
  std::vector<Part> parts;
  std::optional<Batch> batch;
  std::map<std::string, double> timing_ms;
  std::vector<std::string> warnings;
  int exit_code = 0;
  bool operator==(const RunReport&) const = default;
};

Hypothesis from(const HypothesisReport& h);
Certificate from(const BoundCertificate& c);
Decomp from(const Decomposition& d, bool valid);

std::string to_json(const RunReport& r, int indent = 2);
// Throws Error(ParseError) on malformed input or an unknown schema.
RunReport parse_json(const std::string& text);

// 64-bit FNV-1a over the raw input bytes, as "fnv1a64:<16 hex digits>".
std::string digest(const std::string& bytes);

}  // namespace rdom::report
