// rdom: hypothesis checks, exact values and constructive bound certificates for
// Roman domination on small graphs.

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/core.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "rdom/engine.hpp"
#include "rdom/error.hpp"
#include "rdom/generators.hpp"
#include "rdom/oracle.hpp"
#include "rdom/structure.hpp"
#include "report.hpp"

namespace {

using namespace rdom;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitHypothesis = 1;
constexpr int kExitViolation = 2;
constexpr int kExitUsage = 64;

struct Options {
  bool json = false;
  int k = 1;
  int limit = kDefaultOracleLimit;
  bool emit_witness = false;
  bool oracle = false;
  std::string file;
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  int cap = 20;
};

bool use_color() {
  static const bool on = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return on;
}

std::string paint(const std::string& s, bool good) {
  if (!use_color()) return s;
  return (good ? "\033[32m" : "\033[31m") + s + "\033[0m";
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Input {
  Graph graph;
  std::string digest;
};

Input load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();
  std::istringstream is(bytes);
  return {read_edge_list(is), report::digest(bytes)};
}

struct Piece {
  Subgraph sub;
  VertexSet vertices;
};

std::vector<Piece> split(const Graph& g, report::RunReport& rep) {
  std::vector<Piece> out;
  auto comps = g.components();
  if (comps.size() > 1) {
    std::string msg = fmt::format("input has {} components; each is processed on its own", comps.size());
    spdlog::warn(msg);
    rep.warnings.push_back(msg);
  }
  for (auto& c : comps) out.push_back({induced_subgraph(g, c), c});
  return out;
}

std::string fraction(std::int64_t num, std::int64_t den) {
  if (num % den == 0) return std::to_string(num / den);
  return fmt::format("{}/{} ({:.3f})", num, den, static_cast<double>(num) / static_cast<double>(den));
}

void print_hypothesis(const HypothesisReport& h) {
  fmt::print("  hypotheses k={}: n={} (need {}) {}, min degree >= 2 {}, forbidden induced cycles {} -> {}\n", h.k, h.n,
             6 * h.k + 9, h.n_ok ? "ok" : "low", h.delta_ok ? "yes" : "no", h.forbidden_found.size(),
             paint(h.passes ? "PASS" : "FAIL", h.passes));
  for (std::size_t i = 0; i < h.forbidden_found.size() && i < 5; ++i) {
    std::string cyc;
    for (Vertex v : h.forbidden_found[i].vertices) cyc += " " + std::to_string(v);
    fmt::print("    C{}:{}\n", h.forbidden_found[i].size(), cyc);
  }
  if (h.forbidden_found.size() > 5) fmt::print("    ... {} more\n", h.forbidden_found.size() - 5);
}

void print_certificate(const BoundCertificate& c) {
  fmt::print("  route {}, witness weight {}, bound {}{}\n", route_name(c.route), c.witness_weight,
             fraction(c.bound_num, c.bound_den), c.tight() ? ", tight" : "");
  if (!c.fallback_reason.empty()) fmt::print("  constructive routes gave up: {}\n", c.fallback_reason);
  fmt::print("  differential >= {} (needs >= {}), bound check {}\n", c.n - c.witness_weight,
             fraction(c.diff_num, c.diff_den), paint(c.checks.bound_ok ? "ok" : "VIOLATED", c.checks.bound_ok));
}

int cmd_analyze(const Options& o, report::RunReport& rep) {
  auto t0 = Clock::now();
  Input in = load(o.file);
  rep.input_digest = in.digest;
  rep.n = in.graph.n();
  rep.k = o.k;
  rep.timing_ms["read"] = ms_since(t0);
  int code = kExitOk;
  auto t1 = Clock::now();
  int idx = 0;
  for (auto& piece : split(in.graph, rep)) {
    const Graph& g = piece.sub.graph;
    report::Part part;
    part.vertices = piece.vertices;
    HypothesisReport h = check_hypotheses(g, o.k);
    for (auto& c : h.forbidden_found)
      for (Vertex& v : c.vertices) v = piece.sub.to_host[v];
    part.hypothesis = report::from(h);
    if (!h.passes) code = kExitHypothesis;
    if (!o.json) {
      fmt::print("part {}: n={} m={}\n", idx, g.n(), g.m());
      print_hypothesis(h);
    }
    if (h.delta_ok && g.maskable()) {
      try {
        Decomposition d = disjoint_bad_cycle_decomposition(g);
        bool valid = validate_decomposition(g, d).empty();
        for (Vertex& v : d.g1_vertices) v = piece.sub.to_host[v];
        for (auto& c : d.g2_components)
          for (Vertex& v : c.vertices) v = piece.sub.to_host[v];
        part.decomposition = report::from(d, valid);
        if (!o.json) {
          fmt::print("  decomposition ({}): {} vertices outside, components", d.strategy, d.g1_vertices.size());
          for (auto& c : d.g2_components) fmt::print(" {}[{}]", tag_name(c.cls.tag), c.vertices.size());
          fmt::print("\n");
        }
      } catch (const Error& e) {
        if (!o.json) fmt::print("  no decomposition: {}\n", e.what());
      }
    }
    rep.parts.push_back(std::move(part));
    ++idx;
  }
  rep.timing_ms["analyze"] = ms_since(t1);
  return code;
}

int cmd_exact(const Options& o, report::RunReport& rep) {
  auto t0 = Clock::now();
  Input in = load(o.file);
  rep.input_digest = in.digest;
  rep.n = in.graph.n();
  rep.timing_ms["read"] = ms_since(t0);
  auto t1 = Clock::now();
  int idx = 0;
  for (auto& piece : split(in.graph, rep)) {
    const Graph& g = piece.sub.graph;
    ExactResult gr = gamma_r_exact(g, o.limit);
    ExactResult df = differential_exact(g, o.limit);
    report::Part part;
    part.vertices = piece.vertices;
    part.exact = report::Exact{gr.value, df.value, gr.value + df.value == g.n()};
    if (!o.json) {
      fmt::print("part {}: n={} m={}\n", idx, g.n(), g.m());
      fmt::print("  gamma_R = {}  differential = {}  sum = {} {}\n", gr.value, df.value, gr.value + df.value,
                 paint(part.exact->gallai ? "(= n)" : "(!= n)", part.exact->gallai));
      fmt::print("  optimal labels: {}\n", format_function(gr.witness));
    }
    rep.parts.push_back(std::move(part));
    ++idx;
  }
  rep.timing_ms["exact"] = ms_since(t1);
  return kExitOk;
}

// bound and verify share everything but the oracle comparison
int cmd_certify(const Options& o, report::RunReport& rep, bool with_oracle) {
  auto t0 = Clock::now();
  Input in = load(o.file);
  rep.input_digest = in.digest;
  rep.n = in.graph.n();
  rep.k = o.k;
  rep.timing_ms["read"] = ms_since(t0);
  int code = kExitOk;
  RomanFunction whole(in.graph.n());
  double t_bound = 0, t_exact = 0;
  int idx = 0;
  for (auto& piece : split(in.graph, rep)) {
    const Graph& g = piece.sub.graph;
    report::Part part;
    part.vertices = piece.vertices;
    HypothesisReport h = check_hypotheses(g, o.k);
    for (auto& c : h.forbidden_found)
      for (Vertex& v : c.vertices) v = piece.sub.to_host[v];
    part.hypothesis = report::from(h);
    if (!o.json) {
      fmt::print("part {}: n={} m={}\n", idx, g.n(), g.m());
      print_hypothesis(h);
    }
    if (!h.passes) {
      code = std::max(code, kExitHypothesis);
      rep.parts.push_back(std::move(part));
      ++idx;
      continue;
    }
    auto t1 = Clock::now();
    EngineOptions eo;
    eo.oracle_limit = o.limit;
    BoundCertificate cert = construct_bound_triple(g, o.k, eo);
    bool violated = false;
    try {
      certify_bound(g, o.k, cert, with_oracle, o.limit);
    } catch (const Error& e) {
      if (e.code() != Errc::BoundViolated) throw;
      violated = true;
      spdlog::error("counterexample: {}", e.what());
    }
    t_bound += ms_since(t1);
    if (with_oracle) {
      auto t2 = Clock::now();
      ExactResult gr = gamma_r_exact(g, o.limit);
      ExactResult df = differential_exact(g, o.limit);
      part.exact = report::Exact{gr.value, df.value, gr.value + df.value == g.n()};
      t_exact += ms_since(t2);
    }
    if (violated || !cert.checks.rdf_valid) code = kExitViolation;
    for (int i = 0; i < g.n(); ++i) whole.values[piece.sub.to_host[i]] = cert.witness.values[i];
    part.certificate = report::from(cert);
    if (!o.json) {
      print_certificate(cert);
      if (part.exact)
        fmt::print("  exact gamma_R = {}, differential = {}, gallai {}\n", part.exact->gamma_r,
                   part.exact->differential, paint(part.exact->gallai ? "ok" : "FAILS", part.exact->gallai));
    }
    rep.parts.push_back(std::move(part));
    ++idx;
  }
  rep.timing_ms["bound"] = t_bound;
  if (with_oracle) rep.timing_ms["exact"] = t_exact;
  if (o.emit_witness && code != kExitHypothesis) {
    if (o.json) spdlog::info("witness: {}", format_function(whole));
    else fmt::print("witness {}\n", format_function(whole));
  }
  return code;
}

int to_int(const std::string& s) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument(s);
  return v;
}

FamilySpec parse_family(const Options& o) {
  const auto& p = o.params;
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw Error(Errc::SpecInvalid, fmt::format("{} takes {} parameters, got {}", o.family, count, p.size()));
  };
  try {
    if (o.family == "cycle") {
      need(1);
      return {family::Cycle{to_int(p[0])}, o.seed};
    }
    if (o.family == "tailed") {
      need(2);
      return {family::TailedCycle{to_int(p[0]), to_int(p[1])}, o.seed};
    }
    if (o.family == "f02") {
      need(3);
      return {family::F02{to_int(p[0]), to_int(p[1]), to_int(p[2])}, o.seed};
    }
    if (o.family == "f22") {
      need(2);
      return {family::F22{to_int(p[0]), to_int(p[1])}, o.seed};
    }
    if (o.family == "f3") {
      need(6);
      return {family::F3{{to_int(p[0]), to_int(p[1]), to_int(p[2])}, {to_int(p[3]), to_int(p[4])}, to_int(p[5])},
              o.seed};
    }
    if (o.family == "brs") {
      family::Brs b;
      for (const auto& tok : p) {
        auto plus = tok.find('+');
        if (plus == std::string::npos) b.cycles.push_back(to_int(tok));
        else b.tails.emplace_back(to_int(tok.substr(0, plus)), to_int(tok.substr(plus + 1)));
      }
      return {b, o.seed};
    }
    if (o.family == "random") {
      need(3);
      return {family::RandomMinDeg2{to_int(p[0]), std::stod(p[1]), to_int(p[2])}, o.seed};
    }
  } catch (const std::logic_error&) {
    throw Error(Errc::SpecInvalid, "bad numeric parameter for " + o.family);
  }
  throw Error(Errc::SpecInvalid, "unknown family " + o.family);
}

int cmd_gen(const Options& o) {
  Graph g = generate(parse_family(o));
  write_edge_list(std::cout, g);
  return kExitOk;
}

int cmd_batch(const Options& o, report::RunReport& rep) {
  rep.k = o.k;
  auto t0 = Clock::now();
  auto suite = family_suite(o.k, o.cap, o.seed);
  rep.timing_ms["generate"] = ms_since(t0);
  report::Batch b;
  b.k = o.k;
  b.cap = o.cap;
  b.seed = o.seed;
  b.generated = static_cast<int>(suite.size());
  auto t1 = Clock::now();
  for (const auto& e : suite) {
    if (!check_hypotheses(e.graph, o.k).passes) continue;
    ++b.checked;
    report::BatchEntry be;
    be.name = describe(e.spec);
    be.n = e.graph.n();
    EngineOptions eo;
    eo.oracle_limit = o.limit;
    BoundCertificate cert = construct_bound_triple(e.graph, o.k, eo);
    be.route = route_name(cert.route);
    be.witness_weight = cert.witness_weight;
    bool oracle = e.graph.n() <= o.limit;
    try {
      certify_bound(e.graph, o.k, cert, oracle, o.limit);
    } catch (const Error& err) {
      if (err.code() != Errc::BoundViolated) throw;
      spdlog::error("{}: {}", be.name, err.what());
    }
    if (oracle) be.gamma_r = gamma_r_exact(e.graph, o.limit).value;
    be.ok = cert.checks.rdf_valid && cert.checks.bound_ok && cert.checks.gallai_ok.value_or(true) &&
            report::from(cert).steps_ok;
    ++b.routes[be.route];
    if (!be.ok) b.failures.push_back(be);
  }
  rep.timing_ms["certify"] = ms_since(t1);
  int code = b.failures.empty() ? kExitOk : kExitViolation;
  if (!o.json) {
    fmt::print("family suite k={} cap={} seed={}: {} graphs, {} pass the hypotheses\n", o.k, o.cap, o.seed,
               b.generated, b.checked);
    for (auto& [route, count] : b.routes) fmt::print("  {:<18} {}\n", route, count);
    for (auto& f : b.failures) fmt::print("  {} {} (n={}, weight {})\n", paint("FAIL", false), f.name, f.n, f.witness_weight);
    fmt::print("{}\n", paint(code == kExitOk ? "all certificates hold" : "violations found", code == kExitOk));
  }
  rep.batch = std::move(b);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  auto log = spdlog::stderr_color_mt("rdom");
  spdlog::set_default_logger(log);
  spdlog::set_pattern("%^%l%$: %v");
  if (std::getenv("NO_COLOR")) spdlog::set_pattern("%l: %v");

  Options o;
  CLI::App app{"Roman domination: hypothesis checks, exact values and bound certificates"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "print the run report as JSON on stdout");
  app.fallthrough();

  auto* analyze = app.add_subcommand("analyze", "check the hypotheses and decompose");
  analyze->add_option("--k", o.k, "forbidden-cycle parameter")->check(CLI::NonNegativeNumber);
  analyze->add_option("file", o.file, "edge-list file")->required();

  auto* exact = app.add_subcommand("exact", "exact gamma_R and differential");
  exact->add_option("--limit", o.limit, "largest n handed to the exact solver")->check(CLI::PositiveNumber);
  exact->add_option("file", o.file, "edge-list file")->required();

  auto* bound = app.add_subcommand("bound", "build and certify a witness for the bound");
  bound->add_option("--k", o.k, "forbidden-cycle parameter")->required()->check(CLI::NonNegativeNumber);
  bound->add_flag("--emit-witness", o.emit_witness, "print the witness labels");
  bound->add_option("--limit", o.limit, "largest n for the exact fallback");
  bound->add_option("file", o.file, "edge-list file")->required();

  auto* verify = app.add_subcommand("verify", "certify the bound and, with --oracle, compare to exact values");
  verify->add_option("--k", o.k, "forbidden-cycle parameter")->required()->check(CLI::NonNegativeNumber);
  verify->add_flag("--oracle", o.oracle, "run the exact solvers as well");
  verify->add_option("--limit", o.limit, "largest n handed to the exact solver");
  verify->add_option("file", o.file, "edge-list file")->required();

  auto* gen = app.add_subcommand("gen", "write a family graph as an edge list");
  gen->add_option("family", o.family, "cycle|tailed|f02|f22|f3|brs|random")->required();
  gen->add_option("params", o.params, "family parameters; brs takes M+L for tailed cycles and M for cycles");
  gen->add_option("--seed", o.seed, "seed for random graphs");

  auto* batch = app.add_subcommand("batch", "certify every hypothesis-passing graph of the family suite");
  batch->add_option("--k", o.k, "forbidden-cycle parameter")->required()->check(CLI::NonNegativeNumber);
  batch->add_option("--cap", o.cap, "largest order in the suite")->check(CLI::PositiveNumber);
  batch->add_option("--seed", o.seed, "suite seed");
  batch->add_option("--limit", o.limit, "largest n compared with the exact solver");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  report::RunReport rep;
  rep.command = app.get_subcommands().front()->get_name();
  auto t0 = Clock::now();
  int code;
  try {
    if (*analyze) code = cmd_analyze(o, rep);
    else if (*exact) code = cmd_exact(o, rep);
    else if (*bound) code = cmd_certify(o, rep, false);
    else if (*verify) code = cmd_certify(o, rep, o.oracle);
    else if (*gen) return cmd_gen(o);
    else code = cmd_batch(o, rep);
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  }
  rep.timing_ms["total"] = ms_since(t0);
  rep.exit_code = code;
  if (o.json) std::cout << report::to_json(rep) << '\n';
  return code;
}
