#include "report.hpp"

#include <cstdio>

#include "json.hpp"
#include "rdom/error.hpp"

namespace rdom::report {

using nlohmann::json;

namespace {

template <class T>
void put_opt(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
  else j[key] = nullptr;
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(json& j, const Hypothesis& h) {
  j = {{"k", h.k}, {"n", h.n}, {"n_ok", h.n_ok}, {"delta_ok", h.delta_ok}, {"forbidden_found", h.forbidden_found},
       {"passes", h.passes}};
}
void from_json(const json& j, Hypothesis& h) {
  j.at("k").get_to(h.k);
  j.at("n").get_to(h.n);
  j.at("n_ok").get_to(h.n_ok);
  j.at("delta_ok").get_to(h.delta_ok);
  j.at("forbidden_found").get_to(h.forbidden_found);
  j.at("passes").get_to(h.passes);
}

void to_json(json& j, const Exact& e) {
  j = {{"gamma_r", e.gamma_r}, {"differential", e.differential}, {"gallai", e.gallai}};
}
void from_json(const json& j, Exact& e) {
  j.at("gamma_r").get_to(e.gamma_r);
  j.at("differential").get_to(e.differential);
  j.at("gallai").get_to(e.gallai);
}

void to_json(json& j, const Fraction& f) { j = {{"num", f.num}, {"den", f.den}}; }
void from_json(const json& j, Fraction& f) {
  j.at("num").get_to(f.num);
  j.at("den").get_to(f.den);
}

void to_json(json& j, const Certificate& c) {
  j = {{"k", c.k},
       {"n", c.n},
       {"route", c.route},
       {"bound", c.bound},
       {"witness", c.witness},
       {"witness_weight", c.witness_weight},
       {"differential_lower", c.differential_lower},
       {"tight", c.tight},
       {"steps", c.steps},
       {"steps_ok", c.steps_ok},
       {"fallback_reason", c.fallback_reason}};
  json checks = {{"rdf_valid", c.rdf_valid}, {"bound_ok", c.bound_ok}};
  put_opt(checks, "gallai_ok", c.gallai_ok);
  j["checks"] = checks;
}
void from_json(const json& j, Certificate& c) {
  j.at("k").get_to(c.k);
  j.at("n").get_to(c.n);
  j.at("route").get_to(c.route);
  j.at("bound").get_to(c.bound);
  j.at("witness").get_to(c.witness);
  j.at("witness_weight").get_to(c.witness_weight);
  j.at("differential_lower").get_to(c.differential_lower);
  j.at("tight").get_to(c.tight);
  j.at("steps").get_to(c.steps);
  j.at("steps_ok").get_to(c.steps_ok);
  j.at("fallback_reason").get_to(c.fallback_reason);
  const json& checks = j.at("checks");
  checks.at("rdf_valid").get_to(c.rdf_valid);
  checks.at("bound_ok").get_to(c.bound_ok);
  c.gallai_ok = get_opt<bool>(checks, "gallai_ok");
}

void to_json(json& j, const DecompPart& p) {
  j = {{"vertices", p.vertices}, {"tag", p.tag}, {"r", p.r}, {"s", p.s}};
}
void from_json(const json& j, DecompPart& p) {
  j.at("vertices").get_to(p.vertices);
  j.at("tag").get_to(p.tag);
  j.at("r").get_to(p.r);
  j.at("s").get_to(p.s);
}

void to_json(json& j, const Decomp& d) {
  j = {{"strategy", d.strategy}, {"g1", d.g1}, {"components", d.parts}, {"valid", d.valid}};
}
void from_json(const json& j, Decomp& d) {
  j.at("strategy").get_to(d.strategy);
  j.at("g1").get_to(d.g1);
  j.at("components").get_to(d.parts);
  j.at("valid").get_to(d.valid);
}

void to_json(json& j, const Part& p) {
  j = {{"vertices", p.vertices}};
  put_opt(j, "hypothesis", p.hypothesis);
  put_opt(j, "exact", p.exact);
  put_opt(j, "certificate", p.certificate);
  put_opt(j, "decomposition", p.decomposition);
}
void from_json(const json& j, Part& p) {
  j.at("vertices").get_to(p.vertices);
  p.hypothesis = get_opt<Hypothesis>(j, "hypothesis");
  p.exact = get_opt<Exact>(j, "exact");
  p.certificate = get_opt<Certificate>(j, "certificate");
  p.decomposition = get_opt<Decomp>(j, "decomposition");
}

void to_json(json& j, const BatchEntry& e) {
  j = {{"name", e.name}, {"n", e.n}, {"route", e.route}, {"witness_weight", e.witness_weight}, {"ok", e.ok}};
  put_opt(j, "gamma_r", e.gamma_r);
}
void from_json(const json& j, BatchEntry& e) {
  j.at("name").get_to(e.name);
  j.at("n").get_to(e.n);
  j.at("route").get_to(e.route);
  j.at("witness_weight").get_to(e.witness_weight);
  j.at("ok").get_to(e.ok);
  e.gamma_r = get_opt<int>(j, "gamma_r");
}

void to_json(json& j, const Batch& b) {
  j = {{"k", b.k},           {"cap", b.cap},       {"seed", b.seed},         {"generated", b.generated},
       {"checked", b.checked}, {"routes", b.routes}, {"failures", b.failures}};
}
void from_json(const json& j, Batch& b) {
  j.at("k").get_to(b.k);
  j.at("cap").get_to(b.cap);
  j.at("seed").get_to(b.seed);
  j.at("generated").get_to(b.generated);
  j.at("checked").get_to(b.checked);
  j.at("routes").get_to(b.routes);
  j.at("failures").get_to(b.failures);
}

Hypothesis from(const HypothesisReport& h) {
  Hypothesis out;
  out.k = h.k;
  out.n = h.n;
  out.n_ok = h.n_ok;
  out.delta_ok = h.delta_ok;
  for (const auto& c : h.forbidden_found) out.forbidden_found.push_back(c.vertices);
  out.passes = h.passes;
  return out;
}

Certificate from(const BoundCertificate& c) {
  Certificate out;
  out.k = c.k;
  out.n = c.n;
  out.route = route_name(c.route);
  out.bound = {c.bound_num, c.bound_den};
  out.witness.assign(c.witness.values.begin(), c.witness.values.end());
  out.witness_weight = c.witness_weight;
  out.differential_lower = {c.diff_num, c.diff_den};
  out.rdf_valid = c.checks.rdf_valid;
  out.bound_ok = c.checks.bound_ok;
  out.gallai_ok = c.checks.gallai_ok;
  out.tight = c.tight();
  out.steps = static_cast<int>(c.trace.size());
  for (const auto& s : c.trace)
    if (!s.weight_ok() || !s.frontier_ok) out.steps_ok = false;
  out.fallback_reason = c.fallback_reason;
  return out;
}

Decomp from(const Decomposition& d, bool valid) {
  Decomp out;
  out.strategy = d.strategy;
  out.g1 = d.g1_vertices;
  for (const auto& c : d.g2_components) out.parts.push_back({c.vertices, tag_name(c.cls.tag), c.cls.r, c.cls.s});
  out.valid = valid;
  return out;
}

std::string to_json(const RunReport& r, int indent) {
  json j = {{"schema", r.schema},       {"command", r.command}, {"input_digest", r.input_digest},
            {"n", r.n},                 {"parts", r.parts},     {"timing_ms", r.timing_ms},
            {"warnings", r.warnings},   {"exit_code", r.exit_code}};
  put_opt(j, "k", r.k);
  put_opt(j, "batch", r.batch);
  return j.dump(indent);
}

RunReport parse_json(const std::string& text) {
  try {
    json j = json::parse(text);
    RunReport r;
    j.at("schema").get_to(r.schema);
    if (r.schema != kSchema) throw Error(Errc::ParseError, "unsupported report schema " + std::to_string(r.schema));
    j.at("command").get_to(r.command);
    j.at("input_digest").get_to(r.input_digest);
    j.at("n").get_to(r.n);
    j.at("parts").get_to(r.parts);
    j.at("timing_ms").get_to(r.timing_ms);
    j.at("warnings").get_to(r.warnings);
    j.at("exit_code").get_to(r.exit_code);
    r.k = get_opt<int>(j, "k");
    r.batch = get_opt<Batch>(j, "batch");
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rdom::report
