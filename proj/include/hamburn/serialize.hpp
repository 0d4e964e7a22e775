#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "adversary.hpp"
#include "experiments.hpp"
#include "hamming.hpp"
#include "rational.hpp"

namespace hamburn {

using nlohmann::json;

// Output contract: keys sorted (nlohmann objects are ordered maps), rationals
// as exact "p/q" strings, vertices as 1-based integer arrays. Downstream
// scripts diff this byte-for-byte.

inline json vertex_to_json(const Vertex& v) { return json(v.sym); }

inline json vertex0_to_json(const Vertex0& v) {
  std::vector<int> one_based = v;
  for (int& s : one_based) ++s;
  return json(one_based);
}

inline json sequence_to_json(const BurnSequence& seq) {
  json arr = json::array();
  for (const Vertex& v : seq.v) arr.push_back(vertex_to_json(v));
  return arr;
}

inline Vertex vertex_from_json(const json& j, int n, int q) {
  if (!j.is_array()) throw std::invalid_argument("vertex: expected a JSON array of integers");
  Vertex v{std::vector<int>(), q};
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("vertex: symbols must be integers");
    v.sym.push_back(e.get<int>());
  }
  if (v.n() != n)
    throw std::invalid_argument("vertex: expected length " + std::to_string(n) + ", got " +
                                std::to_string(v.n()));
  validate_vertex(v);
  return v;
}

inline std::vector<Vertex> vertices_from_json(const json& j, int n, int q) {
  if (!j.is_array()) throw std::invalid_argument("vertices: expected a JSON array");
  std::vector<Vertex> out;
  for (const auto& e : j) out.push_back(vertex_from_json(e, n, q));
  return out;
}

inline json rationals_to_json(const std::vector<Rational>& rs) {
  json arr = json::array();
  for (const Rational& r : rs) arr.push_back(to_fraction_string(r));
  return arr;
}

inline json evader_certificate_to_json(const EvaderCertificate& cert, int n, int q) {
  json j;
  j["distances"] = cert.distances;
  j["floor_case"] = json{{"k", cert.k}, {"r", cert.r}};
  j["inner_abs"] = rationals_to_json(cert.core.inner_abs);
  j["m"] = cert.m;
  j["n"] = n;
  j["q"] = q;
  j["required"] = cert.required;
  json lambdas = json::array();
  for (const TraceRecord& t : cert.core.trace) lambdas.push_back(to_fraction_string(t.lambda));
  j["trace"] = json{{"advances", cert.core.trace.size()}, {"lambdas", lambdas}};
  j["w"] = vertex_to_json(cert.w);
  return j;
}

inline json open_problem_report_to_json(const OpenProblemReport& rep) {
  json j;
  j["budget"] = rep.budget;
  json ces = json::array();
  for (const auto& inst : rep.counterexamples) {
    json tuple = json::array();
    for (const Vertex0& u : inst) tuple.push_back(vertex0_to_json(u));
    ces.push_back(tuple);
  }
  j["counterexamples"] = ces;
  j["instances_checked"] = rep.instances_checked;
  j["k"] = rep.k;
  j["mode"] = to_string(rep.mode);
  j["n"] = rep.n;
  j["seed"] = rep.seed;
  j["verification_failures"] = rep.verification_failures;
  json stats = json::array();
  for (const auto& [count, freq] : rep.witness_stats) stats.push_back(json::array({count, freq}));
  j["witness_stats"] = stats;
  j["witnesses_verified"] = rep.witnesses_verified;
  return j;
}

inline json witness_report_to_json(const WitnessReport& rep) {
  json j;
  j["failures"] = rep.failures;
  j["m"] = rep.m;
  j["n"] = rep.n;
  j["passes"] = rep.passes;
  j["q"] = rep.q;
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  j["worst_slack"] = rep.worst_slack;
  return j;
}

inline std::string dump_stable(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hamburn
