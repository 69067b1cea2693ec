#include "shadowlab/io/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <limits>

namespace shadowlab::io {

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Json to_json(const Rational& x) {
  Json out;
  out["num"] = to_json(Integer(boost::multiprecision::numerator(x)));
  out["den"] = to_json(Integer(boost::multiprecision::denominator(x)));
  return out;
}

Json real_to_json(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json to_json(VertexSubset s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json to_json(const SubsetFamily& family) {
  Json out = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) out.push_back(to_json(family[i]));
  return out;
}

Json to_json(const UniformHypergraph& h) {
  Json out;
  out["n"] = h.n();
  out["r"] = h.r();
  out["edge_count"] = h.edge_count();
  out["edges"] = to_json(h.edges());
  return out;
}

Json to_json(const ConditionCheck& check) {
  Json out;
  out["satisfied"] = check.satisfied;
  out["threshold"] = to_json(check.profile.threshold);
  out["counts"] = check.profile.counts;
  out["deficient"] = check.deficient;
  return out;
}

Json to_json(const PropertyReport& report) {
  Json out;
  out["vertex_set_preserved"] = report.vertex_set_preserved;
  out["edge_non_increase"] = report.edge_non_increase;
  out["edge_confinement"] = report.edge_confinement;
  out["clique_shifting"] = report.clique_shifting;
  out["clique_condition"] = report.clique_condition;
  out["all"] = report.all();
  out["deficient_vertices"] = report.deficient_vertices;
  out["diagnostics"] = report.diagnostics;
  return out;
}

Json to_json(const TransformTrace& trace) {
  Json out;
  out["input"] = to_json(trace.input);
  out["a1"] = to_json(trace.a1);
  out["a2"] = to_json(trace.a2);
  out["a"] = trace.a;
  out["b"] = to_json(trace.boundary);
  out["c"] = to_json(trace.c);
  out["labeling"] = trace.labeling;
  out["elimination_order"] = trace.elimination_order;
  out["gprime"] = to_json(trace.gprime);
  out["gfinal"] = to_json(trace.gfinal);
  out["gout"] = to_json(trace.gout);
  Json steps = Json::array();
  for (const ShiftStep& step : trace.shift_steps) {
    Json s;
    s["i"] = step.i;
    s["j"] = step.j;
    s["moved"] = step.moved;
    steps.push_back(std::move(s));
  }
  out["shift_steps"] = std::move(steps);
  Json meeting = Json::array();
  for (VertexSubset d : trace.cliques_meeting_c) meeting.push_back(to_json(d));
  out["cliques_meeting_c"] = std::move(meeting);
  out["findings"] = trace.findings;
  out["properties"] = trace.properties ? to_json(*trace.properties) : Json(nullptr);
  return out;
}

Json to_json(const SearchResult& result) {
  Json out;
  out["feasible"] = result.feasible;
  out["optimum"] = result.feasible ? Json(result.optimum) : Json(nullptr);
  out["complete"] = result.complete;
  out["enumerated"] = result.enumerated;
  out["lower_bound_used"] = to_json(result.lower_bound_used);
  out["upper_bound_used"] = result.upper_bound_used ? Json(*result.upper_bound_used) : Json(nullptr);
  out["nodes_explored"] = result.nodes_explored;
  out["witness_count"] = result.witnesses.size();
  Json witnesses = Json::array();
  for (const UniformHypergraph& w : result.witnesses) witnesses.push_back(to_json(w));
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json to_json(const WitnessAudit& audit) {
  Json out;
  out["condition"] = audit.condition;
  out["excess"] = to_json(audit.excess);
  out["excess_bound"] = to_json(audit.excess_cap);
  out["excess_ok"] = audit.excess_ok;
  Json cliques = Json::array();
  for (VertexSubset c : audit.cliques) cliques.push_back(to_json(c));
  out["cliques"] = std::move(cliques);
  Json crossings = Json::array();
  for (const CrossingPair& pair : audit.crossings) {
    Json c;
    c["a1"] = to_json(pair.a1);
    c["a2"] = to_json(pair.a2);
    c["edges"] = to_json(pair.edges);
    crossings.push_back(std::move(c));
  }
  out["crossings"] = std::move(crossings);
  Json pairs = Json::array();
  for (const auto& [a, b] : audit.intersecting_pairs) pairs.push_back(Json::array({to_json(a), to_json(b)}));
  out["intersecting_pairs"] = std::move(pairs);
  out["isolated_clique"] = audit.isolated_clique;
  return out;
}

Json to_json(const Theorem1Report& report) {
  Json out;
  out["range_threshold"] = to_json(report.range_threshold);
  out["in_range"] = report.in_range;
  out["clique_order"] = clique_family_order(report.params);
  out["some_isolated"] = report.some_isolated;
  out["all_isolated"] = report.all_isolated;
  out["excess_ok"] = report.excess_ok;
  out["no_crossings"] = report.no_crossings;
  out["pairs_ok"] = report.pairs_ok;
  out["search"] = to_json(report.search);
  Json audits = Json::array();
  for (const WitnessAudit& audit : report.audits) audits.push_back(to_json(audit));
  out["audits"] = std::move(audits);
  return out;
}

Json make_report(const std::string& command, const ReportParams& params, Json result,
                 std::optional<double> elapsed_ms) {
  Json doc;
  doc["command"] = command;
  Json p;
  p["n"] = params.n ? Json(*params.n) : Json(nullptr);
  p["t"] = params.t ? to_json(*params.t) : Json(nullptr);
  p["k"] = params.k ? Json(*params.k) : Json(nullptr);
  p["ell"] = params.ell ? Json(*params.ell) : Json(nullptr);
  doc["params"] = std::move(p);
  doc["result"] = std::move(result);
  Json provenance;
  provenance["tool_version"] = kToolVersion;
  provenance["seed"] = nullptr;
  provenance["elapsed_ms"] = elapsed_ms ? real_to_json(*elapsed_ms) : Json(nullptr);
  doc["provenance"] = std::move(provenance);
  return doc;
}

}  // namespace shadowlab::io
