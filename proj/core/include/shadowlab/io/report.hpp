#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "shadowlab/clique_degree.hpp"
#include "shadowlab/hypergraph.hpp"
#include "shadowlab/numeric.hpp"
#include "shadowlab/parameters.hpp"
#include "shadowlab/search.hpp"
#include "shadowlab/transform.hpp"
#include "shadowlab/verification.hpp"

namespace shadowlab::io {

/// Keys keep insertion order so reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// {"num": p, "den": q}; components that do not fit 64 bits become decimal strings.
Json to_json(const Rational& x);
Json to_json(const Integer& x);
/// Rounded to 12 significant digits.
Json real_to_json(double x);
Json to_json(VertexSubset s);
Json to_json(const SubsetFamily& family);
/// {"n", "r", "edges"}
Json to_json(const UniformHypergraph& h);
Json to_json(const ConditionCheck& check);
Json to_json(const PropertyReport& report);
/// Field names a1, a2, a, b, c, labeling, shift_steps, properties, plus the stage graphs.
Json to_json(const TransformTrace& trace);
Json to_json(const SearchResult& result);
Json to_json(const WitnessAudit& audit);
Json to_json(const Theorem1Report& report);

/// Missing members are emitted as null so every report has the same params shape.
struct ReportParams {
  std::optional<int> n;
  std::optional<Rational> t;
  std::optional<int> k;
  std::optional<int> ell;

  static ReportParams from(const Parameters& p) { return {p.n, p.t, p.k, p.ell}; }
};

/// {"command", "params", "result", "provenance": {"tool_version", "seed", "elapsed_ms"}}.
/// elapsed_ms is null when not given, which keeps reports comparable byte for byte.
Json make_report(const std::string& command, const ReportParams& params, Json result,
                 std::optional<double> elapsed_ms);

}  // namespace shadowlab::io
