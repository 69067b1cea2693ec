#pragma once

#include <utility>
#include <vector>

#include "shadowlab/hypergraph.hpp"
#include "shadowlab/numeric.hpp"
#include "shadowlab/parameters.hpp"
#include "shadowlab/search.hpp"

namespace shadowlab {

/// ceil(t) + 1: the order of the cliques the structural statements talk about.
int clique_family_order(const Parameters& params);

struct CrossingPair {
  VertexSubset a1;
  VertexSubset a2;
  SubsetFamily edges;
};

/// Structural checks on one graph.
struct WitnessAudit {
  bool condition = false;
  Rational excess;
  Rational excess_cap;
  bool excess_ok = false;
  /// All cliques of order clique_family_order.
  std::vector<VertexSubset> cliques;
  /// Pairs of those cliques with crossing edges (should be none).
  std::vector<CrossingPair> crossings;
  /// Distinct pairs of those cliques that intersect (at most one expected).
  std::vector<std::pair<VertexSubset, VertexSubset>> intersecting_pairs;
  bool isolated_clique = false;
};

WitnessAudit audit_witness(const UniformHypergraph& h, const Parameters& params);

/// (t+1)^2/4 * C(t-1, ell-2) + 2t; the structural theorem covers n above it.
Rational theorem_range_threshold(const Parameters& params);

struct Theorem1Report {
  Parameters params;
  Rational range_threshold;
  bool in_range = false;
  SearchResult search;
  std::vector<WitnessAudit> audits;
  bool some_isolated = false;
  bool all_isolated = false;
  bool excess_ok = false;
  bool no_crossings = false;
  bool pairs_ok = false;
};

/// Enumerates the extremal graphs and audits each one.
Theorem1Report verify_theorem1(const Parameters& params, const SearchOptions& options = {});

struct CensusRow {
  Parameters params;
  bool in_range = false;
  bool feasible = false;
  std::uint64_t optimum = 0;
  std::size_t witnesses = 0;
  bool some_isolated = false;
  bool all_isolated = false;
};

/// verify_theorem1 for each n in [n_first, n_last].
std::vector<CensusRow> census(const Rational& t, int k, int ell, int n_first, int n_last,
                              const SearchOptions& options = {});

}  // namespace shadowlab
