#include "shadowlab/verification.hpp"

#include "shadowlab/clique_degree.hpp"
#include "shadowlab/constructions.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/transform.hpp"

namespace shadowlab {

int clique_family_order(const Parameters& params) { return static_cast<int>(ceil(params.t)) + 1; }

WitnessAudit audit_witness(const UniformHypergraph& h, const Parameters& params) {
  WitnessAudit audit;
  audit.condition = check_condition(h, params).satisfied;
  audit.excess = excess_degree_sum(h, params.t);
  audit.excess_cap = excess_bound(params.t, params.ell);
  audit.excess_ok = audit.excess <= audit.excess_cap;

  const int order = clique_family_order(params);
  if (order <= h.n()) audit.cliques = all_cliques(h, order).sets();
  for (std::size_t i = 0; i < audit.cliques.size(); ++i) {
    for (std::size_t j = i + 1; j < audit.cliques.size(); ++j) {
      const VertexSubset a1 = audit.cliques[i];
      const VertexSubset a2 = audit.cliques[j];
      SubsetFamily crossing = crossing_edges(h, a1, a2);
      if (!crossing.empty()) audit.crossings.push_back({a1, a2, std::move(crossing)});
      if (a1.intersects(a2)) audit.intersecting_pairs.emplace_back(a1, a2);
    }
  }
  audit.isolated_clique = has_isolated_clique(h, order);
  return audit;
}

Rational theorem_range_threshold(const Parameters& params) {
  return excess_bound(params.t, params.ell) + 2 * params.t;
}

Theorem1Report verify_theorem1(const Parameters& params, const SearchOptions& options) {
  Theorem1Report report;
  report.params = params;
  report.range_threshold = theorem_range_threshold(params);
  report.in_range = Rational(params.n) > report.range_threshold;
  report.search = enumerate_extremal(params, options);
  report.all_isolated = report.excess_ok = report.no_crossings = report.pairs_ok = report.search.feasible;
  for (const UniformHypergraph& w : report.search.witnesses) {
    WitnessAudit audit = audit_witness(w, params);
    report.some_isolated = report.some_isolated || audit.isolated_clique;
    report.all_isolated = report.all_isolated && audit.isolated_clique;
    report.excess_ok = report.excess_ok && audit.excess_ok;
    report.no_crossings = report.no_crossings && audit.crossings.empty();
    report.pairs_ok = report.pairs_ok && audit.intersecting_pairs.size() <= 1;
    report.audits.push_back(std::move(audit));
  }
  return report;
}

std::vector<CensusRow> census(const Rational& t, int k, int ell, int n_first, int n_last,
                              const SearchOptions& options) {
  if (n_first < 1 || n_last < n_first) throw Error(ErrorKind::InvalidInput, "empty or invalid n range");
  std::vector<CensusRow> rows;
  for (int n = n_first; n <= n_last; ++n) {
    const Parameters params{n, t, k, ell};
    const Theorem1Report report = verify_theorem1(params, options);
    CensusRow row;
    row.params = params;
    row.in_range = report.in_range;
    row.feasible = report.search.feasible;
    row.optimum = report.search.optimum;
    row.witnesses = report.search.witnesses.size();
    row.some_isolated = report.some_isolated;
    row.all_isolated = report.all_isolated;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace shadowlab
