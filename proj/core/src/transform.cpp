#include "shadowlab/transform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "shadowlab/clique_degree.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/kk_order.hpp"
#include "shadowlab/numeric.hpp"
#include "shadowlab/shifting.hpp"

namespace shadowlab {

VertexSubset boundary_set(const UniformHypergraph& g, VertexSubset a1, VertexSubset a2) {
  g.check_within(a1);
  g.check_within(a2);
  return neighborhood(g, a1 | a2);
}

SubsetFamily crossing_edges(const UniformHypergraph& g, VertexSubset a1, VertexSubset a2) {
  g.check_within(a1);
  g.check_within(a2);
  const Mask both = (a1 | a2).mask();
  const Mask only1 = (a1 - a2).mask();
  const Mask only2 = (a2 - a1).mask();
  std::vector<Mask> out;
  for (Mask e : g.edges().masks()) {
    if ((e & ~both) == 0 && (e & only1) && (e & only2)) out.push_back(e);
  }
  return SubsetFamily::from_masks(g.r(), std::move(out));
}

std::pair<UniformHypergraph, TransformTrace> build_gprime(const UniformHypergraph& g, VertexSubset a1,
                                                          VertexSubset a2, const Parameters& params) {
  const int t = params.t_int();
  const int block = t + 1;
  if (g.r() != params.ell) throw Error(ErrorKind::Precondition, "graph uniformity differs from ell");
  g.check_within(a1);
  g.check_within(a2);
  if (a1.size() != block || a2.size() != block) {
    throw Error(ErrorKind::Precondition, "A1 and A2 must both have t+1 = " + std::to_string(block) + " vertices");
  }
  if (!is_clique(g, a1)) throw Error(ErrorKind::Precondition, "A1 " + a1.to_string() + " is not a clique");
  if (!is_clique(g, a2)) throw Error(ErrorKind::Precondition, "A2 " + a2.to_string() + " is not a clique");
  const int n = g.n();
  if (n + block > kMaxVertices) throw Error(ErrorKind::Range, "G plus the auxiliary block exceeds the vertex limit");

  TransformTrace trace;
  trace.input = g;
  trace.a1 = a1;
  trace.a2 = a2;
  trace.a = (a1 & a2).size();
  trace.boundary = boundary_set(g, a1, a2);
  trace.c = VertexSubset::interval(n + 1, n + block);
  trace.labeling = a1.vertices();
  for (Vertex v : trace.c) trace.labeling.push_back(v);

  const Mask both = (a1 | a2).mask();
  std::vector<Mask> edges;
  std::map<Mask, std::uint64_t> outside_parts;  // Y -> |L_G^Y(A1 ∪ A2)|
  for (Mask e : g.edges().masks()) {
    if ((e & ~both) == 0) {
      if ((e & ~a1.mask()) == 0 || (e & ~a2.mask()) == 0) edges.push_back(e);
    } else if ((e & both) == 0) {
      edges.push_back(e);
    } else {
      ++outside_parts[e & ~both];
    }
  }
  for (const auto& [y, count] : outside_parts) {
    const int size = g.r() - std::popcount(y);
    if (Integer(count) > binomial(2 * block, size)) {
      throw std::logic_error("link of " + VertexSubset::from_mask(y).to_string() + " does not fit in A1 ∪ C");
    }
    const SubsetFamily segment = initial_segment(count, size);
    for (Mask positions : segment.masks()) {
      Mask e = y;
      for (Vertex p : VertexSubset::from_mask(positions)) e |= vertex_bit(trace.labeling[p - 1]);
      edges.push_back(e);
    }
  }
  trace.gprime = UniformHypergraph::from_masks(n + block, g.r(), std::move(edges));
  if (trace.gprime.edge_count() > g.edge_count()) throw std::logic_error("G' gained edges");
  if (trace.gprime.edge_count() < g.edge_count()) {
    trace.findings.push_back("G' dropped " + std::to_string(g.edge_count() - trace.gprime.edge_count()) +
                             " crossing edge(s)");
  }
  return {trace.gprime, std::move(trace)};
}

UniformHypergraph eliminate_c(const UniformHypergraph& gprime, TransformTrace& trace) {
  const int n = trace.input.n();
  const int block = trace.a1.size();
  if (gprime.n() != n + block || trace.c != VertexSubset::interval(n + 1, n + block) ||
      trace.labeling.size() != static_cast<std::size_t>(2 * block)) {
    throw Error(ErrorKind::Precondition, "G' and the trace disagree on the auxiliary block");
  }
  for (int p = 0; p < block; ++p) {
    if (!trace.a1.contains(trace.labeling[p]) || trace.labeling[block + p] != n + 1 + p) {
      throw Error(ErrorKind::Precondition, "trace labeling is not A1 followed by C");
    }
  }
  const VertexSubset a2_only = trace.a2 - trace.a1;
  const VertexSubset kept = VertexSubset::interval(1, n) - a2_only;
  if (kept.size() != n - block + trace.a) {
    throw Error(ErrorKind::Precondition, "|V \\ (A2 \\ A1)| differs from n-(t+1)+a");
  }

  trace.elimination_order = kept.vertices();
  trace.shift_steps.clear();
  UniformHypergraph current = gprime;
  for (Vertex i : trace.elimination_order) {
    for (Vertex j = n + block; j >= n + 1; --j) {
      std::size_t moved = 0;
      current = shift(current, i, j, moved);
      trace.shift_steps.push_back({i, j, moved});
    }
  }
  if (current.edge_count() != gprime.edge_count()) throw std::logic_error("shift cascade changed the edge count");
  trace.gfinal = current;
  return current;
}

std::pair<UniformHypergraph, TransformTrace> g_transform(const UniformHypergraph& g, VertexSubset a1,
                                                         VertexSubset a2, const Parameters& params) {
  auto [gprime, trace] = build_gprime(g, a1, a2, params);
  const UniformHypergraph gfinal = eliminate_c(gprime, trace);
  const int n = g.n();
  trace.gout = with_vertex_count(restrict_to(gfinal, VertexSubset::interval(1, n)), n);
  if (trace.gout.edge_count() < gfinal.edge_count()) {
    trace.findings.push_back("restriction to V dropped " +
                             std::to_string(gfinal.edge_count() - trace.gout.edge_count()) +
                             " edge(s) still touching C");
  }
  const SubsetFamily cliques = all_cliques(gfinal, params.k);
  for (Mask d : cliques.masks()) {
    if (d & trace.c.mask()) trace.cliques_meeting_c.push_back(VertexSubset::from_mask(d));
  }
  if (!trace.cliques_meeting_c.empty()) {
    trace.findings.push_back(std::to_string(trace.cliques_meeting_c.size()) +
                             " k-clique(s) of the shifted graph meet C");
  }
  trace.properties = verify_properties(trace, params);
  UniformHypergraph out = trace.gout;
  return {std::move(out), std::move(trace)};
}

VertexSubset shifted_clique(const TransformTrace& trace, VertexSubset a3) {
  const VertexSubset both = trace.a1 | trace.a2;
  const int m = (a3 & both).size();
  VertexSubset out = a3 - both;
  for (int p = 0; p < m; ++p) out = out.with(trace.labeling[p]);
  return out;
}

PropertyReport verify_properties(const TransformTrace& trace, const Parameters& params) {
  PropertyReport report;
  const UniformHypergraph& g = trace.input;
  const UniformHypergraph& out = trace.gout;

  report.vertex_set_preserved = out.n() == g.n();
  if (!report.vertex_set_preserved) report.diagnostics.push_back("(1) vertex count changed");

  report.edge_non_increase = out.edge_count() <= g.edge_count();
  if (!report.edge_non_increase) report.diagnostics.push_back("(2) edge count increased");

  if (!report.vertex_set_preserved) {
    report.diagnostics.push_back("(3)-(5) skipped: output lives on a different vertex set");
    return report;
  }

  report.edge_confinement = true;
  for (VertexSubset a : {trace.a1, trace.a2}) {
    if (!is_clique(out, a)) {
      report.edge_confinement = false;
      report.diagnostics.push_back("(3) " + a.to_string() + " is no longer a clique");
    }
  }
  const VertexSubset a2_only = trace.a2 - trace.a1;
  for (VertexSubset e : out.edges().sets()) {
    if (e.intersects(a2_only) && !e.is_subset_of(trace.a2)) {
      report.edge_confinement = false;
      report.diagnostics.push_back("(3) edge " + e.to_string() + " leaves A2");
    }
  }

  report.clique_shifting = true;
  if (params.t_is_integer()) {
    for (VertexSubset a3 : all_cliques(g, params.t_int() + 1).sets()) {
      const VertexSubset a4 = shifted_clique(trace, a3);
      if (!is_clique(out, a4)) {
        report.clique_shifting = false;
        report.diagnostics.push_back("(4) " + a3.to_string() + " shifts to " + a4.to_string() +
                                     ", which is not a clique");
      }
    }
  }

  const ConditionCheck check = check_condition(out, params);
  report.clique_condition = check.satisfied;
  report.deficient_vertices = check.deficient;
  for (Vertex v : check.deficient) {
    report.diagnostics.push_back("(5) vertex " + std::to_string(v) + " lies in " +
                                 std::to_string(check.profile.counts[v - 1]) + " copies, below " +
                                 check.profile.threshold.str());
  }
  return report;
}

std::vector<ShiftClosureViolation> shift_closure_violations(const TransformTrace& trace, int k) {
  std::vector<ShiftClosureViolation> out;
  const UniformHypergraph& h = trace.gfinal;
  const VertexSubset v_side = VertexSubset::interval(1, trace.input.n());
  const VertexSubset a2_only = trace.a2 - trace.a1;
  for (VertexSubset d : all_cliques(h, k).sets()) {
    if (!d.intersects(trace.c)) continue;
    for (Vertex i : v_side - (d | a2_only)) {
      for (Vertex j : d & trace.c) {
        if (!is_clique(h, d.without(j).with(i))) out.push_back({d, i, j});
      }
    }
  }
  return out;
}

}  // namespace shadowlab
