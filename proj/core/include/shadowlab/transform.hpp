#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadowlab/hypergraph.hpp"
#include "shadowlab/parameters.hpp"

namespace shadowlab {

// The merge transformation takes two (t+1)-cliques A1, A2 of an ell-graph G
// and produces a graph on the same vertices in which A2 \ A1 only touches A2.
//
//  1. Build G' on V ∪ C, where C = {n+1, ..., n+t+1} is a block of fresh
//     vertices. Inside A1 ∪ A2 only the two cliques survive (crossing edges
//     go). Edges avoiding A1 ∪ A2 are kept. Every edge that meets both
//     A1 ∪ A2 and its complement is grouped by its outside part Y (a nonempty
//     subset of the boundary B with |Y| <= ell-1). If Y had m_Y such edges,
//     it gets Y ∪ S for the m_Y antilex-smallest (ell-|Y|)-sets S of the
//     labeled block A1 ∪ C = {v_1, ..., v_{2(t+1)}}. Each such edge has a
//     single outside part, so the per-Y assignments never collide.
//  2. Push C back into V with the shift cascade: for each i of V \ (A2 \ A1)
//     in ascending order, apply S_{i,n+t+1} first and S_{i,n+1} last.
//  3. Keep the part induced on V.

struct ShiftStep {
  Vertex i = 0;
  Vertex j = 0;
  std::size_t moved = 0;  // edges rewritten by this step
};

struct PropertyReport {
  bool vertex_set_preserved = false;  // (1)
  bool edge_non_increase = false;     // (2)
  bool edge_confinement = false;      // (3)
  bool clique_shifting = false;       // (4)
  bool clique_condition = false;      // (5)
  std::vector<std::string> diagnostics;
  /// Vertices failing the clique-degree condition in the output.
  std::vector<Vertex> deficient_vertices;

  bool all() const {
    return vertex_set_preserved && edge_non_increase && edge_confinement && clique_shifting && clique_condition;
  }
};

struct TransformTrace {
  UniformHypergraph input{1, 1};
  VertexSubset a1;
  VertexSubset a2;
  int a = 0;               // |A1 ∩ A2|
  VertexSubset boundary;   // B
  VertexSubset c;          // auxiliary block {n+1, ..., n+t+1}
  /// labeling[p-1] is the vertex playing v_p: A1 ascending, then C ascending.
  std::vector<Vertex> labeling;
  /// The i's of the cascade: V \ (A2 \ A1), ascending.
  std::vector<Vertex> elimination_order;
  UniformHypergraph gprime{1, 1};
  UniformHypergraph gfinal{1, 1};
  UniformHypergraph gout{1, 1};
  std::vector<ShiftStep> shift_steps;
  /// k-cliques of gfinal that meet C; nonempty means some clique-degree was
  /// carried by auxiliary vertices and may be lost in gout.
  std::vector<VertexSubset> cliques_meeting_c;
  /// Edge-count drops between stages and similar observations.
  std::vector<std::string> findings;
  std::optional<PropertyReport> properties;
};

/// Vertices outside A1 ∪ A2 with a neighbor in A1 ∪ A2.
VertexSubset boundary_set(const UniformHypergraph& g, VertexSubset a1, VertexSubset a2);

/// Edges inside A1 ∪ A2 meeting both A1 \ A2 and A2 \ A1.
SubsetFamily crossing_edges(const UniformHypergraph& g, VertexSubset a1, VertexSubset a2);

/// Step 1. Throws Error(Precondition) when t is not an integer, |A1| or |A2|
/// differ from t+1, either set is not a clique of G, or G is not ell-uniform.
std::pair<UniformHypergraph, TransformTrace> build_gprime(const UniformHypergraph& g, VertexSubset a1,
                                                          VertexSubset a2, const Parameters& params);

/// Step 2. Records the applied shifts in `trace`. Throws Error(Precondition)
/// when `gprime` or `trace` disagree with the labeling built by build_gprime.
UniformHypergraph eliminate_c(const UniformHypergraph& gprime, TransformTrace& trace);

/// The full pipeline; the returned trace carries every intermediate graph
/// and the property report.
std::pair<UniformHypergraph, TransformTrace> g_transform(const UniformHypergraph& g, VertexSubset a1,
                                                         VertexSubset a2, const Parameters& params);

/// Checks properties (1)-(5) of trace.gout against trace.input. Never throws
/// on a failed property; failures are reported.
PropertyReport verify_properties(const TransformTrace& trace, const Parameters& params);

/// (A3 \ (A1 ∪ A2)) ∪ {v_1, ..., v_m} with m = |A3 ∩ (A1 ∪ A2)|.
VertexSubset shifted_clique(const TransformTrace& trace, VertexSubset a3);

struct ShiftClosureViolation {
  VertexSubset clique;
  Vertex i = 0;
  Vertex j = 0;
};

/// For every k-clique D of trace.gfinal meeting C, every i ∈ V \ (D ∪ (A2 \ A1))
/// and j ∈ D ∩ C, D - j + i should again be a k-clique. Returns the exceptions.
std::vector<ShiftClosureViolation> shift_closure_violations(const TransformTrace& trace, int k);

}  // namespace shadowlab
