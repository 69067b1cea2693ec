#pragma once

#include "shadowlab/hypergraph.hpp"
#include "shadowlab/numeric.hpp"
#include "shadowlab/parameters.hpp"

namespace shadowlab {

/// How s1 + s2 leftover vertices are re-attached when two intersecting pairs
/// of (t+1)-cliques are merged.
enum class MergeCase {
  /// s1 + s2 >= t+1: a fresh pair of K_{t+1}^ell sharing 2(t+1) - s1 - s2 vertices.
  OverlappingPair = 1,
  /// s1 + s2 < t+1: the leftovers Q join t+1-s1-s2 vertices W0 of an existing
  /// clique to form a new K_{t+1}^ell, with no other edges at Q.
  AnchoredClique = 2,
};

/// Throws Error(Precondition) unless 1 <= s1, s2 <= t+1 and the sum matches the case.
void check_merge_case(int s1, int s2, int t, MergeCase which);

/// Edges the construction adds on top of its base graph.
Integer case_added_edges(int s1, int s2, int t, int ell, MergeCase which);

/// Net edge change of the merge relative to the graph it replaces:
///   OverlappingPair: C(t+1-s1, l) + C(t+1-s2, l) - C(2(t+1)-s1-s2, l)
///   AnchoredClique:  C(t+1-s1, l) + C(t+1-s2, l) - C(t+1-s1-s2, l) - C(t+1, l)
Integer case_edge_delta(int s1, int s2, int t, int ell, MergeCase which);

/// Appends s1 + s2 new vertices (labels base.n()+1, ...) to `base` and wires
/// them per `which`. AnchoredClique needs `anchor`, a (t+1)-clique of base;
/// W0 is its antilex-smallest subset of size t+1-s1-s2.
UniformHypergraph case_construct(const UniformHypergraph& base, int s1, int s2, const Parameters& params,
                                 MergeCase which, VertexSubset anchor = {});

}  // namespace shadowlab
