#pragma once

#include <cstdint>
#include <vector>

#include "shadowlab/hypergraph.hpp"
#include "shadowlab/numeric.hpp"
#include "shadowlab/parameters.hpp"

namespace shadowlab {

/// Per-vertex K_k^ell counts measured against a threshold.
struct CliqueDegreeProfile {
  std::vector<std::uint64_t> counts;  // counts[v-1] for vertex v
  Rational t;
  int k = 0;
  int ell = 0;
  /// ceil(C(t, k-1)); equals C(t, k-1) for integer t.
  Integer threshold;
};

struct ConditionCheck {
  bool satisfied = false;
  CliqueDegreeProfile profile;
  /// Vertices whose count is below the threshold.
  std::vector<Vertex> deficient;
};

/// ceil(C(t, k-1)), the number of K_k^ell copies each vertex needs.
Integer clique_threshold(const Parameters& params);

/// Minimum vertex degree compatible with the condition: the smallest number
/// of (ell-1)-sets whose clique complex holds clique_threshold copies of
/// K_{k-1}^{ell-1}, i.e. the Kruskal-Katona minimum shadow. Equals C(t, ell-1)
/// for integer t.
std::uint64_t min_feasible_degree(const Parameters& params);

/// Does every vertex lie in at least clique_threshold(params) copies of K_k^ell?
/// Throws Error(Uniformity) when H is not params.ell-uniform.
ConditionCheck check_condition(const UniformHypergraph& h, const Parameters& params);

/// (n/ell) * C(t, ell-1).
Rational edge_lower_bound(int n, const Rational& t, int ell);

/// Sum over vertices of deg(v) - C(t, ell-1), i.e. ell|E| - n C(t, ell-1).
Rational excess_degree_sum(const UniformHypergraph& h, const Rational& t);

/// (t+1)^2/4 * C(t-1, ell-2), the cap on the excess of an extremal graph.
Rational excess_bound(const Rational& t, int ell);

/// Sum_{i=1..r} C(N-i, k-1). Throws std::logic_error if it ever disagrees with
/// C(N, k) - C(N-r, k).
Integer binomial_telescope(std::int64_t big_n, std::int64_t k, std::int64_t r);

struct LinkSetFamily {
  SubsetFamily sets;
  /// Set when size < ell-|Y|: such S are never counted as complete links.
  bool below_link_uniformity = false;
};

/// All S ⊆ ground, |S| = size, such that L_H^Y(S) is the complete (ell-|Y|)-graph on S.
LinkSetFamily complete_link_sets(const UniformHypergraph& h, VertexSubset y, VertexSubset ground, int size);

/// All T ⊆ ground with |T| = k-|X| such that T ∪ X is a k-clique of H.
SubsetFamily clique_extensions(const UniformHypergraph& h, VertexSubset x, VertexSubset ground, int k);

struct DegreePartition {
  VertexSubset v1;  // degree exactly min_degree
  VertexSubset v2;  // everything else
  std::uint64_t min_degree = 0;
};

DegreePartition degree_partition(const UniformHypergraph& h, const Parameters& params);

}  // namespace shadowlab
