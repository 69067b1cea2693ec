#include "shadowlab/merge_cases.hpp"

#include "shadowlab/errors.hpp"

namespace shadowlab {

void check_merge_case(int s1, int s2, int t, MergeCase which) {
  if (s1 < 1 || s2 < 1 || s1 > t + 1 || s2 > t + 1) {
    throw Error(ErrorKind::Precondition, "s1 and s2 must lie in 1..t+1");
  }
  if (which == MergeCase::OverlappingPair && s1 + s2 < t + 1) {
    throw Error(ErrorKind::Precondition, "overlapping-pair case needs s1 + s2 >= t+1");
  }
  if (which == MergeCase::AnchoredClique && s1 + s2 >= t + 1) {
    throw Error(ErrorKind::Precondition, "anchored-clique case needs s1 + s2 < t+1");
  }
}

Integer case_added_edges(int s1, int s2, int t, int ell, MergeCase which) {
  check_merge_case(s1, s2, t, which);
  if (which == MergeCase::OverlappingPair) return 2 * binomial(t + 1, ell) - binomial(2 * (t + 1) - s1 - s2, ell);
  return binomial(t + 1, ell) - binomial(t + 1 - s1 - s2, ell);
}

Integer case_edge_delta(int s1, int s2, int t, int ell, MergeCase which) {
  check_merge_case(s1, s2, t, which);
  const Integer kept = binomial(t + 1 - s1, ell) + binomial(t + 1 - s2, ell);
  if (which == MergeCase::OverlappingPair) return kept - binomial(2 * (t + 1) - s1 - s2, ell);
  return kept - binomial(t + 1 - s1 - s2, ell) - binomial(t + 1, ell);
}

UniformHypergraph case_construct(const UniformHypergraph& base, int s1, int s2, const Parameters& params,
                                 MergeCase which, VertexSubset anchor) {
  const int t = params.t_int();
  check_merge_case(s1, s2, t, which);
  if (base.r() != params.ell) throw Error(ErrorKind::Precondition, "base uniformity differs from ell");
  const int n = base.n() + s1 + s2;
  if (n > kMaxVertices) throw Error(ErrorKind::Range, "construction exceeds the vertex limit");
  const VertexSubset fresh = VertexSubset::interval(base.n() + 1, n);
  const UniformHypergraph host = with_vertex_count(base, n);

  std::vector<Mask> edges(host.edges().masks().begin(), host.edges().masks().end());
  auto add_clique = [&](VertexSubset clique) {
    for_each_subset(clique.mask(), params.ell, [&](Mask e) { edges.push_back(e); });
  };

  if (which == MergeCase::OverlappingPair) {
    const std::vector<Vertex> q = fresh.vertices();
    add_clique(VertexSubset::from_vertices(std::span(q).first(static_cast<std::size_t>(t + 1))));
    add_clique(VertexSubset::from_vertices(std::span(q).last(static_cast<std::size_t>(t + 1))));
  } else {
    base.check_within(anchor);
    if (anchor.size() != t + 1 || !is_clique(base, anchor)) {
      throw Error(ErrorKind::Precondition, "anchored-clique case needs a (t+1)-clique of the base as anchor");
    }
    const std::vector<Vertex> a = anchor.vertices();
    const VertexSubset w0 =
        VertexSubset::from_vertices(std::span(a).first(static_cast<std::size_t>(t + 1 - s1 - s2)));
    add_clique(w0 | fresh);
  }
  return UniformHypergraph::from_masks(n, params.ell, std::move(edges));
}

}  // namespace shadowlab
