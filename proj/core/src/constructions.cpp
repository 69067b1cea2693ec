#include "shadowlab/constructions.hpp"

#include "shadowlab/errors.hpp"
#include "shadowlab/numeric.hpp"

namespace shadowlab {

namespace {

void add_clique(std::vector<Mask>& edges, VertexSubset clique, int ell) {
  for_each_subset(clique.mask(), ell, [&](Mask e) { edges.push_back(e); });
}

}  // namespace

UniformHypergraph construct_upper(int n, int t, int ell) {
  if (t < 1 || ell < 1 || ell > t + 1) throw Error(ErrorKind::Precondition, "need 1 <= ell <= t+1");
  if (n < t + 1) throw Error(ErrorKind::Precondition, "construct_upper needs n >= t+1");
  if (n > kMaxVertices) throw Error(ErrorKind::Range, "n exceeds the vertex limit");
  const int q = n / (t + 1);
  const int rem = n % (t + 1);
  std::vector<Mask> edges;
  int next = 1;
  for (int c = 0; c + 1 < q; ++c, next += t + 1) add_clique(edges, VertexSubset::interval(next, next + t), ell);
  // The last block has t+1+rem vertices covered by two cliques overlapping in t+1-rem.
  add_clique(edges, VertexSubset::interval(next, next + t), ell);
  add_clique(edges, VertexSubset::interval(next + rem, n), ell);
  return UniformHypergraph::from_masks(n, ell, std::move(edges));
}

UniformHypergraph construct_counterexample(int tceil, int copies) {
  if (tceil < 2 || tceil % 2 != 0) throw Error(ErrorKind::Precondition, "tceil must be an even integer >= 2");
  if (copies < 1) throw Error(ErrorKind::Precondition, "copies must be positive");
  const int block = tceil + 2;
  const int n = block * copies;
  if (n > kMaxVertices) throw Error(ErrorKind::Range, "construction exceeds the vertex limit");
  std::vector<Mask> edges;
  for (int c = 0; c < copies; ++c) {
    const int first = c * block + 1;
    for (int u = first; u < first + block; ++u) {
      for (int v = u + 1; v < first + block; ++v) {
        const bool matched = (u - first) % 2 == 0 && v == u + 1;
        if (!matched) edges.push_back(vertex_bit(u) | vertex_bit(v));
      }
    }
  }
  return UniformHypergraph::from_masks(n, 2, std::move(edges));
}

bool has_isolated_clique(const UniformHypergraph& h, int size) {
  for (VertexSubset comp : components(h)) {
    if (comp.size() == size && is_clique(h, comp)) return true;
  }
  return false;
}

}  // namespace shadowlab
