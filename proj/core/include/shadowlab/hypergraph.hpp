#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "shadowlab/vertex_subset.hpp"

namespace shadowlab {

/// A duplicate-free family of equal-size vertex sets, kept in antilex order.
class SubsetFamily {
 public:
  explicit SubsetFamily(int set_size = 0) : set_size_(set_size) {}

  /// Sorts and deduplicates. Throws Error(Uniformity) on a set of the wrong size.
  static SubsetFamily from_masks(int set_size, std::vector<Mask> masks);
  /// Infers the set size from the first member; mixed sizes throw Error(Uniformity).
  static SubsetFamily from_sets(std::span<const VertexSubset> sets);
  static SubsetFamily from_sets(int set_size, std::span<const VertexSubset> sets);

  int set_size() const noexcept { return set_size_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  bool contains(VertexSubset s) const noexcept;
  std::span<const Mask> masks() const noexcept { return sets_; }
  VertexSubset operator[](std::size_t i) const noexcept { return VertexSubset::from_mask(sets_[i]); }
  std::vector<VertexSubset> sets() const;
  /// Union of all members.
  VertexSubset support() const noexcept;

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  int set_size_;
  std::vector<Mask> sets_;
};

/// An r-uniform hypergraph on the labeled vertex set {1..n}. Values are
/// immutable; every operation that changes edges returns a new graph.
class UniformHypergraph {
 public:
  UniformHypergraph(int n, int r);
  UniformHypergraph(int n, int r, std::span<const VertexSubset> edges);
  UniformHypergraph(int n, SubsetFamily edges);

  static UniformHypergraph from_masks(int n, int r, std::vector<Mask> edges);
  /// K_n^r on {1..n}.
  static UniformHypergraph complete(int n, int r);
  /// Complete r-graph on `clique` inside a host of n vertices.
  static UniformHypergraph complete_on(int n, int r, VertexSubset clique);

  int n() const noexcept { return n_; }
  int r() const noexcept { return edges_.set_size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const SubsetFamily& edges() const noexcept { return edges_; }
  bool has_edge(VertexSubset e) const noexcept { return edges_.contains(e); }
  VertexSubset vertex_set() const noexcept { return VertexSubset::from_mask(prefix_mask(n_)); }
  /// Throws Error(Range) unless s ⊆ {1..n}.
  void check_within(VertexSubset s) const;

  friend bool operator==(const UniformHypergraph&, const UniformHypergraph&) = default;

 private:
  int n_;
  SubsetFamily edges_;
};

/// Every s-set contained in some member of `family`.
SubsetFamily shadow(const SubsetFamily& family, int s);

/// L_H^Y(S): the (r-|Y|)-graph on S (same host labels) of all A ⊆ S with A ∪ Y ∈ E(H).
UniformHypergraph link(const UniformHypergraph& h, VertexSubset y, VertexSubset s);

/// Number of edges containing S. Zero when |S| > r.
std::size_t degree(const UniformHypergraph& h, VertexSubset s);
std::size_t degree(const UniformHypergraph& h, Vertex v);

/// Vertices outside S lying on an edge that meets S.
VertexSubset neighborhood(const UniformHypergraph& h, VertexSubset s);

struct InducedSubgraph {
  UniformHypergraph graph;
  /// label_map[i] is the host label of vertex i+1 of `graph`.
  std::vector<Vertex> label_map;
};

/// H[S], relabeled to 1..|S| preserving order.
InducedSubgraph induced(const UniformHypergraph& h, VertexSubset s);

/// Edges of H inside S, keeping the host labels and vertex count.
UniformHypergraph restrict_to(const UniformHypergraph& h, VertexSubset s);

/// True iff every r-subset of S is an edge (vacuous when |S| < r).
bool is_clique(const UniformHypergraph& h, VertexSubset s);

/// All k-cliques of H containing v.
SubsetFamily cliques_containing(const UniformHypergraph& h, Vertex v, int k);

/// All k-cliques of H inside `within` (default: everywhere).
SubsetFamily all_cliques(const UniformHypergraph& h, int k);
SubsetFamily all_cliques(const UniformHypergraph& h, int k, VertexSubset within);

/// Per-vertex count of k-cliques; index v-1 holds vertex v.
std::vector<std::uint64_t> clique_degrees(const UniformHypergraph& h, int k);

/// Vertex sets of connected components (isolated vertices are singleton components).
std::vector<VertexSubset> components(const UniformHypergraph& h);

/// Disjoint union; vertices of `b` are shifted by a.n().
UniformHypergraph disjoint_union(const UniformHypergraph& a, const UniformHypergraph& b);

/// Relabel by `image`, where image[v-1] is the new label of v, onto `new_n` vertices.
UniformHypergraph relabel(const UniformHypergraph& h, std::span<const Vertex> image, int new_n);

/// Same edges on a larger (or equal) vertex range.
UniformHypergraph with_vertex_count(const UniformHypergraph& h, int n);

}  // namespace shadowlab
