#include "shadowlab/hypergraph.hpp"

#include <algorithm>
#include <numeric>

#include "shadowlab/errors.hpp"
#include "shadowlab/numeric.hpp"

namespace shadowlab {

// ---------------------------------------------------------------- SubsetFamily

SubsetFamily SubsetFamily::from_masks(int set_size, std::vector<Mask> masks) {
  if (set_size < 0 || set_size > kMaxVertices) {
    throw Error(ErrorKind::Uniformity, "set size " + std::to_string(set_size) + " out of range");
  }
  for (Mask m : masks) {
    if (std::popcount(m) != set_size) {
      throw Error(ErrorKind::Uniformity, "set " + VertexSubset::from_mask(m).to_string() +
                                             " does not have size " + std::to_string(set_size));
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  SubsetFamily family(set_size);
  family.sets_ = std::move(masks);
  return family;
}

SubsetFamily SubsetFamily::from_sets(std::span<const VertexSubset> sets) {
  return from_sets(sets.empty() ? 0 : sets.front().size(), sets);
}

SubsetFamily SubsetFamily::from_sets(int set_size, std::span<const VertexSubset> sets) {
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (VertexSubset s : sets) masks.push_back(s.mask());
  return from_masks(set_size, std::move(masks));
}

bool SubsetFamily::contains(VertexSubset s) const noexcept {
  return std::binary_search(sets_.begin(), sets_.end(), s.mask());
}

std::vector<VertexSubset> SubsetFamily::sets() const {
  std::vector<VertexSubset> out;
  out.reserve(sets_.size());
  for (Mask m : sets_) out.push_back(VertexSubset::from_mask(m));
  return out;
}

VertexSubset SubsetFamily::support() const noexcept {
  Mask all = 0;
  for (Mask m : sets_) all |= m;
  return VertexSubset::from_mask(all);
}

// ----------------------------------------------------------- UniformHypergraph

namespace {

void check_shape(int n, int r) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::Range, "vertex count " + std::to_string(n) + " outside 0.." +
                                      std::to_string(kMaxVertices));
  }
  if (r < 1) throw Error(ErrorKind::Uniformity, "uniformity must be at least 1");
}

void check_edges_within(int n, const SubsetFamily& edges) {
  const Mask outside = ~prefix_mask(n);
  for (Mask e : edges.masks()) {
    if (e & outside) {
      throw Error(ErrorKind::Range, "edge " + VertexSubset::from_mask(e).to_string() +
                                        " uses a vertex outside 1.." + std::to_string(n));
    }
  }
}

}  // namespace

UniformHypergraph::UniformHypergraph(int n, int r) : n_(n), edges_(r) { check_shape(n, r); }

UniformHypergraph::UniformHypergraph(int n, int r, std::span<const VertexSubset> edges)
    : n_(n), edges_(SubsetFamily::from_sets(r, edges)) {
  check_shape(n, r);
  check_edges_within(n, edges_);
}

UniformHypergraph::UniformHypergraph(int n, SubsetFamily edges) : n_(n), edges_(std::move(edges)) {
  check_shape(n, edges_.set_size());
  check_edges_within(n, edges_);
}

UniformHypergraph UniformHypergraph::from_masks(int n, int r, std::vector<Mask> edges) {
  return UniformHypergraph(n, SubsetFamily::from_masks(r, std::move(edges)));
}

UniformHypergraph UniformHypergraph::complete(int n, int r) {
  return complete_on(n, r, VertexSubset::from_mask(prefix_mask(n)));
}

UniformHypergraph UniformHypergraph::complete_on(int n, int r, VertexSubset clique) {
  std::vector<Mask> edges;
  for_each_subset(clique.mask(), r, [&](Mask e) { edges.push_back(e); });
  return from_masks(n, r, std::move(edges));
}

void UniformHypergraph::check_within(VertexSubset s) const {
  if (!s.is_subset_of(vertex_set())) {
    throw Error(ErrorKind::Range, "vertex set " + s.to_string() + " not within 1.." + std::to_string(n_));
  }
}

// ------------------------------------------------------------------ primitives

SubsetFamily shadow(const SubsetFamily& family, int s) {
  if (s < 0 || s > family.set_size()) {
    throw Error(ErrorKind::InvalidTarget, "shadow level " + std::to_string(s) + " not in 0.." +
                                              std::to_string(family.set_size()));
  }
  std::vector<Mask> out;
  for (Mask m : family.masks()) for_each_subset(m, s, [&](Mask sub) { out.push_back(sub); });
  return SubsetFamily::from_masks(s, std::move(out));
}

UniformHypergraph link(const UniformHypergraph& h, VertexSubset y, VertexSubset s) {
  h.check_within(y);
  h.check_within(s);
  if (y.intersects(s)) {
    throw Error(ErrorKind::Overlap, "link: Y " + y.to_string() + " meets S " + s.to_string());
  }
  if (y.size() >= h.r()) {
    throw Error(ErrorKind::Uniformity, "link: |Y| = " + std::to_string(y.size()) +
                                           " must be below the uniformity " + std::to_string(h.r()));
  }
  std::vector<Mask> out;
  for (Mask e : h.edges().masks()) {
    if ((e & y.mask()) == y.mask() && ((e & ~y.mask()) & ~s.mask()) == 0) out.push_back(e & ~y.mask());
  }
  return UniformHypergraph::from_masks(h.n(), h.r() - y.size(), std::move(out));
}

std::size_t degree(const UniformHypergraph& h, VertexSubset s) {
  h.check_within(s);
  if (s.size() > h.r()) return 0;
  return static_cast<std::size_t>(std::count_if(h.edges().masks().begin(), h.edges().masks().end(),
                                                [&](Mask e) { return (e & s.mask()) == s.mask(); }));
}

std::size_t degree(const UniformHypergraph& h, Vertex v) {
  return degree(h, VertexSubset::from_mask(vertex_bit(v)));
}

VertexSubset neighborhood(const UniformHypergraph& h, VertexSubset s) {
  h.check_within(s);
  Mask out = 0;
  for (Mask e : h.edges().masks()) {
    if (e & s.mask()) out |= e;
  }
  return VertexSubset::from_mask(out & ~s.mask());
}

InducedSubgraph induced(const UniformHypergraph& h, VertexSubset s) {
  h.check_within(s);
  std::vector<Vertex> label_map = s.vertices();
  std::vector<Vertex> image(static_cast<std::size_t>(h.n()), 0);
  for (std::size_t i = 0; i < label_map.size(); ++i) image[label_map[i] - 1] = static_cast<Vertex>(i + 1);
  std::vector<Mask> out;
  for (Mask e : h.edges().masks()) {
    if ((e & ~s.mask()) != 0) continue;
    Mask mapped = 0;
    for (Vertex v : VertexSubset::from_mask(e)) mapped |= vertex_bit(image[v - 1]);
    out.push_back(mapped);
  }
  return {UniformHypergraph::from_masks(s.size(), h.r(), std::move(out)), std::move(label_map)};
}

UniformHypergraph restrict_to(const UniformHypergraph& h, VertexSubset s) {
  std::vector<Mask> out;
  for (Mask e : h.edges().masks()) {
    if ((e & ~s.mask()) == 0) out.push_back(e);
  }
  return UniformHypergraph::from_masks(h.n(), h.r(), std::move(out));
}

bool is_clique(const UniformHypergraph& h, VertexSubset s) {
  h.check_within(s);
  return for_each_subset(s.mask(), h.r(), [&](Mask e) { return h.edges().contains(VertexSubset::from_mask(e)); });
}

namespace {

/// Backtracking clique enumeration; candidates are filtered through the
/// 2-shadow adjacency, which is exact for r = 2 and a sound filter for r > 2.
class CliqueWalker {
 public:
  CliqueWalker(const UniformHypergraph& h, int k) : h_(h), k_(k), adjacency_(static_cast<std::size_t>(h.n()), 0) {
    for (Mask e : h.edges().masks()) {
      for (Vertex v : VertexSubset::from_mask(e)) adjacency_[v - 1] |= e & ~vertex_bit(v);
    }
  }

  template <typename Fn>
  void run(Mask current, Mask candidates, Fn&& fn) const {
    const int have = std::popcount(current);
    if (have == k_) {
      fn(current);
      return;
    }
    if (have + std::popcount(candidates) < k_) return;
    for (Mask rest = candidates; rest != 0; rest &= rest - 1) {
      const int index = std::countr_zero(rest);
      const Vertex v = index + 1;
      if (!extends(current, v)) continue;
      const Mask higher = ~((Mask{2} << index) - 1);
      Mask next = candidates & higher;
      if (h_.r() >= 2) next &= adjacency_[index];
      run(current | vertex_bit(v), next, fn);
    }
  }

 private:
  bool extends(Mask current, Vertex v) const {
    const int r = h_.r();
    if (std::popcount(current) < r - 1) return true;
    return for_each_subset(current, r - 1, [&](Mask t) {
      return h_.edges().contains(VertexSubset::from_mask(t | vertex_bit(v)));
    });
  }

  const UniformHypergraph& h_;
  int k_;
  std::vector<Mask> adjacency_;
};

}  // namespace

SubsetFamily cliques_containing(const UniformHypergraph& h, Vertex v, int k) {
  if (v < 1 || v > h.n()) {
    throw Error(ErrorKind::Range, "vertex " + std::to_string(v) + " not within 1.." + std::to_string(h.n()));
  }
  if (k < h.r()) {
    throw Error(ErrorKind::Uniformity, "clique order " + std::to_string(k) + " below uniformity " +
                                           std::to_string(h.r()));
  }
  Mask candidates = prefix_mask(h.n()) & ~vertex_bit(v);
  if (h.r() >= 2) candidates &= neighborhood(h, VertexSubset::from_mask(vertex_bit(v))).mask();
  std::vector<Mask> out;
  CliqueWalker(h, k).run(vertex_bit(v), candidates, [&](Mask c) { out.push_back(c); });
  return SubsetFamily::from_masks(k, std::move(out));
}

SubsetFamily all_cliques(const UniformHypergraph& h, int k) { return all_cliques(h, k, h.vertex_set()); }

SubsetFamily all_cliques(const UniformHypergraph& h, int k, VertexSubset within) {
  h.check_within(within);
  if (k < 0) throw Error(ErrorKind::InvalidInput, "negative clique order");
  std::vector<Mask> out;
  if (k < h.r()) {
    for_each_subset(within.mask(), k, [&](Mask c) { out.push_back(c); });
    return SubsetFamily::from_masks(k, std::move(out));
  }
  CliqueWalker walker(h, k);
  walker.run(0, within.mask(), [&](Mask c) { out.push_back(c); });
  return SubsetFamily::from_masks(k, std::move(out));
}

std::vector<std::uint64_t> clique_degrees(const UniformHypergraph& h, int k) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(h.n()), 0);
  if (k < h.r()) {
    std::fill(counts.begin(), counts.end(), k >= 1 ? binomial_u64(h.n() - 1, k - 1) : 0);
    return counts;
  }
  CliqueWalker walker(h, k);
  walker.run(0, prefix_mask(h.n()), [&](Mask c) {
    for (Vertex v : VertexSubset::from_mask(c)) ++counts[v - 1];
  });
  return counts;
}

std::vector<VertexSubset> components(const UniformHypergraph& h) {
  std::vector<Mask> reach(static_cast<std::size_t>(h.n()), 0);
  for (int v = 1; v <= h.n(); ++v) reach[v - 1] = vertex_bit(v);
  for (Mask e : h.edges().masks()) {
    for (Vertex v : VertexSubset::from_mask(e)) reach[v - 1] |= e;
  }
  std::vector<VertexSubset> out;
  Mask seen = 0;
  for (int v = 1; v <= h.n(); ++v) {
    if (seen & vertex_bit(v)) continue;
    Mask comp = vertex_bit(v);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask grown = 0;
      for (Vertex u : VertexSubset::from_mask(frontier)) grown |= reach[u - 1];
      frontier = grown & ~comp;
      comp |= grown;
    }
    seen |= comp;
    out.push_back(VertexSubset::from_mask(comp));
  }
  return out;
}

UniformHypergraph disjoint_union(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.r() != b.r()) throw Error(ErrorKind::Uniformity, "disjoint union of different uniformities");
  const int n = a.n() + b.n();
  if (n > kMaxVertices) throw Error(ErrorKind::Range, "disjoint union exceeds the vertex limit");
  std::vector<Mask> edges(a.edges().masks().begin(), a.edges().masks().end());
  for (Mask e : b.edges().masks()) edges.push_back(e << a.n());
  return UniformHypergraph::from_masks(n, a.r(), std::move(edges));
}

UniformHypergraph relabel(const UniformHypergraph& h, std::span<const Vertex> image, int new_n) {
  if (image.size() != static_cast<std::size_t>(h.n())) {
    throw Error(ErrorKind::InvalidInput, "relabel: image size does not match vertex count");
  }
  std::vector<Mask> edges;
  edges.reserve(h.edge_count());
  for (Mask e : h.edges().masks()) {
    Mask mapped = 0;
    for (Vertex v : VertexSubset::from_mask(e)) {
      const Vertex w = image[v - 1];
      if (w < 1 || w > new_n) throw Error(ErrorKind::Range, "relabel: image outside 1.." + std::to_string(new_n));
      mapped |= vertex_bit(w);
    }
    if (std::popcount(mapped) != h.r()) throw Error(ErrorKind::InvalidInput, "relabel: image is not injective");
    edges.push_back(mapped);
  }
  UniformHypergraph out = UniformHypergraph::from_masks(new_n, h.r(), std::move(edges));
  if (out.edge_count() != h.edge_count()) throw Error(ErrorKind::InvalidInput, "relabel: image is not injective");
  return out;
}

UniformHypergraph with_vertex_count(const UniformHypergraph& h, int n) {
  return UniformHypergraph(n, h.edges());
}

}  // namespace shadowlab
