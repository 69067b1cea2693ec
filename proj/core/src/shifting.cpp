#include "shadowlab/shifting.hpp"

#include "shadowlab/errors.hpp"

namespace shadowlab {

UniformHypergraph shift(const UniformHypergraph& h, Vertex i, Vertex j) {
  std::size_t moved = 0;
  return shift(h, i, j, moved);
}

UniformHypergraph shift(const UniformHypergraph& h, Vertex i, Vertex j, std::size_t& moved) {
  if (i >= j) {
    throw Error(ErrorKind::Order, "shift S_{i,j} needs i < j, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  }
  if (i < 1 || j > h.n()) {
    throw Error(ErrorKind::Range, "shift indices must lie in 1.." + std::to_string(h.n()));
  }
  const Mask bi = vertex_bit(i);
  const Mask bj = vertex_bit(j);
  std::vector<Mask> out;
  out.reserve(h.edge_count());
  moved = 0;
  for (Mask e : h.edges().masks()) {
    if ((e & bj) && !(e & bi)) {
      const Mask target = (e & ~bj) | bi;
      if (!h.edges().contains(VertexSubset::from_mask(target))) {
        out.push_back(target);
        ++moved;
        continue;
      }
    }
    out.push_back(e);
  }
  return UniformHypergraph::from_masks(h.n(), h.r(), std::move(out));
}

}  // namespace shadowlab
