#include "shadowlab/edge_index.hpp"

#include <bit>

#include "shadowlab/errors.hpp"
#include "shadowlab/kk_order.hpp"
#include "shadowlab/numeric.hpp"

namespace shadowlab {

EdgeIndex::EdgeIndex(int n, int r) : n_(n), r_(r) {
  if (n < 0 || r < 1) throw Error(ErrorKind::InvalidInput, "edge index needs n >= 0 and r >= 1");
  if (binomial(n, r) > 64) {
    throw Error(ErrorKind::LimitExceeded, "C(" + std::to_string(n) + ", " + std::to_string(r) +
                                              ") potential edges exceed the 64-bit edge string");
  }
  for_each_subset(prefix_mask(n), r, [&](Mask e) { edges_.push_back(e); });
  for (int m = 0; m <= n; ++m) prefix_.push_back(static_cast<int>(binomial_u64(m, r)));
}

int EdgeIndex::position(Mask edge) const {
  return static_cast<int>(antilex_rank(VertexSubset::from_mask(edge)).value);
}

EdgeString EdgeIndex::after(int position) const noexcept {
  const int count = size() - 1 - position;
  if (count <= 0) return 0;
  return count >= 64 ? ~EdgeString{0} : (EdgeString{1} << count) - 1;
}

int EdgeIndex::last_position(EdgeString s) const noexcept {
  if (s == 0) return -1;
  return size() - 1 - std::countr_zero(s);
}

EdgeString EdgeIndex::encode(const UniformHypergraph& h) const {
  if (h.n() != n_ || h.r() != r_) throw Error(ErrorKind::InvalidInput, "graph shape differs from the edge index");
  EdgeString s = 0;
  for (Mask e : h.edges().masks()) s |= bit(position(e));
  return s;
}

UniformHypergraph EdgeIndex::decode(EdgeString s) const {
  std::vector<Mask> out;
  for (int p = 0; p < size(); ++p) {
    if (s & bit(p)) out.push_back(edges_[static_cast<std::size_t>(p)]);
  }
  return UniformHypergraph::from_masks(n_, r_, std::move(out));
}

}  // namespace shadowlab
