#include "shadowlab/canonical.hpp"

#include <array>

#include "shadowlab/errors.hpp"

namespace shadowlab {

namespace {

/// Builds relabelings one new vertex at a time. Placing new vertex m fixes
/// the bits of the block of positions [C(m-1, r), C(m, r)), i.e. the edges
/// whose largest new label is m, so prefixes can be compared early.
class Relabeler {
 public:
  Relabeler(EdgeString s, const EdgeIndex& index) : s_(s), index_(index), n_(index.n()), r_(index.r()) {
    for (int a = 0; a <= n_; ++a) {
      for (int i = 0; i <= r_; ++i) binom_[a][i] = small_binomial(a, i);
    }
    blocks_.resize(static_cast<std::size_t>(n_) + 1);
    for (int m = 1; m <= n_; ++m) {
      for_each_subset(prefix_mask(m - 1), r_ - 1, [&](Mask tail) { blocks_[m].push_back(tail); });
    }
    compute_twins();
  }

  bool test() { return test_from(1, 0); }

  EdgeString maximize() {
    best_ = 0;
    maximize_from(1, 0, 0);
    return best_;
  }

 private:
  static std::uint64_t small_binomial(int a, int i) {
    if (i < 0 || i > a) return 0;
    std::uint64_t c = 1;
    for (int j = 1; j <= i; ++j) c = c * static_cast<std::uint64_t>(a - i + j) / static_cast<std::uint64_t>(j);
    return c;
  }

  bool present(Mask old_edge) const {
    std::uint64_t rank = 0;
    int i = 1;
    for (Mask rest = old_edge; rest != 0; rest &= rest - 1) rank += binom_[std::countr_zero(rest)][i++];
    return (s_ & index_.bit(static_cast<int>(rank))) != 0;
  }

  /// (x y) is an automorphism iff swapping them maps every edge to an edge.
  void compute_twins() {
    for (int v = 0; v < n_; ++v) twin_rep_[v] = v;
    for (int x = 0; x < n_; ++x) {
      if (twin_rep_[x] != x) continue;
      for (int y = x + 1; y < n_; ++y) {
        if (twin_rep_[y] != y) continue;
        const Mask bx = Mask{1} << x;
        const Mask by = Mask{1} << y;
        bool automorphism = true;
        for (int p = 0; p < index_.size() && automorphism; ++p) {
          if (!(s_ & index_.bit(p))) continue;
          const Mask e = index_.edge(p);
          if (((e & bx) != 0) == ((e & by) != 0)) continue;
          automorphism = present(e ^ bx ^ by);
        }
        if (automorphism) twin_rep_[y] = x;
      }
    }
  }

  /// Bits of block m when old vertex x takes new label m.
  EdgeString block_bits(int m, int x) const {
    EdgeString bits = 0;
    for (Mask tail : blocks_[m]) {
      Mask old_edge = Mask{1} << x;
      for (Mask rest = tail; rest != 0; rest &= rest - 1) old_edge |= Mask{1} << sigma_[std::countr_zero(rest) + 1];
      bits = (bits << 1) | (present(old_edge) ? 1 : 0);
    }
    return bits;
  }

  EdgeString reference_block(EdgeString s, int m) const {
    const int begin = index_.prefix_length(m - 1);
    const int end = index_.prefix_length(m);
    if (end == begin) return 0;
    const int shift = index_.size() - end;
    const int width = end - begin;
    const EdgeString field = width >= 64 ? ~EdgeString{0} : (EdgeString{1} << width) - 1;
    return (s >> shift) & field;
  }

  bool test_from(int m, Mask used) {
    if (m > n_) return true;
    Mask tried = 0;
    const EdgeString ref = reference_block(s_, m);
    for (int x = 0; x < n_; ++x) {
      if (used & (Mask{1} << x)) continue;
      const Mask rep = Mask{1} << twin_rep_[x];
      if (tried & rep) continue;
      tried |= rep;
      const EdgeString bits = block_bits(m, x);
      if (bits > ref) return false;
      if (bits < ref) continue;
      sigma_[m] = x;
      if (!test_from(m + 1, used | (Mask{1} << x))) return false;
    }
    return true;
  }

  void maximize_from(int m, Mask used, EdgeString current) {
    if (m > n_) {
      if (current > best_) best_ = current;
      return;
    }
    Mask tried = 0;
    const int end = index_.prefix_length(m);
    const int shift = index_.size() - end;
    for (int x = 0; x < n_; ++x) {
      if (used & (Mask{1} << x)) continue;
      const Mask rep = Mask{1} << twin_rep_[x];
      if (tried & rep) continue;
      tried |= rep;
      const EdgeString bits = block_bits(m, x);
      const EdgeString next = current | (end > index_.prefix_length(m - 1) ? bits << shift : 0);
      if (shift < 64 && (next >> shift) < (best_ >> shift)) continue;
      sigma_[m] = x;
      maximize_from(m + 1, used | (Mask{1} << x), next);
    }
  }

  EdgeString s_;
  const EdgeIndex& index_;
  int n_;
  int r_;
  std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1> binom_{};
  std::vector<std::vector<Mask>> blocks_;
  std::array<int, kMaxVertices> twin_rep_{};
  std::array<int, kMaxVertices + 1> sigma_{};
  EdgeString best_ = 0;
};

}  // namespace

EdgeString canonical_string(EdgeString s, const EdgeIndex& index) { return Relabeler(s, index).maximize(); }

bool is_canonical(EdgeString s, const EdgeIndex& index) { return Relabeler(s, index).test(); }

UniformHypergraph canonical_form(const UniformHypergraph& h) {
  const EdgeIndex index(h.n(), h.r());
  return index.decode(canonical_string(index.encode(h), index));
}

bool isomorphic(const UniformHypergraph& a, const UniformHypergraph& b) {
  if (a.n() != b.n() || a.r() != b.r() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace shadowlab
