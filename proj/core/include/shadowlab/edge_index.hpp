#pragma once

#include <cstdint>
#include <vector>

#include "shadowlab/hypergraph.hpp"

namespace shadowlab {

/// One bit per potential edge; position 0 is the most significant bit so
/// that lexicographic and numeric comparison agree.
using EdgeString = std::uint64_t;

/// Positions of all r-subsets of {1..n} in antilex order. Position p holds
/// the p-th r-set, so the first C(m, r) positions are exactly the edges
/// inside {1..m}. Needs C(n, r) <= 64.
class EdgeIndex {
 public:
  EdgeIndex(int n, int r);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  Mask edge(int position) const { return edges_[static_cast<std::size_t>(position)]; }
  int position(Mask edge) const;
  EdgeString bit(int position) const noexcept { return EdgeString{1} << (size() - 1 - position); }
  /// All positions strictly greater than `position` (everything for -1).
  EdgeString after(int position) const noexcept;
  /// Largest position present, or -1 for the empty string.
  int last_position(EdgeString s) const noexcept;
  /// Number of positions below C(m, r): edges inside {1..m}.
  int prefix_length(int m) const noexcept { return prefix_[static_cast<std::size_t>(m)]; }

  EdgeString encode(const UniformHypergraph& h) const;
  UniformHypergraph decode(EdgeString s) const;

 private:
  int n_;
  int r_;
  std::vector<Mask> edges_;
  std::vector<int> prefix_;
};

}  // namespace shadowlab
