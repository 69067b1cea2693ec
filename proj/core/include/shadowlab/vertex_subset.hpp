#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace shadowlab {

/// Vertices are labeled 1..n.
using Vertex = int;

/// Bit v-1 represents vertex v.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask vertex_bit(Vertex v) noexcept { return Mask{1} << (v - 1); }

/// Mask of the vertices {1, ..., n}.
constexpr Mask prefix_mask(int n) noexcept {
  return n >= kMaxVertices ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// A set of vertex labels, stored as a packed bit mask. Iteration and
/// `vertices()` always produce strictly increasing labels.
class VertexSubset {
 public:
  constexpr VertexSubset() noexcept = default;
  VertexSubset(std::initializer_list<Vertex> vertices);

  static constexpr VertexSubset from_mask(Mask mask) noexcept { return VertexSubset(mask, 0); }
  static VertexSubset from_vertices(std::span<const Vertex> vertices);
  /// {first, ..., last}; empty when last < first.
  static VertexSubset interval(Vertex first, Vertex last);

  constexpr Mask mask() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  bool contains(Vertex v) const noexcept {
    return v >= 1 && v <= kMaxVertices && (bits_ & vertex_bit(v)) != 0;
  }
  constexpr bool is_subset_of(VertexSubset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSubset other) const noexcept { return (bits_ & other.bits_) != 0; }

  /// Smallest / largest label; 0 for the empty set.
  Vertex min() const noexcept { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  Vertex max() const noexcept { return bits_ == 0 ? 0 : kMaxVertices - std::countl_zero(bits_); }

  VertexSubset with(Vertex v) const;
  VertexSubset without(Vertex v) const;

  std::vector<Vertex> vertices() const;
  std::string to_string() const;  // "{1,2,5}"

  friend constexpr VertexSubset operator|(VertexSubset a, VertexSubset b) noexcept {
    return from_mask(a.bits_ | b.bits_);
  }
  friend constexpr VertexSubset operator&(VertexSubset a, VertexSubset b) noexcept {
    return from_mask(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSubset operator-(VertexSubset a, VertexSubset b) noexcept {
    return from_mask(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSubset, VertexSubset) noexcept = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() noexcept = default;
    constexpr explicit iterator(Mask rest) noexcept : rest_(rest) {}
    Vertex operator*() const noexcept { return std::countr_zero(rest_) + 1; }
    iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) noexcept {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    Mask rest_ = 0;
  };

  iterator begin() const noexcept { return iterator(bits_); }
  iterator end() const noexcept { return iterator(0); }

 private:
  constexpr VertexSubset(Mask mask, int) noexcept : bits_(mask) {}
  Mask bits_ = 0;
};

/// Calls `fn(Mask)` for every `size`-subset of `universe`, in increasing
/// numeric order of the mask (which is the antilexicographic order). When `fn`
/// returns bool, returning false stops the walk; the result reports whether
/// the walk ran to completion.
template <typename Fn>
bool for_each_subset(Mask universe, int size, Fn&& fn) {
  auto visit = [&](Mask subset) -> bool {
    if constexpr (std::is_same_v<decltype(fn(subset)), bool>) {
      return fn(subset);
    } else {
      fn(subset);
      return true;
    }
  };
  const int m = std::popcount(universe);
  if (size < 0 || size > m) return true;
  if (size == 0) return visit(Mask{0});
  int positions[kMaxVertices];
  int count = 0;
  for (Mask rest = universe; rest != 0; rest &= rest - 1) positions[count++] = std::countr_zero(rest);

  // Colex successor over index combinations c[0] < ... < c[size-1].
  int c[kMaxVertices];
  for (int i = 0; i < size; ++i) c[i] = i;
  while (true) {
    Mask subset = 0;
    for (int i = 0; i < size; ++i) subset |= Mask{1} << positions[c[i]];
    if (!visit(subset)) return false;
    int i = 0;
    while (i < size - 1 && c[i] + 1 == c[i + 1]) {
      c[i] = i;
      ++i;
    }
    if (i == size - 1 && c[i] + 1 == m) return true;
    ++c[i];
  }
}

}  // namespace shadowlab
