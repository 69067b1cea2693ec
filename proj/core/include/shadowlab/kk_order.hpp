#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "shadowlab/hypergraph.hpp"

namespace shadowlab {

/// Position of a k-set in the antilexicographic order, 0-based. Rank 0 is {1..k}.
struct AntilexRank {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(AntilexRank, AntilexRank) = default;
};

/// Number of |A|-sets strictly before A: sum over i of C(a_i - 1, i) for a_1 < ... < a_k.
AntilexRank antilex_rank(VertexSubset a);

/// Inverse of antilex_rank for sets of size k.
VertexSubset antilex_unrank(AntilexRank m, int k);

/// A < B iff the largest element of A \ B is below the largest element of B \ A.
/// Both sets must have the same size.
bool antilex_less(VertexSubset a, VertexSubset b);

/// The m antilex-smallest k-sets.
SubsetFamily initial_segment(std::uint64_t m, int k);

/// True iff `family` is exactly initial_segment(|family|, set size).
bool is_initial_segment(const SubsetFamily& family);

/// x(x-1)...(x-k+1)/k! in floating point; 1 when k == 0.
double gen_binomial(double x, int k);

/// The unique real x >= k with C(x, k) = m, to 1e-9. Returns the exact
/// integer when m is a binomial coefficient C(x, k) with integer x.
double lovasz_x(std::uint64_t m, int k);

/// The k-cascade m = C(a_k, k) + C(a_{k-1}, k-1) + ... + C(a_j, j) with
/// a_k > a_{k-1} > ... > a_j >= j >= 1, as (a_i, i) pairs from i = k downward.
std::vector<std::pair<int, int>> kk_cascade(std::uint64_t m, int k);

/// Minimum s-shadow size over all families of m k-sets.
std::uint64_t kk_min_shadow(std::uint64_t m, int k, int s);

/// Antilex compression: the initial segment of the same size and uniformity.
SubsetFamily compress(const SubsetFamily& family);

}  // namespace shadowlab
