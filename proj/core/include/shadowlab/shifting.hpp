#pragma once

#include <cstddef>

#include "shadowlab/hypergraph.hpp"

namespace shadowlab {

/// S_{i,j}: every edge e with j ∈ e, i ∉ e and (e - j + i) ∉ E(H) is
/// replaced by e - j + i. Needs 1 <= i < j <= n; edge count is preserved.
UniformHypergraph shift(const UniformHypergraph& h, Vertex i, Vertex j);

/// As shift(), also reporting how many edges moved.
UniformHypergraph shift(const UniformHypergraph& h, Vertex i, Vertex j, std::size_t& moved);

}  // namespace shadowlab
