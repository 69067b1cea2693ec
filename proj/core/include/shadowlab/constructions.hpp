#pragma once

#include "shadowlab/hypergraph.hpp"

namespace shadowlab {

/// With n = q(t+1) + rem, 0 <= rem < t+1: q-1 disjoint copies of K_{t+1}^ell
/// followed by two copies sharing t+1-rem vertices. Satisfies the clique-degree
/// condition for every k <= t+1. Throws Error(Precondition) when n < t+1.
UniformHypergraph construct_upper(int n, int t, int ell);

/// `copies` disjoint copies of K_{tceil+2} minus the perfect matching
/// {1,2}, {3,4}, ... Throws Error(Precondition) for odd tceil, tceil < 2 or copies < 1.
UniformHypergraph construct_counterexample(int tceil, int copies);

/// True iff some connected component has exactly `size` vertices and is complete.
bool has_isolated_clique(const UniformHypergraph& h, int size);

}  // namespace shadowlab
