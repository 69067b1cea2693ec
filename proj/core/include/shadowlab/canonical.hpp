#pragma once

#include "shadowlab/edge_index.hpp"
#include "shadowlab/hypergraph.hpp"

namespace shadowlab {

/// The largest edge string over all relabelings of the vertices. Two graphs
/// are isomorphic iff their canonical strings agree.
EdgeString canonical_string(EdgeString s, const EdgeIndex& index);

/// True iff no relabeling gives a larger edge string.
bool is_canonical(EdgeString s, const EdgeIndex& index);

/// The relabeled graph realizing canonical_string.
UniformHypergraph canonical_form(const UniformHypergraph& h);

bool isomorphic(const UniformHypergraph& a, const UniformHypergraph& b);

}  // namespace shadowlab
