#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "shadowlab/hypergraph.hpp"

namespace testing {

inline oracle::Graph to_oracle(const shadowlab::UniformHypergraph& h) {
  oracle::Graph g{h.n(), h.r(), {}};
  for (const auto& e : h.edges().sets()) g.edges.insert(e.vertices());
  return g;
}

inline shadowlab::UniformHypergraph from_oracle(const oracle::Graph& g) {
  std::vector<shadowlab::VertexSubset> edges;
  for (const auto& e : g.edges) edges.push_back(shadowlab::VertexSubset::from_vertices(e));
  return shadowlab::UniformHypergraph(g.n, g.r, edges);
}

/// Each r-subset of [n] present independently with probability p.
inline shadowlab::UniformHypergraph random_graph(std::mt19937_64& rng, int n, int r, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<shadowlab::Mask> edges;
  shadowlab::for_each_subset(shadowlab::prefix_mask(n), r, [&](shadowlab::Mask e) {
    if (coin(rng)) edges.push_back(e);
  });
  return shadowlab::UniformHypergraph::from_masks(n, r, std::move(edges));
}

/// Uniformly random `size`-subset of [n].
inline shadowlab::VertexSubset random_subset(std::mt19937_64& rng, int n, int size) {
  std::vector<int> all = oracle::range(1, n);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(size));
  return shadowlab::VertexSubset::from_vertices(all);
}

inline shadowlab::UniformHypergraph graph2(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<shadowlab::VertexSubset> sets;
  for (auto [u, v] : edges) sets.push_back({u, v});
  return shadowlab::UniformHypergraph(n, 2, sets);
}

}  // namespace testing
