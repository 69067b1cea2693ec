#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/shifting.hpp"

using namespace shadowlab;
using testing::graph2;

namespace {

/// Every 2-graph on n vertices, by edge bitmask.
template <class Fn>
void for_each_graph(int n, Fn&& fn) {
  std::vector<Mask> slots;
  for_each_subset(prefix_mask(n), 2, [&](Mask e) { slots.push_back(e); });
  for (std::uint32_t g = 0; g < (1u << slots.size()); ++g) {
    std::vector<Mask> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((g >> i) & 1) edges.push_back(slots[i]);
    }
    fn(UniformHypergraph::from_masks(n, 2, std::move(edges)));
  }
}

/// Reference rule, edge by edge on vertex lists.
oracle::Graph reference_shift(const oracle::Graph& g, int i, int j) {
  oracle::Graph out{g.n, g.r, {}};
  for (const oracle::Set& e : g.edges) {
    const bool has_i = std::binary_search(e.begin(), e.end(), i);
    const bool has_j = std::binary_search(e.begin(), e.end(), j);
    if (has_j && !has_i) {
      oracle::Set moved;
      for (int v : e) moved.push_back(v == j ? i : v);
      std::sort(moved.begin(), moved.end());
      if (!g.has(moved)) {
        out.edges.insert(moved);
        continue;
      }
    }
    out.edges.insert(e);
  }
  return out;
}

}  // namespace

TEST_CASE("shift examples") {
  CHECK(shift(graph2(3, {{2, 3}}), 1, 3) == graph2(3, {{1, 2}}));
  const UniformHypergraph blocked = graph2(3, {{2, 3}, {1, 2}});
  CHECK(shift(blocked, 1, 3) == blocked);
  std::size_t moved = 99;
  shift(blocked, 1, 3, moved);
  CHECK(moved == 0);
}

TEST_CASE("shift needs i < j inside the vertex range") {
  const UniformHypergraph h = graph2(4, {{1, 2}});
  try {
    shift(h, 3, 2);
    FAIL("expected an order error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Order);
  }
  CHECK_THROWS_AS(shift(h, 2, 2), Error);
  CHECK_THROWS_AS(shift(h, 1, 5), Error);
}

TEST_CASE("shift agrees with the reference rule") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 500; ++round) {
    const int r = 2 + round % 3;
    const UniformHypergraph h = testing::random_graph(rng, 7, r, 0.35);
    const int i = 1 + static_cast<int>(rng() % 6);
    const int j = i + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(7 - i));
    REQUIRE(testing::to_oracle(shift(h, i, j)).edges == reference_shift(testing::to_oracle(h), i, j).edges);
  }
}

TEST_CASE("shift is idempotent and preserves the edge count (all 2-graphs on up to 6 vertices)") {
  for (int n = 2; n <= 6; ++n) {
    for_each_graph(n, [&](const UniformHypergraph& h) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const UniformHypergraph once = shift(h, i, j);
          REQUIRE(once.edge_count() == h.edge_count());
          REQUIRE(shift(once, i, j) == once);
        }
      }
    });
  }
}

TEST_CASE("shifting never lowers a clique count away from j (all 2-graphs on up to 5 vertices)") {
  for (int n = 3; n <= 5; ++n) {
    for_each_graph(n, [&](const UniformHypergraph& h) {
      const std::vector<std::uint64_t> before = clique_degrees(h, 3);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const std::vector<std::uint64_t> after = clique_degrees(shift(h, i, j), 3);
          for (int u = 1; u <= n; ++u) {
            if (u != j) REQUIRE(after[u - 1] >= before[u - 1]);
          }
        }
      }
    });
  }
}

TEST_CASE("shifting never lowers a clique count away from j (random, up to 7 vertices)") {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 10000; ++round) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const UniformHypergraph h = testing::random_graph(rng, n, 2, 0.2 + 0.6 * double(rng() % 100) / 100);
    const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    const int j = i + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i));
    int u = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (u == j) u = i;
    const oracle::Graph before = testing::to_oracle(h);
    const oracle::Graph after = reference_shift(before, i, j);
    REQUIRE(after.clique_count(u, 3) >= before.clique_count(u, 3));
    REQUIRE(cliques_containing(shift(h, i, j), u, 3).size() >= cliques_containing(h, u, 3).size());
  }
}
