#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shadowlab/edge_index.hpp"
#include "shadowlab/hypergraph.hpp"
#include "shadowlab/numeric.hpp"
#include "shadowlab/parameters.hpp"

namespace shadowlab {

struct SearchOptions {
  int jobs = 1;
  /// Largest n accepted; 0 selects the default (9 for ell = 2, 7 otherwise).
  int vertex_limit = 0;
  /// Collect every extremal graph up to isomorphism instead of one.
  bool enumerate = false;
  /// Stop after this many frontier tasks; the result is then incomplete.
  std::optional<std::size_t> max_tasks;
};

int default_vertex_limit(int ell);

/// One subtree of the search, rooted at a canonical graph.
struct SearchTask {
  EdgeString root = 0;
  bool done = false;
  std::uint64_t nodes = 0;
  /// Fewest edges found in the subtree (only graphs below the seed bound, or
  /// at most the seed bound when enumerating).
  std::optional<std::uint64_t> best;
  /// Canonical strings achieving `best`, descending. At most one unless enumerating.
  std::vector<EdgeString> witnesses;
};

/// The split of the search tree into independent tasks. The split depends
/// only on the parameters and the enumerate flag, never on the thread count,
/// so that every reported number is schedule independent.
struct SearchFrontier {
  Parameters params;
  bool enumerate = false;
  bool feasible = false;
  /// Edge count of construct_upper (or C(n, ell) + 1 when it does not apply).
  std::uint64_t seed_bound = 0;
  std::optional<std::uint64_t> upper_bound;
  /// Canonical string of the construct_upper graph, when it applies.
  EdgeString seed_witness = 0;
  std::uint64_t expansion_nodes = 0;
  std::vector<SearchTask> tasks;

  std::size_t pending() const;
};

struct SearchResult {
  Parameters params;
  bool feasible = false;
  /// Meaningful only when feasible.
  std::uint64_t optimum = 0;
  /// Canonical forms, ordered by descending edge string.
  std::vector<UniformHypergraph> witnesses;
  Rational lower_bound_used;
  std::optional<std::uint64_t> upper_bound_used;
  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0;
  bool enumerated = false;
  /// False when max_tasks stopped the run early; optimum and witnesses are then provisional.
  bool complete = true;
};

/// Validates params against the limits and splits the tree. Throws
/// Error(LimitExceeded) beyond the vertex limit and Error(Precondition) on bad params.
SearchFrontier make_frontier(const Parameters& params, const SearchOptions& options);

/// Runs pending tasks (all of them, or up to options.max_tasks) on options.jobs threads.
void run_frontier(SearchFrontier& frontier, const SearchOptions& options);

/// Merges task results.
SearchResult summarize(const SearchFrontier& frontier);

/// Exact minimum number of edges for Problem 13 at (n, t, k, ell).
SearchResult min_edges(const Parameters& params, const SearchOptions& options = {});

/// min_edges with every extremal graph up to isomorphism.
SearchResult enumerate_extremal(const Parameters& params, SearchOptions options = {});

}  // namespace shadowlab
