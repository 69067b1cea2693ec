#include <doctest.h>

#include <filesystem>

#include "helpers.hpp"
#include "oracles.hpp"
#include "shadowlab/canonical.hpp"
#include "shadowlab/clique_degree.hpp"
#include "shadowlab/constructions.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/io/checkpoint.hpp"
#include "shadowlab/search.hpp"

using namespace shadowlab;
using testing::graph2;

namespace {

bool edge_less(const UniformHypergraph& a, const UniformHypergraph& b) {
  return std::lexicographical_compare(a.edges().masks().begin(), a.edges().masks().end(), b.edges().masks().begin(),
                                      b.edges().masks().end());
}

int threshold_of(const Parameters& params) { return static_cast<int>(clique_threshold(params)); }

/// Witness classes of the oracle, as sorted canonical forms.
std::vector<UniformHypergraph> oracle_classes(const oracle::MinResult& m) {
  std::vector<UniformHypergraph> out;
  for (const oracle::Graph& g : m.classes) out.push_back(canonical_form(testing::from_oracle(g)));
  std::sort(out.begin(), out.end(), edge_less);
  return out;
}

std::vector<UniformHypergraph> sorted(std::vector<UniformHypergraph> v) {
  std::sort(v.begin(), v.end(), edge_less);
  return v;
}

}  // namespace

TEST_CASE("min_edges examples") {
  CHECK(min_edges(Parameters{3, 2, 3, 2}).optimum == 3);
  const SearchResult six = min_edges(Parameters{6, 2, 3, 2});
  CHECK(six.feasible);
  CHECK(six.optimum == 6);
  REQUIRE(six.witnesses.size() == 1);
  CHECK(isomorphic(six.witnesses[0], graph2(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}})));
  const SearchResult seven = min_edges(Parameters{7, 2, 3, 2});
  CHECK(seven.optimum == 8);
  CHECK(seven.lower_bound_used == Rational(7));
  CHECK(seven.upper_bound_used == 8u);
  CHECK(seven.complete);
}

TEST_CASE("infeasible and refused searches") {
  const SearchResult small = min_edges(Parameters{2, 2, 3, 2});
  CHECK_FALSE(small.feasible);
  CHECK(small.witnesses.empty());
  try {
    min_edges(Parameters{10, 2, 3, 2});
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LimitExceeded);
    CHECK(std::string(e.what()).find("limit") != std::string::npos);
  }
  SearchOptions wide;
  wide.vertex_limit = 12;
  CHECK_THROWS_AS(min_edges(Parameters{12, 2, 3, 2}, wide), Error);  // C(12,2) > 64 edge slots
  CHECK_THROWS_AS(min_edges(Parameters{6, 2, 1, 2}), Error);
}

TEST_CASE("optima and extremal families match exhaustive search for graphs") {
  for (int t = 2; t <= 3; ++t) {
    for (int k = 3; k <= t + 1; ++k) {
      for (int n = t + 1; n <= 7; ++n) {
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(k);
        const Parameters params{n, t, k, 2};
        const oracle::MinResult expected = oracle::exhaustive_min(n, 2, k, threshold_of(params));
        const SearchResult got = enumerate_extremal(params);
        REQUIRE(got.feasible == (expected.optimum >= 0));
        if (!got.feasible) continue;
        CHECK(got.optimum == static_cast<std::uint64_t>(expected.optimum));
        CHECK(sorted(got.witnesses) == oracle_classes(expected));
        CHECK(min_edges(params).optimum == got.optimum);
      }
    }
  }
}

TEST_CASE("optima and extremal families match exhaustive search for 3-graphs") {
  for (int n = 4; n <= 6; ++n) {
    CAPTURE(n);
    const Parameters params{n, 3, 4, 3};
    const oracle::MinResult expected = oracle::exhaustive_min(n, 3, 4, threshold_of(params));
    const SearchResult got = enumerate_extremal(params);
    REQUIRE(got.feasible);
    CHECK(got.optimum == static_cast<std::uint64_t>(expected.optimum));
    CHECK(sorted(got.witnesses) == oracle_classes(expected));
  }
}

TEST_CASE("non-integer t matches exhaustive search") {
  const Parameters params{6, Rational(16, 5), 3, 2};
  CHECK(threshold_of(params) == 4);
  const oracle::MinResult expected = oracle::exhaustive_min(6, 2, 3, 4);
  const SearchResult got = enumerate_extremal(params);
  CHECK(got.optimum == static_cast<std::uint64_t>(expected.optimum));
  CHECK(sorted(got.witnesses) == oracle_classes(expected));
}

TEST_CASE("extremal families at small n") {
  const SearchResult seven = enumerate_extremal(Parameters{7, 2, 3, 2});
  REQUIRE(seven.witnesses.size() == 1);
  CHECK(isomorphic(seven.witnesses[0],
                   graph2(7, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}})));
  for (int ell = 2; ell <= 3; ++ell) {
    const SearchResult single = enumerate_extremal(Parameters{4, 3, 4, ell});
    REQUIRE(single.witnesses.size() == 1);
    CHECK(single.witnesses[0] == UniformHypergraph::complete(4, ell));
  }
}

TEST_CASE("witnesses satisfy the condition and sit between the bounds") {
  for (int ell = 2; ell <= 3; ++ell) {
    for (int n = 4; n <= (ell == 2 ? 9 : 7); ++n) {
      const Parameters params{n, 3, 4, ell};
      const SearchResult result = enumerate_extremal(params);
      REQUIRE(result.feasible);
      CHECK(result.lower_bound_used <= Rational(result.optimum));
      CHECK(result.optimum <= construct_upper(n, 3, ell).edge_count());
      for (const UniformHypergraph& w : result.witnesses) {
        CHECK(w.edge_count() == result.optimum);
        CHECK(check_condition(w, params).satisfied);
        CHECK(canonical_form(w) == w);
      }
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  for (const Parameters& params : {Parameters{8, 2, 3, 2}, Parameters{9, 3, 4, 2}, Parameters{6, 3, 4, 3}}) {
    for (bool enumerate : {false, true}) {
      SearchOptions one;
      one.enumerate = enumerate;
      SearchOptions four = one;
      four.jobs = 4;
      const SearchResult a = min_edges(params, one);
      const SearchResult b = min_edges(params, four);
      CHECK(a.optimum == b.optimum);
      CHECK(a.witnesses == b.witnesses);
      CHECK(a.nodes_explored == b.nodes_explored);
    }
  }
}

TEST_CASE("an interrupted search resumes from its checkpoint") {
  const Parameters params{9, 3, 4, 2};
  SearchOptions options;
  options.enumerate = true;
  const SearchResult full = min_edges(params, options);

  SearchFrontier frontier = make_frontier(params, options);
  REQUIRE(frontier.tasks.size() > 4);
  SearchOptions partial = options;
  partial.max_tasks = 3;
  run_frontier(frontier, partial);
  CHECK(frontier.pending() == frontier.tasks.size() - 3);
  CHECK_FALSE(summarize(frontier).complete);

  const std::filesystem::path path = std::filesystem::temp_directory_path() / "shadowlab_test_frontier.json";
  io::save_frontier(frontier, path);
  SearchFrontier resumed = io::load_frontier(path);
  std::filesystem::remove(path);
  run_frontier(resumed, options);
  const SearchResult after = summarize(resumed);
  CHECK(after.complete);
  CHECK(after.optimum == full.optimum);
  CHECK(after.witnesses == full.witnesses);
  CHECK(after.nodes_explored == full.nodes_explored);
}

TEST_CASE("construct_upper examples") {
  const UniformHypergraph six = construct_upper(6, 2, 2);
  CHECK(six.edge_count() == 6);
  CHECK(isomorphic(six, graph2(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}})));
  const UniformHypergraph seven = construct_upper(7, 2, 2);
  CHECK(seven.edge_count() == 8);
  CHECK(2 * seven.edge_count() == 14 + 2);
  const UniformHypergraph eleven = construct_upper(11, 3, 2);
  CHECK(eleven.edge_count() == 18);
  CHECK(has_isolated_clique(eleven, 4));
  CHECK(UniformHypergraph::complete(4, 3) == construct_upper(4, 3, 3));
  CHECK_THROWS_AS(construct_upper(2, 2, 2), Error);
}

TEST_CASE("construct_upper satisfies the condition for every k") {
  for (int ell = 2; ell <= 3; ++ell) {
    for (int t = ell; t <= 5; ++t) {
      for (int n = t + 1; n <= 20; ++n) {
        const UniformHypergraph h = construct_upper(n, t, ell);
        CHECK(h.n() == n);
        for (int k = ell + 1; k <= t + 1; ++k) CHECK(check_condition(h, Parameters{n, t, k, ell}).satisfied);
      }
    }
  }
}

TEST_CASE("counterexample family") {
  const UniformHypergraph c4 = construct_counterexample(2, 1);
  CHECK(c4.edge_count() == 4);
  CHECK(clique_degrees(c4, 3) == std::vector<std::uint64_t>(4, 0));
  const UniformHypergraph k6 = construct_counterexample(4, 1);
  CHECK(k6.edge_count() == 12);
  const oracle::Graph g6 = testing::to_oracle(k6);
  for (int v = 1; v <= 6; ++v) {
    CHECK(g6.degree(v) == 4);
    CHECK(g6.clique_count(v, 3) == 4);
  }
  const oracle::Graph g8 = testing::to_oracle(construct_counterexample(6, 1));
  for (int v = 1; v <= 8; ++v) CHECK(g8.clique_count(v, 3) == 12);
  CHECK(construct_counterexample(4, 3).edge_count() == 36);
  CHECK_THROWS_AS(construct_counterexample(3, 1), Error);
  CHECK_THROWS_AS(construct_counterexample(0, 1), Error);
  CHECK_THROWS_AS(construct_counterexample(4, 0), Error);
}

TEST_CASE("has_isolated_clique examples") {
  CHECK(has_isolated_clique(graph2(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}), 3));
  CHECK_FALSE(has_isolated_clique(graph2(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}), 3));
  CHECK(has_isolated_clique(enumerate_extremal(Parameters{7, 2, 3, 2}).witnesses.at(0), 3));
  CHECK(has_isolated_clique(graph2(4, {{1, 2}, {2, 3}, {1, 3}}), 3));
  CHECK_FALSE(has_isolated_clique(graph2(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}}), 3));
}
