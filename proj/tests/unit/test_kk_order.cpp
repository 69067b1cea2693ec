#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/kk_order.hpp"
#include "shadowlab/numeric.hpp"

using namespace shadowlab;

namespace {

VertexSubset from(const oracle::Set& s) { return VertexSubset::from_vertices(s); }

/// Exhaustive minimum of |shadow(F, s)| over all m-subsets F of the k-sets of [n].
std::size_t exhaustive_min_shadow(int n, int k, int s, int m) {
  const std::vector<oracle::Set> all = oracle::subsets_of(oracle::range(1, n), k);
  std::vector<Mask> masks;
  for (const oracle::Set& a : all) masks.push_back(from(a).mask());
  std::size_t best = SIZE_MAX;
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.end() - m, pick.end(), true);
  do {
    std::vector<Mask> chosen;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (pick[i]) chosen.push_back(masks[i]);
    }
    best = std::min(best, shadow(SubsetFamily::from_masks(k, chosen), s).size());
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace

TEST_CASE("rank and unrank examples") {
  CHECK(antilex_rank({1, 2, 3}).value == 0);
  CHECK(antilex_rank({1, 2, 5}).value == 4);
  CHECK(antilex_unrank({4}, 3) == VertexSubset{1, 2, 5});
  CHECK(antilex_rank({2, 3, 4}).value == 3);
  CHECK(antilex_rank({2, 3, 4}) < antilex_rank({1, 2, 5}));
  CHECK(antilex_less({2, 3, 4}, {1, 2, 5}));
  try {
    antilex_rank({});
    FAIL("expected an invalid-input error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("rank counts the sets below in the definition-level order") {
  for (int k = 1; k <= 4; ++k) {
    const std::vector<oracle::Set> sorted = oracle::antilex_sorted(7, k);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      REQUIRE(antilex_rank(from(sorted[i])).value == i);
    }
  }
}

TEST_CASE("rank and unrank are inverse on k-sets of [12]") {
  for (int k = 1; k <= 6; ++k) {
    std::uint64_t expected = 0;
    for_each_subset(prefix_mask(12), k, [&](Mask m) {
      const VertexSubset a = VertexSubset::from_mask(m);
      const AntilexRank r = antilex_rank(a);
      REQUIRE(r.value == expected++);
      REQUIRE(antilex_unrank(r, k) == a);
    });
  }
}

TEST_CASE("rank comparison follows the max-difference rule on [8]") {
  for (int k = 1; k <= 4; ++k) {
    const std::vector<oracle::Set> all = oracle::subsets_of(oracle::range(1, 8), k);
    for (const oracle::Set& a : all) {
      for (const oracle::Set& b : all) {
        REQUIRE((antilex_rank(from(a)) < antilex_rank(from(b))) == oracle::antilex_less(a, b));
        REQUIRE(antilex_less(from(a), from(b)) == oracle::antilex_less(a, b));
      }
    }
  }
}

TEST_CASE("initial segments") {
  const SubsetFamily four = initial_segment(4, 3);
  CHECK(four.size() == 4);
  CHECK(four.support() == VertexSubset{1, 2, 3, 4});
  const SubsetFamily five = initial_segment(5, 3);
  CHECK(five.contains({1, 2, 5}));
  CHECK(five.size() == 5);
  CHECK(initial_segment(0, 3).empty());
  for (std::uint64_t m = 0; m < 30; ++m) {
    const SubsetFamily seg = initial_segment(m, 3);
    for (std::uint64_t i = 0; i < m; ++i) REQUIRE(seg.contains(antilex_unrank({i}, 3)));
    REQUIRE(is_initial_segment(seg));
  }
  CHECK_FALSE(is_initial_segment(SubsetFamily::from_sets(3, std::vector<VertexSubset>{{2, 3, 4}})));
}

TEST_CASE("shadow of an initial segment is an initial segment") {
  for (int k = 2; k <= 5; ++k) {
    const auto total = static_cast<std::uint64_t>(binomial(8, k));
    for (std::uint64_t m = 0; m <= total; ++m) {
      REQUIRE(is_initial_segment(shadow(initial_segment(m, k), k - 1)));
    }
  }
}

TEST_CASE("generalized binomial") {
  CHECK(gen_binomial(4, 2) == doctest::Approx(6));
  CHECK(gen_binomial(3.2, 2) == doctest::Approx(3.52));
  CHECK(gen_binomial(-1.5, 0) == 1);
  CHECK(gen_binomial(0.3, 0) == 1);
  CHECK(gen_binomial(7, 3) == doctest::Approx(oracle::binom(7, 3)));
}

TEST_CASE("lovasz_x solves C(x, k) = m") {
  CHECK(lovasz_x(4, 3) == 4.0);
  CHECK(lovasz_x(1, 3) == 3.0);
  const double x = lovasz_x(5, 3);
  CHECK(x == doctest::Approx(4.2145).epsilon(1e-4));
  CHECK(std::abs(oracle::binom(x, 3) - 5) <= 1e-9);
  // Closed form for k = 2: x = (1 + sqrt(1 + 8m)) / 2.
  for (std::uint64_t m = 1; m <= 200; ++m) {
    const double closed = (1 + std::sqrt(1 + 8.0 * static_cast<double>(m))) / 2;
    REQUIRE(lovasz_x(m, 2) == doctest::Approx(closed).epsilon(1e-12));
  }
  for (int k = 1; k <= 5; ++k) {
    for (std::uint64_t m = 1; m <= 70; ++m) {
      const double root = lovasz_x(m, k);
      REQUIRE(root >= k);
      REQUIRE(std::abs(oracle::binom(root, k) - static_cast<double>(m)) <= 1e-9 * std::max(1.0, double(m)));
    }
  }
  CHECK_THROWS_AS(lovasz_x(0, 3), Error);
}

TEST_CASE("cascade representation") {
  const auto c = kk_cascade(5, 3);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == std::pair{4, 3});
  CHECK(c[1] == std::pair{2, 2});
  for (std::uint64_t m = 1; m <= 200; ++m) {
    Integer sum = 0;
    int previous = 1000;
    for (auto [a, i] : kk_cascade(m, 4)) {
      REQUIRE(a < previous);
      REQUIRE(a >= i);
      previous = a;
      sum += binomial(a, i);
    }
    REQUIRE(sum == m);
  }
}

TEST_CASE("kk_min_shadow examples") {
  CHECK(kk_min_shadow(4, 3, 2) == 6);
  CHECK(kk_min_shadow(5, 3, 2) == 8);
  CHECK(kk_min_shadow(0, 3, 2) == 0);
  for (int k = 1; k <= 5; ++k) {
    for (int s = 1; s <= k; ++s) REQUIRE(kk_min_shadow(1, k, s) == static_cast<std::uint64_t>(binomial(k, s)));
  }
  CHECK_THROWS_AS(kk_min_shadow(3, 3, 0), Error);
  CHECK_THROWS_AS(kk_min_shadow(3, 3, 4), Error);
}

TEST_CASE("kk_min_shadow equals the shadow of the initial segment") {
  for (int k = 1; k <= 5; ++k) {
    for (int s = 1; s <= k; ++s) {
      for (std::uint64_t m = 0; m <= (k == 1 ? 64u : 80u); ++m) {
        REQUIRE(kk_min_shadow(m, k, s) == shadow(initial_segment(m, k), s).size());
      }
    }
  }
}

TEST_CASE("kk_min_shadow is the true minimum for n = 6, k = 3, s = 2") {
  for (int m = 1; m <= 6; ++m) {
    CHECK(kk_min_shadow(static_cast<std::uint64_t>(m), 3, 2) == exhaustive_min_shadow(6, 3, 2, m));
  }
}

TEST_CASE("Lovasz bound never exceeds the discrete minimum") {
  for (int k = 1; k <= 5; ++k) {
    for (std::uint64_t m = 1; m <= 70; ++m) {
      const double x = lovasz_x(m, k);
      for (int s = 1; s < k; ++s) {
        REQUIRE(std::ceil(gen_binomial(x, s) - 1e-9) <= static_cast<double>(kk_min_shadow(m, k, s)));
      }
    }
  }
}

TEST_CASE("compress") {
  const SubsetFamily seg = initial_segment(7, 3);
  CHECK(compress(seg) == seg);
  const SubsetFamily f = SubsetFamily::from_sets(3, std::vector<VertexSubset>{{2, 3, 4}, {1, 3, 5}});
  CHECK(compress(f) == SubsetFamily::from_sets(3, std::vector<VertexSubset>{{1, 2, 3}, {1, 2, 4}}));
  CHECK_THROWS_AS(SubsetFamily::from_sets(std::vector<VertexSubset>{{1, 2}, {1, 2, 3}}), Error);
}

TEST_CASE("compression never grows the shadow (all families of up to 5 triples on [7])") {
  std::vector<Mask> triples;
  for_each_subset(prefix_mask(7), 3, [&](Mask m) { triples.push_back(m); });
  std::size_t checked = 0;
  for (int size = 1; size <= 5; ++size) {
    std::vector<bool> pick(triples.size(), false);
    std::fill(pick.end() - size, pick.end(), true);
    const std::size_t target = shadow(initial_segment(static_cast<std::uint64_t>(size), 3), 2).size();
    do {
      std::vector<Mask> chosen;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        if (pick[i]) chosen.push_back(triples[i]);
      }
      const SubsetFamily f = SubsetFamily::from_masks(3, chosen);
      REQUIRE(compress(f).size() == f.size());
      REQUIRE(target <= shadow(f, 2).size());
      ++checked;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  CHECK(checked == 35 + 595 + 6545 + 52360 + 324632);
}
