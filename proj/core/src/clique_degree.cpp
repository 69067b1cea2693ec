#include "shadowlab/clique_degree.hpp"

#include <stdexcept>

#include "shadowlab/errors.hpp"
#include "shadowlab/kk_order.hpp"

namespace shadowlab {

Integer clique_threshold(const Parameters& params) {
  return ceil(gen_binomial_exact(params.t, params.k - 1));
}

std::uint64_t min_feasible_degree(const Parameters& params) {
  const Integer needed = clique_threshold(params);
  if (needed <= 0) return 0;
  if (needed > std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorKind::Range, "threshold overflow");
  return kk_min_shadow(static_cast<std::uint64_t>(needed), params.k - 1, params.ell - 1);
}

ConditionCheck check_condition(const UniformHypergraph& h, const Parameters& params) {
  if (h.r() != params.ell) {
    throw Error(ErrorKind::Uniformity, "graph is " + std::to_string(h.r()) + "-uniform but ell = " +
                                           std::to_string(params.ell));
  }
  ConditionCheck check;
  check.profile.counts = clique_degrees(h, params.k);
  check.profile.t = params.t;
  check.profile.k = params.k;
  check.profile.ell = params.ell;
  check.profile.threshold = clique_threshold(params);
  for (int v = 1; v <= h.n(); ++v) {
    if (Integer(check.profile.counts[v - 1]) < check.profile.threshold) check.deficient.push_back(v);
  }
  check.satisfied = check.deficient.empty();
  return check;
}

Rational edge_lower_bound(int n, const Rational& t, int ell) {
  return Rational(n, ell) * gen_binomial_exact(t, ell - 1);
}

Rational excess_degree_sum(const UniformHypergraph& h, const Rational& t) {
  return Rational(h.r()) * Rational(h.edge_count()) - Rational(h.n()) * gen_binomial_exact(t, h.r() - 1);
}

Rational excess_bound(const Rational& t, int ell) {
  return (t + 1) * (t + 1) / 4 * gen_binomial_exact(t - 1, ell - 2);
}

Integer binomial_telescope(std::int64_t big_n, std::int64_t k, std::int64_t r) {
  if (r < 0 || r > big_n || k < 1) {
    throw Error(ErrorKind::InvalidInput, "binomial_telescope needs 0 <= r <= N and k >= 1");
  }
  Integer sum = 0;
  for (std::int64_t i = 1; i <= r; ++i) sum += binomial(big_n - i, k - 1);
  if (sum != binomial(big_n, k) - binomial(big_n - r, k)) {
    throw std::logic_error("binomial telescope identity failed");
  }
  return sum;
}

LinkSetFamily complete_link_sets(const UniformHypergraph& h, VertexSubset y, VertexSubset ground, int size) {
  h.check_within(y);
  h.check_within(ground);
  if (y.intersects(ground)) throw Error(ErrorKind::Overlap, "Y meets the ground set");
  if (y.size() >= h.r()) throw Error(ErrorKind::Uniformity, "|Y| must be below the uniformity");
  const int link_r = h.r() - y.size();
  LinkSetFamily out{SubsetFamily(size < 0 ? 0 : size), false};
  if (size < link_r) {
    out.below_link_uniformity = true;
    return out;
  }
  const UniformHypergraph l = link(h, y, ground);
  out.sets = all_cliques(l, size, ground);
  return out;
}

SubsetFamily clique_extensions(const UniformHypergraph& h, VertexSubset x, VertexSubset ground, int k) {
  h.check_within(x);
  h.check_within(ground);
  if (x.intersects(ground)) throw Error(ErrorKind::Overlap, "X meets the ground set");
  if (x.size() > k) throw Error(ErrorKind::InvalidInput, "|X| exceeds the clique order");
  std::vector<Mask> out;
  if (!is_clique(h, x)) return SubsetFamily(k - x.size());
  for_each_subset(ground.mask(), k - x.size(), [&](Mask t) {
    if (is_clique(h, VertexSubset::from_mask(t | x.mask()))) out.push_back(t);
  });
  return SubsetFamily::from_masks(k - x.size(), std::move(out));
}

DegreePartition degree_partition(const UniformHypergraph& h, const Parameters& params) {
  DegreePartition out;
  out.min_degree = min_feasible_degree(params);
  Mask v1 = 0;
  for (int v = 1; v <= h.n(); ++v) {
    if (degree(h, v) == out.min_degree) v1 |= vertex_bit(v);
  }
  out.v1 = VertexSubset::from_mask(v1);
  out.v2 = h.vertex_set() - out.v1;
  return out;
}

}  // namespace shadowlab
