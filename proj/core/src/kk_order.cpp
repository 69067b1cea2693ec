#include "shadowlab/kk_order.hpp"

#include <cmath>

#include "shadowlab/errors.hpp"
#include "shadowlab/numeric.hpp"

namespace shadowlab {

AntilexRank antilex_rank(VertexSubset a) {
  if (a.empty()) throw Error(ErrorKind::InvalidInput, "antilex rank of the empty set");
  std::uint64_t rank = 0;
  int i = 1;
  for (Vertex v : a) rank += binomial_u64(v - 1, i++);
  return {rank};
}

VertexSubset antilex_unrank(AntilexRank m, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidInput, "antilex unrank needs k >= 1");
  std::uint64_t rest = m.value;
  Mask bits = 0;
  for (int i = k; i >= 1; --i) {
    // Largest c with C(c, i) <= rest; the i-th element is c + 1.
    int c = i - 1;
    while (binomial(c + 1, i) <= rest) {
      ++c;
      if (c >= kMaxVertices) throw Error(ErrorKind::Range, "antilex unrank beyond the vertex limit");
    }
    rest -= binomial_u64(c, i);
    bits |= vertex_bit(c + 1);
  }
  return VertexSubset::from_mask(bits);
}

bool antilex_less(VertexSubset a, VertexSubset b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidInput, "antilex comparison of different sizes");
  if (a == b) return false;
  return (a - b).max() < (b - a).max();
}

SubsetFamily initial_segment(std::uint64_t m, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "initial segment needs k >= 0");
  if (m == 0) return SubsetFamily(k);
  int ground = k;
  while (binomial(ground, k) < m) {
    if (++ground > kMaxVertices) throw Error(ErrorKind::Range, "initial segment beyond the vertex limit");
  }
  std::vector<Mask> sets;
  sets.reserve(m);
  for_each_subset(prefix_mask(ground), k, [&](Mask s) {
    sets.push_back(s);
    return sets.size() < m;
  });
  return SubsetFamily::from_masks(k, std::move(sets));
}

bool is_initial_segment(const SubsetFamily& family) {
  return family == initial_segment(family.size(), family.set_size());
}

double gen_binomial(double x, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "generalized binomial with k < 0");
  double result = 1.0;
  for (int i = 0; i < k; ++i) result = result * (x - i) / (i + 1);
  return result;
}

double lovasz_x(std::uint64_t m, int k) {
  if (m < 1) throw Error(ErrorKind::InvalidInput, "lovasz_x needs m >= 1");
  if (k < 1) throw Error(ErrorKind::InvalidInput, "lovasz_x needs k >= 1");
  for (std::int64_t x = k;; ++x) {
    const Integer c = binomial(x, k);
    if (c == m) return static_cast<double>(x);
    if (c > m) break;
  }
  double lo = k;
  double hi = static_cast<double>(k) + static_cast<double>(m);
  const double target = static_cast<double>(m);
  for (int iter = 0; iter < 200 && hi - lo > 0; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    (gen_binomial(mid, k) < target ? lo : hi) = mid;
  }
  return std::abs(gen_binomial(lo, k) - target) <= std::abs(gen_binomial(hi, k) - target) ? lo : hi;
}

std::vector<std::pair<int, int>> kk_cascade(std::uint64_t m, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidInput, "cascade needs k >= 1");
  std::vector<std::pair<int, int>> terms;
  Integer rest = m;
  for (int i = k; i >= 1 && rest > 0; --i) {
    int a = i;
    while (binomial(a + 1, i) <= rest) ++a;
    terms.emplace_back(a, i);
    rest -= binomial(a, i);
  }
  return terms;
}

std::uint64_t kk_min_shadow(std::uint64_t m, int k, int s) {
  if (k < 1) throw Error(ErrorKind::InvalidInput, "kk_min_shadow needs k >= 1");
  if (s < 1 || s > k) {
    throw Error(ErrorKind::InvalidTarget, "shadow level " + std::to_string(s) + " not in 1.." + std::to_string(k));
  }
  if (s == k || m == 0) return m;
  Integer total = 0;
  for (auto [a, i] : kk_cascade(m, k)) {
    const int lower = i - (k - s);
    if (lower >= 0) total += binomial(a, lower);
  }
  if (total > std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorKind::Range, "shadow size overflow");
  return static_cast<std::uint64_t>(total);
}

SubsetFamily compress(const SubsetFamily& family) { return initial_segment(family.size(), family.set_size()); }

}  // namespace shadowlab
