#pragma once

#include <string>

#include "shadowlab/numeric.hpp"

namespace shadowlab {

/// The instance (n, t, k, ell): ell-graphs on n vertices where every vertex
/// must lie in at least C(t, k-1) copies of the complete ell-graph on k vertices.
struct Parameters {
  int n = 1;
  Rational t = 2;
  int k = 3;
  int ell = 2;

  /// Throws Error(Precondition) unless k > ell >= 2, t >= k-1 and n >= 1.
  void validate() const;

  bool t_is_integer() const { return is_integer(t); }
  /// t as an int; throws Error(Precondition) for non-integer t.
  int t_int() const;
  std::string to_string() const;

  friend bool operator==(const Parameters&, const Parameters&) = default;
};

}  // namespace shadowlab
