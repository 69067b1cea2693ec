#include "shadowlab/parameters.hpp"

#include "shadowlab/errors.hpp"

namespace shadowlab {

void Parameters::validate() const {
  if (n < 1) throw Error(ErrorKind::Precondition, "n must be at least 1");
  if (ell < 2) throw Error(ErrorKind::Precondition, "ell must be at least 2");
  if (k <= ell) throw Error(ErrorKind::Precondition, "k must exceed ell");
  if (t < Rational(k - 1)) throw Error(ErrorKind::Precondition, "t must be at least k-1");
}

int Parameters::t_int() const {
  if (!t_is_integer()) {
    throw Error(ErrorKind::Precondition, "this operation needs an integer t, got " + shadowlab::to_string(t));
  }
  return static_cast<int>(boost::multiprecision::numerator(t));
}

std::string Parameters::to_string() const {
  return "(n=" + std::to_string(n) + ", t=" + shadowlab::to_string(t) + ", k=" + std::to_string(k) +
         ", ell=" + std::to_string(ell) + ")";
}

}  // namespace shadowlab
