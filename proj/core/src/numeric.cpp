#include "shadowlab/numeric.hpp"

#include <charconv>
#include <limits>

#include "shadowlab/errors.hpp"

namespace shadowlab {

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t binomial_u64(std::int64_t n, std::int64_t k) {
  const Integer value = binomial(n, k);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::Range, "binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                      ") does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

Rational gen_binomial_exact(const Rational& x, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "generalized binomial with k < 0");
  Rational result = 1;
  for (int i = 0; i < k; ++i) {
    result *= (x - i);
    result /= (i + 1);
  }
  return result;
}

Integer floor(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  Integer q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

Integer ceil(const Rational& x) {
  const Integer f = floor(x);
  return f == x ? f : f + 1;
}

bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

double to_double(const Rational& x) { return x.convert_to<double>(); }

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorKind::InvalidInput, "not a number: '" + std::string(whole) + "'");
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorKind::InvalidInput, "not a number: '" + std::string(whole) + "'");
  }
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash), whole);
    const Integer den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw Error(ErrorKind::InvalidInput, "not a number: '" + std::string(whole) + "'");
    }
    const Integer ip = int_part.empty() ? Integer(0) : parse_integer(int_part, whole);
    const Integer fp = frac_part.empty() ? Integer(0) : parse_integer(frac_part, whole);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    value = Rational(ip * scale + fp, scale);
  } else {
    value = Rational(parse_integer(text, whole));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& x) {
  if (is_integer(x)) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

}  // namespace shadowlab
