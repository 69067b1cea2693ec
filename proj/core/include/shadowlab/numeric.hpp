#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace shadowlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

/// Overflow-checked C(n, k) in 64 bits. Throws Error(Range) when it does not fit.
std::uint64_t binomial_u64(std::int64_t n, std::int64_t k);

/// x(x-1)...(x-k+1)/k! evaluated exactly; 1 when k == 0.
Rational gen_binomial_exact(const Rational& x, int k);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
bool is_integer(const Rational& x);
double to_double(const Rational& x);

/// Accepts "7", "-3", "3.25", "16/5". Decimals are converted exactly.
Rational parse_rational(std::string_view text);

/// "16/5" or "3" for integral values.
std::string to_string(const Rational& x);

}  // namespace shadowlab
