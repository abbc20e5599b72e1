#ifndef RECTWALK_NUMERIC_HPP
#define RECTWALK_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rectwalk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// binom(n, k) by the multiplicative formula; 0 when k < 0 or k > n.
BigInt binomial(long long n, long long k);

/// Exact decimal rendering rounded half away from zero, e.g. "13.494513031550".
std::string to_decimal(const Rational& value, int digits);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace rectwalk

#endif
