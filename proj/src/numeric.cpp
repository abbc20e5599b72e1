#include "rectwalk/numeric.hpp"

#include <stdexcept>

namespace rectwalk {

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::string to_decimal(const Rational& value, int digits) {
    if (digits < 0) throw std::invalid_argument("to_decimal: negative digit count");
    BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    const bool negative = num < 0;
    if (negative) num = -num;

    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * scale;
    BigInt q = scaled / den;
    const BigInt rem = scaled % den;
    if (rem * 2 >= den) ++q;

    std::string s = q.str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) {
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    if (negative && q != 0) s.insert(0, 1, '-');
    return s;
}

std::string to_string(const Rational& value) {
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

}  // namespace rectwalk
