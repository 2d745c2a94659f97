#ifndef WD_RATIONAL_HPP
#define WD_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wd {

// Exact rational scalar. mpq_class keeps values canonical (gcd 1, positive
// denominator) as long as every constructor path goes through the helpers
// below or GMP arithmetic.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Parses "p", "-p", "p/q" (optional surrounding whitespace). Throws ParseError.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// q^k for any integer k; q must be nonzero when k < 0.
Rational pow(const Rational& q, std::int64_t k);

bool is_integer(const Rational& q);

// Requires is_integer(q) and a value fitting in int64.
std::int64_t to_int64(const Rational& q);

Rational factorial(std::int64_t n);
Rational binomial(std::int64_t n, std::int64_t k);

// n (n-1) ... (n-k+1); defined for every integer n and k >= 0.
Rational falling_factorial(std::int64_t n, std::int64_t k);

} // namespace wd

#endif
