#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace polybern {

// Exact scalar field used everywhere: arbitrary-precision rationals,
// kept canonical (positive denominator, lowest terms) by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! as an exact integer.
Integer factorial(std::size_t n);

/// Binomial coefficient C(n, m); zero outside 0 <= m <= n.
Integer binomial(long long n, long long m);

/// a^e for any integer e; e < 0 requires a != 0.
Rational rational_pow(const Rational& a, long long e);

/// Canonical string form: "p/q" with q > 0 and gcd(|p|, q) = 1, or "p" when q = 1.
std::string to_string(const Rational& r);

/// Parse "p" or "p/q" (canonicalizing as needed).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

} // namespace polybern
