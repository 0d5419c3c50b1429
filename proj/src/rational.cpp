#include "polybern/rational.hpp"

#include <stdexcept>

namespace polybern {

Integer factorial(std::size_t n) {
  Integer r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(long long n, long long m) {
  if (n < 0 || m < 0 || m > n) return 0;
  if (m > n - m) m = n - m;
  Integer r = 1;
  // r stays integral at every step: after multiplying by (n-m+i) the product
  // of i consecutive integers is divisible by i!.
  for (long long i = 1; i <= m; ++i) {
    r *= n - m + i;
    r /= i;
  }
  return r;
}

Rational rational_pow(const Rational& a, long long e) {
  if (e == 0) return 1;
  if (a == 0 && e < 0) throw std::domain_error("rational_pow: 0 raised to a negative power");
  const auto mag = static_cast<unsigned>(e < 0 ? -e : e);
  using boost::multiprecision::pow;
  Integer p = pow(numerator(a), mag);
  Integer q = pow(denominator(a), mag);
  if (e < 0) {
    p.swap(q);
    if (q < 0) { p = -p; q = -q; } // denominator must stay positive
  }
  return Rational(p, q);
}

std::string to_string(const Rational& r) {
  const Integer& num = numerator(r);
  const Integer& den = denominator(r);
  std::string s = num.str();
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty input");
  for (char c : text) {
    const bool ok = (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '/';
    if (!ok) throw std::invalid_argument("parse_rational: invalid character in \"" + std::string(text) + "\"");
  }
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: cannot parse \"" + std::string(text) + "\"");
  }
}

} // namespace polybern
