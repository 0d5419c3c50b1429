#pragma once

#include "polybern/umbral.hpp"

#include <cstddef>
#include <string>

namespace polybern {

enum class FamilyKind { PolyBernoulli, HigherBernoulli, Euler, FrobeniusEuler };

// Parameters selecting one concrete Appell family.
struct FamilyTag {
  FamilyKind kind = FamilyKind::PolyBernoulli;
  long long k = 1;     // poly-Bernoulli index (any integer)
  std::size_t r = 0;   // order of the Bernoulli/Euler/Frobenius-Euler family
  Rational lambda = 0; // Frobenius-Euler parameter, != 1

  static FamilyTag poly_bernoulli(long long k);
  static FamilyTag higher_bernoulli(std::size_t r);
  static FamilyTag euler(std::size_t r);
  /// Throws std::invalid_argument when lambda == 1.
  static FamilyTag frobenius_euler(std::size_t r, const Rational& lambda);

  std::string label() const;
};

/// Stirling number of the second kind S_2(n, m) by the triangular recurrence
/// S_2(n, m) = m S_2(n-1, m) + S_2(n-1, m-1); zero outside 0 <= m <= n.
Integer stirling2(long long n, long long m);

/// n-th ordinary Bernoulli number: EGF coefficient n of t/(e^t - 1).
Rational bernoulli_number(std::size_t n);

/// Poly-Bernoulli number B_n^{(k)} = B_n^{(k)}(0)
///   = sum_{m=0}^{n} (-1)^{n-m} m! S_2(n, m) / (m+1)^k.
Rational poly_bernoulli_number(std::size_t n, long long k);

/// Poly-Bernoulli polynomial B_n^{(k)}(x) via the Stirling closed form:
/// coefficient of x^l is
///   sum_{m=0}^{n-l} (-1)^{n-m-l} / (m+1)^k * C(n,l) * m! * S_2(n-l, m).
Polynomial poly_bernoulli_polynomial(std::size_t n, long long k);

/// The x-free generating factor of the tagged family, truncated at cap.
Series family_gf(const FamilyTag& tag, std::size_t cap);

/// The tagged family as an Appell pair (g(t), t) at truncation cap,
/// where g is the inverse of the generating factor.
AppellFamily make_appell_family(const FamilyTag& tag, std::size_t cap);

/// Degree-n member of the tagged family through the generic Appell route
/// (g^{-1} applied to x^n); monic of degree n.
Polynomial family_polynomial(const FamilyTag& tag, std::size_t n);

/// Falling factorial (a)_n = a(a-1)...(a-n+1), (a)_0 = 1.
Rational falling_factorial(const Rational& a, std::size_t n);

} // namespace polybern
