#pragma once

#include "polybern/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace polybern {

// Polynomial over Rational in the indeterminate x, coeffs[j] = coefficient
// of x^j. Canonical form: no trailing zero coefficients; the zero polynomial
// holds no coefficients at all, so operator== decides exact equality.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * x^n
  static Polynomial monomial(std::size_t n, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; callers guard with is_zero().
  std::size_t degree() const;
  /// Coefficient of x^j (zero beyond the degree).
  Rational coeff(std::size_t j) const;
  Rational leading_coeff() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  /// Multiplication by x: exact coefficient shift.
  Polynomial times_x() const;
  /// d/dx.
  Polynomial derivative() const;
  /// p(x + y), exact Taylor shift.
  Polynomial shifted(const Rational& y) const;
  /// Evaluate at a rational point.
  Rational operator()(const Rational& x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Human-readable form, e.g. "x^2 - x + 1/6".
std::string to_string(const Polynomial& p);

} // namespace polybern
