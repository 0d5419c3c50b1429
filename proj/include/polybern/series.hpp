#pragma once

#include "polybern/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polybern {

// Order of a formal power series: index of the first nonzero EGF coefficient.
// The zero series has infinite order, encoded as an empty optional.
struct SeriesOrder {
  std::optional<std::size_t> value;

  bool finite() const { return value.has_value(); }
  bool invertible() const { return value && *value == 0; }
  bool delta() const { return value && *value == 1; }

  friend bool operator==(const SeriesOrder&, const SeriesOrder&) = default;
};

// Truncated element of the umbral algebra: f(t) = sum_k a_k t^k / k!, held
// exactly through t^cap. coeffs()[k] is a_k, so <f(t) | x^k> = coeffs()[k].
// Binary operations require equal caps; there is no silent re-truncation.
class Series {
public:
  /// Zero series at the given truncation order.
  explicit Series(std::size_t cap) : coeffs_(cap + 1) {}
  /// From EGF coefficients a_0..a_cap (must be non-empty).
  explicit Series(std::vector<Rational> egf_coeffs);

  static Series constant(const Rational& c, std::size_t cap);
  static Series one(std::size_t cap) { return constant(1, cap); }
  /// t^k (EGF coefficient k! at index k; zero series when k > cap).
  static Series t_power(std::size_t k, std::size_t cap);
  /// e^{y t}: a_k = y^k.
  static Series exponential(const Rational& y, std::size_t cap);

  std::size_t cap() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t k) const { return coeffs_.at(k); }
  SeriesOrder order() const;

  /// Exact prefix at a smaller truncation order.
  Series truncated(std::size_t new_cap) const;
  /// Formal d/dt: a'_k = a_{k+1}; drops the cap by one.
  Series derivative() const;
  /// f(t)/t for a series with zero constant term; drops the cap by one.
  Series divided_by_t() const;

  Series operator-() const;
  friend Series operator+(const Series& f, const Series& g);
  friend Series operator-(const Series& f, const Series& g);
  /// Product in the umbral algebra: EGF Cauchy product with binomial weights.
  friend Series operator*(const Series& f, const Series& g);
  friend Series operator*(const Rational& c, const Series& f);

  /// Multiplicative inverse; requires an invertible series (a_0 != 0).
  Series inverse() const;
  /// e-fold product.
  Series pow(std::size_t e) const;

  friend bool operator==(const Series&, const Series&) = default;

private:
  std::vector<Rational> coeffs_;
};

/// f(g(t)) truncated at the common cap. g must be a delta series or zero;
/// an invertible g is rejected (ill-defined in the truncated algebra).
Series compose(const Series& f, const Series& g);

/// Li_k(1 - e^{-t}) as a delta series, via the finite sum
/// sum_{m=1}^{cap} (1 - e^{-t})^m / m^k; k may be zero or negative.
Series polylog_delta_series(long long k, std::size_t cap);

/// Li_k(1 - e^{-t}) / (1 - e^{-t}); invertible, with EGF coefficients the
/// poly-Bernoulli numbers B_n^{(k)}.
Series gf_poly_bernoulli(long long k, std::size_t cap);

/// (t/(e^t - 1))^r — generating factor of the order-r Bernoulli family.
Series gf_bernoulli_order(std::size_t r, std::size_t cap);

/// (2/(e^t + 1))^r — generating factor of the order-r Euler family.
Series gf_euler_order(std::size_t r, std::size_t cap);

/// ((1 - lambda)/(e^t - lambda))^r, lambda != 1 — generating factor of the
/// order-r Frobenius-Euler family.
Series gf_frobenius_euler(std::size_t r, const Rational& lambda, std::size_t cap);

} // namespace polybern
