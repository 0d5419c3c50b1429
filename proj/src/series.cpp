#include "polybern/series.hpp"

#include <stdexcept>
#include <utility>

namespace polybern {

namespace {

void require_equal_caps(const Series& f, const Series& g) {
  if (f.cap() != g.cap())
    throw std::invalid_argument("series: mismatched truncation orders (" +
                                std::to_string(f.cap()) + " vs " + std::to_string(g.cap()) + ")");
}

// 1 - e^{-t}: the delta series every polylogarithm substitution runs through.
Series one_minus_exp_neg(std::size_t cap) {
  return Series::one(cap) - Series::exponential(-1, cap);
}

} // namespace

Series::Series(std::vector<Rational> egf_coeffs) : coeffs_(std::move(egf_coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series: empty coefficient list");
}

Series Series::constant(const Rational& c, std::size_t cap) {
  Series s(cap);
  s.coeffs_[0] = c;
  return s;
}

Series Series::t_power(std::size_t k, std::size_t cap) {
  Series s(cap);
  if (k <= cap) s.coeffs_[k] = factorial(k); // t^k = k! * t^k/k!
  return s;
}

Series Series::exponential(const Rational& y, std::size_t cap) {
  Series s(cap);
  Rational p = 1;
  for (std::size_t k = 0; k <= cap; ++k) {
    s.coeffs_[k] = p;
    p *= y;
  }
  return s;
}

SeriesOrder Series::order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return SeriesOrder{k};
  return SeriesOrder{std::nullopt};
}

Series Series::truncated(std::size_t new_cap) const {
  if (new_cap > cap()) throw std::invalid_argument("series: truncation cannot raise the cap");
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_cap + 1));
}

Series Series::derivative() const {
  if (cap() == 0)
    throw std::invalid_argument("series: cap exhausted (cannot differentiate an order-0 truncation)");
  Series r(cap() - 1);
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k + 1];
  return r;
}

Series Series::divided_by_t() const {
  if (coeffs_[0] != 0) throw std::domain_error("series: not divisible by t");
  if (cap() == 0)
    throw std::invalid_argument("series: cap exhausted (cannot shift an order-0 truncation)");
  // f = sum a_k t^k/k!  =>  f/t = sum (a_{j+1}/(j+1)) t^j/j!
  Series r(cap() - 1);
  for (std::size_t j = 0; j + 1 < coeffs_.size(); ++j) r.coeffs_[j] = coeffs_[j + 1] / Rational(j + 1);
  return r;
}

Series Series::operator-() const {
  Series r(cap());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
  return r;
}

Series operator+(const Series& f, const Series& g) {
  require_equal_caps(f, g);
  Series r(f.cap());
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = f.coeffs_[k] + g.coeffs_[k];
  return r;
}

Series operator-(const Series& f, const Series& g) {
  require_equal_caps(f, g);
  Series r(f.cap());
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = f.coeffs_[k] - g.coeffs_[k];
  return r;
}

Series operator*(const Series& f, const Series& g) {
  require_equal_caps(f, g);
  Series r(f.cap());
  for (std::size_t n = 0; n < r.coeffs_.size(); ++n) {
    Rational s = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      if (f.coeffs_[j] == 0 || g.coeffs_[n - j] == 0) continue;
      s += Rational(binomial(static_cast<long long>(n), static_cast<long long>(j))) *
           f.coeffs_[j] * g.coeffs_[n - j];
    }
    r.coeffs_[n] = s;
  }
  return r;
}

Series operator*(const Rational& c, const Series& f) {
  Series r(f.cap());
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = c * f.coeffs_[k];
  return r;
}

Series Series::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("series: not invertible (zero constant term)");
  // Triangular solve of (f g)_n = delta_{n,0} in the EGF Cauchy product.
  Series g(cap());
  g.coeffs_[0] = Rational(1) / coeffs_[0];
  for (std::size_t n = 1; n <= cap(); ++n) {
    Rational s = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      if (coeffs_[j] == 0) continue;
      s += Rational(binomial(static_cast<long long>(n), static_cast<long long>(j))) *
           coeffs_[j] * g.coeffs_[n - j];
    }
    g.coeffs_[n] = -s / coeffs_[0];
  }
  return g;
}

Series Series::pow(std::size_t e) const {
  Series r = Series::one(cap());
  for (std::size_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

Series compose(const Series& f, const Series& g) {
  require_equal_caps(f, g);
  if (g.order().invertible())
    throw std::invalid_argument("series: composition requires a delta (or zero) inner series");
  // f(g) = sum_k (a_k/k!) g^k; orders beyond the cap cannot contribute since
  // O(g) >= 1, so Horner over the ordinary coefficients a_k/k! is exact.
  const std::size_t cap = f.cap();
  Series r = Series::constant(f.coeff(cap) / Rational(factorial(cap)), cap);
  for (std::size_t k = cap; k-- > 0;)
    r = r * g + Series::constant(f.coeff(k) / Rational(factorial(k)), cap);
  return r;
}

Series polylog_delta_series(long long k, std::size_t cap) {
  const Series u = one_minus_exp_neg(cap);
  Series acc(cap);
  Series p = u;
  for (std::size_t m = 1; m <= cap; ++m) {
    acc = acc + rational_pow(Rational(m), -k) * p;
    if (m < cap) p = p * u;
  }
  return acc;
}

Series gf_poly_bernoulli(long long k, std::size_t cap) {
  // Li_k(z)/z = sum_{m>=0} z^m/(m+1)^k evaluated at z = 1 - e^{-t};
  // only m <= cap survive truncation because O(1 - e^{-t}) = 1.
  const Series u = one_minus_exp_neg(cap);
  Series acc(cap);
  Series p = Series::one(cap);
  for (std::size_t m = 0; m <= cap; ++m) {
    acc = acc + rational_pow(Rational(m + 1), -k) * p;
    if (m < cap) p = p * u;
  }
  return acc;
}

Series gf_bernoulli_order(std::size_t r, std::size_t cap) {
  // (e^t - 1)/t costs one order, so build the numerator one past the cap.
  const Series em1 = Series::exponential(1, cap + 1) - Series::one(cap + 1);
  return em1.divided_by_t().inverse().pow(r);
}

Series gf_euler_order(std::size_t r, std::size_t cap) {
  const Series half_sum = Rational(1, 2) * (Series::exponential(1, cap) + Series::one(cap));
  return half_sum.inverse().pow(r);
}

Series gf_frobenius_euler(std::size_t r, const Rational& lambda, std::size_t cap) {
  if (lambda == 1) throw std::invalid_argument("gf_frobenius_euler: lambda = 1 is not allowed");
  const Series scaled =
      (Rational(1) / (Rational(1) - lambda)) *
      (Series::exponential(1, cap) - Series::constant(lambda, cap));
  return scaled.inverse().pow(r);
}

} // namespace polybern
