#include "polybern/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace polybern {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(std::size_t n, const Rational& c) {
  std::vector<Rational> v(n + 1);
  v[n] = c;
  return Polynomial(std::move(v));
}

std::size_t Polynomial::degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Rational Polynomial::coeff(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : Rational(0);
}

Rational Polynomial::leading_coeff() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) v[j] = -coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  normalize();
  return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
  lhs += rhs;
  return lhs;
}

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> v(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      v[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> v(p.coeffs_.size());
  for (std::size_t j = 0; j < p.coeffs_.size(); ++j) v[j] = c * p.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::times_x() const {
  if (is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + 1);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) v[j + 1] = coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) v[j - 1] = Rational(j) * coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted(const Rational& y) const {
  // Horner in (x + y): p(x + y) = (...(p_d (x+y) + p_{d-1})(x+y) + ...) + p_0
  Polynomial r;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    r = r.times_x() + y * r;
    r += Polynomial::constant(coeffs_[j]);
  }
  return r;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational r = 0;
  for (std::size_t j = coeffs_.size(); j-- > 0;) r = r * x + coeffs_[j];
  return r;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t j = p.coeffs().size(); j-- > 0;) {
    const Rational& c = p.coeffs()[j];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    const bool unit = (mag == 1 && j > 0);
    if (!unit) s += to_string(mag);
    if (j > 0) {
      if (!unit) s += '*';
      s += 'x';
      if (j > 1) s += '^' + std::to_string(j);
    }
  }
  return s;
}

} // namespace polybern
