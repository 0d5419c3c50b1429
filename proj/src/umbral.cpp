#include "polybern/umbral.hpp"

#include <stdexcept>
#include <utility>

namespace polybern {

namespace {

void require_degree_within_cap(const Series& f, const Polynomial& p, const char* who) {
  if (!p.is_zero() && p.degree() > f.cap())
    throw std::invalid_argument(std::string(who) + ": polynomial degree exceeds the truncation cap");
}

} // namespace

AppellFamily::AppellFamily(Series g_series, std::string family_name)
    : g(std::move(g_series)), name(std::move(family_name)) {
  if (g.coeff(0) == 0)
    throw std::invalid_argument("AppellFamily: g must be invertible (nonzero constant term)");
}

Rational pairing(const Series& f, const Polynomial& p) {
  require_degree_within_cap(f, p, "pairing");
  // <f | x^j> = a_j, extended linearly.
  Rational s = 0;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) s += p.coeffs()[j] * f.coeff(j);
  return s;
}

Polynomial apply(const Series& f, const Polynomial& p) {
  require_degree_within_cap(f, p, "apply");
  // f(t) p(x) = sum_k (a_k/k!) p^{(k)}(x); derivatives vanish past deg p.
  Polynomial acc;
  Polynomial d = p;
  for (std::size_t k = 0; !d.is_zero(); ++k) {
    if (f.coeff(k) != 0) acc += (f.coeff(k) / Rational(factorial(k))) * d;
    d = d.derivative();
  }
  return acc;
}

Polynomial appell_polynomial(const AppellFamily& fam, std::size_t n) {
  if (n > fam.g.cap())
    throw std::invalid_argument("appell_polynomial: degree exceeds the truncation cap");
  return apply(fam.g.inverse(), Polynomial::monomial(n));
}

Polynomial appell_step(const AppellFamily& fam, const Polynomial& s_n) {
  const std::size_t cap = fam.g.cap();
  if (cap == 0 || (!s_n.is_zero() && s_n.degree() + 1 > cap))
    throw std::invalid_argument("appell_step: cap exhausted");
  // g'/g loses one order to the derivative; s_n still fits under cap - 1.
  const Series ratio = fam.g.derivative() * fam.g.truncated(cap - 1).inverse();
  return s_n.times_x() - apply(ratio, s_n);
}

ConnectionMatrix::ConnectionMatrix(std::size_t n) : rows_(n + 1) {
  for (std::size_t i = 0; i <= n; ++i) rows_[i].resize(i + 1);
}

Rational ConnectionMatrix::entry(std::size_t n, std::size_t m) const {
  if (m > n) return 0;
  return rows_.at(n).at(m);
}

Rational& ConnectionMatrix::at(std::size_t n, std::size_t m) { return rows_.at(n).at(m); }

bool ConnectionMatrix::is_identity() const {
  for (std::size_t n = 0; n < rows_.size(); ++n)
    for (std::size_t m = 0; m <= n; ++m)
      if (rows_[n][m] != (n == m ? 1 : 0)) return false;
  return true;
}

ConnectionMatrix operator*(const ConnectionMatrix& a, const ConnectionMatrix& b) {
  if (a.max_row() != b.max_row())
    throw std::invalid_argument("ConnectionMatrix: size mismatch in product");
  ConnectionMatrix c(a.max_row());
  for (std::size_t i = 0; i <= a.max_row(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Rational s = 0;
      for (std::size_t k = j; k <= i; ++k) s += a.entry(i, k) * b.entry(k, j);
      c.at(i, j) = s;
    }
  return c;
}

ConnectionMatrix connection_appell(const AppellFamily& source, const AppellFamily& target,
                                   std::size_t n) {
  if (n > source.g.cap() || n > target.g.cap())
    throw std::invalid_argument("connection_appell: truncation cap too small");
  // c_{N,m} = (1/m!) <(h/g) t^m | x^N> = C(N,m) b_{N-m}, b = EGF coeffs of h/g.
  const Series w = target.g.truncated(n) * source.g.truncated(n).inverse();
  ConnectionMatrix c(n);
  for (std::size_t row = 0; row <= n; ++row)
    for (std::size_t m = 0; m <= row; ++m)
      c.at(row, m) = Rational(binomial(static_cast<long long>(row), static_cast<long long>(m))) *
                     w.coeff(row - m);
  return c;
}

OrthogonalityReport sheffer_orthogonality_check(const AppellFamily& fam, std::size_t n_max) {
  if (n_max > fam.g.cap())
    throw std::invalid_argument("sheffer_orthogonality_check: n_max exceeds the truncation cap");
  OrthogonalityReport report;
  report.n_max = n_max;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Polynomial s_n = appell_polynomial(fam, n);
    for (std::size_t k = 0; k <= n_max; ++k) {
      const Rational got = pairing(fam.g * Series::t_power(k, fam.g.cap()), s_n);
      const Rational want = (n == k) ? Rational(factorial(n)) : Rational(0);
      if (got != want) {
        report.pass = false;
        report.failures.emplace_back(n, k);
      }
    }
  }
  return report;
}

} // namespace polybern
