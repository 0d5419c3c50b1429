#include "polybern/families.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace polybern {

namespace {

// Precomputed triangle/row bounds. Arguments beyond the tables fall back to
// a fresh computation so the functions stay total.
constexpr std::size_t kTableMax = 64;

const std::vector<std::vector<Integer>>& stirling2_table() {
  static const std::vector<std::vector<Integer>> table = [] {
    std::vector<std::vector<Integer>> t(kTableMax + 1);
    t[0] = {Integer(1)};
    for (std::size_t n = 1; n <= kTableMax; ++n) {
      t[n].resize(n + 1); // S_2(n, 0) = 0 for n >= 1
      for (std::size_t m = 1; m <= n; ++m)
        t[n][m] = Integer(m) * (m < n ? t[n - 1][m] : Integer(0)) + t[n - 1][m - 1];
    }
    return t;
  }();
  return table;
}

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b(kTableMax + 1);
    b[0] = 1;
    // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
    for (std::size_t n = 1; n <= kTableMax; ++n) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j)
        s += Rational(binomial(static_cast<long long>(n) + 1, static_cast<long long>(j))) * b[j];
      b[n] = -s / Rational(n + 1);
    }
    return b;
  }();
  return table;
}

Integer stirling2_uncached(std::size_t n, std::size_t m) {
  std::vector<Integer> prev(m + 1);
  prev[0] = 1; // row 0
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Integer> cur(m + 1);
    for (std::size_t j = 1; j <= m && j <= i; ++j) cur[j] = Integer(j) * prev[j] + prev[j - 1];
    prev = std::move(cur);
  }
  return prev[m];
}

Rational bernoulli_uncached(std::size_t n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < i; ++j)
      s += Rational(binomial(static_cast<long long>(i) + 1, static_cast<long long>(j))) * b[j];
    b[i] = -s / Rational(i + 1);
  }
  return b[n];
}

} // namespace

FamilyTag FamilyTag::poly_bernoulli(long long k) {
  FamilyTag t;
  t.kind = FamilyKind::PolyBernoulli;
  t.k = k;
  return t;
}

FamilyTag FamilyTag::higher_bernoulli(std::size_t r) {
  FamilyTag t;
  t.kind = FamilyKind::HigherBernoulli;
  t.r = r;
  return t;
}

FamilyTag FamilyTag::euler(std::size_t r) {
  FamilyTag t;
  t.kind = FamilyKind::Euler;
  t.r = r;
  return t;
}

FamilyTag FamilyTag::frobenius_euler(std::size_t r, const Rational& lambda) {
  if (lambda == 1) throw std::invalid_argument("frobenius_euler: lambda = 1 is not allowed");
  FamilyTag t;
  t.kind = FamilyKind::FrobeniusEuler;
  t.r = r;
  t.lambda = lambda;
  return t;
}

std::string FamilyTag::label() const {
  switch (kind) {
    case FamilyKind::PolyBernoulli: return "poly-bernoulli(k=" + std::to_string(k) + ")";
    case FamilyKind::HigherBernoulli: return "higher-bernoulli(r=" + std::to_string(r) + ")";
    case FamilyKind::Euler: return "euler(r=" + std::to_string(r) + ")";
    case FamilyKind::FrobeniusEuler:
      return "frobenius-euler(r=" + std::to_string(r) + ",lambda=" + to_string(lambda) + ")";
  }
  return "unknown";
}

Integer stirling2(long long n, long long m) {
  if (n < 0 || m < 0 || m > n) return 0;
  const auto un = static_cast<std::size_t>(n);
  const auto um = static_cast<std::size_t>(m);
  if (un <= kTableMax) return stirling2_table()[un][um];
  return stirling2_uncached(un, um);
}

Rational bernoulli_number(std::size_t n) {
  if (n <= kTableMax) return bernoulli_table()[n];
  return bernoulli_uncached(n);
}

Rational poly_bernoulli_number(std::size_t n, long long k) {
  Rational s = 0;
  for (std::size_t m = 0; m <= n; ++m) {
    const Integer s2 = stirling2(static_cast<long long>(n), static_cast<long long>(m));
    if (s2 == 0) continue;
    Rational term = rational_pow(Rational(m + 1), -k) * Rational(factorial(m) * s2);
    if ((n - m) % 2 != 0) term = -term;
    s += term;
  }
  return s;
}

Polynomial poly_bernoulli_polynomial(std::size_t n, long long k) {
  std::vector<Rational> c(n + 1);
  for (std::size_t l = 0; l <= n; ++l) {
    Rational s = 0;
    for (std::size_t m = 0; m + l <= n; ++m) {
      const Integer s2 = stirling2(static_cast<long long>(n - l), static_cast<long long>(m));
      if (s2 == 0) continue;
      Rational term = rational_pow(Rational(m + 1), -k) * Rational(factorial(m) * s2);
      if ((n - m - l) % 2 != 0) term = -term;
      s += term;
    }
    c[l] = Rational(binomial(static_cast<long long>(n), static_cast<long long>(l))) * s;
  }
  return Polynomial(std::move(c));
}

Series family_gf(const FamilyTag& tag, std::size_t cap) {
  switch (tag.kind) {
    case FamilyKind::PolyBernoulli: return gf_poly_bernoulli(tag.k, cap);
    case FamilyKind::HigherBernoulli: return gf_bernoulli_order(tag.r, cap);
    case FamilyKind::Euler: return gf_euler_order(tag.r, cap);
    case FamilyKind::FrobeniusEuler: return gf_frobenius_euler(tag.r, tag.lambda, cap);
  }
  throw std::invalid_argument("family_gf: unknown family kind");
}

AppellFamily make_appell_family(const FamilyTag& tag, std::size_t cap) {
  // The generating factor is 1/g(t); the Appell pair stores g itself.
  return AppellFamily(family_gf(tag, cap).inverse(), tag.label());
}

Polynomial family_polynomial(const FamilyTag& tag, std::size_t n) {
  return appell_polynomial(make_appell_family(tag, n), n);
}

Rational falling_factorial(const Rational& a, std::size_t n) {
  Rational r = 1;
  Rational v = a;
  for (std::size_t i = 0; i < n; ++i) {
    r *= v;
    v -= 1;
  }
  return r;
}

} // namespace polybern
