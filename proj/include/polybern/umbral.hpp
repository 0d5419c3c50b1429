#pragma once

#include "polybern/polynomial.hpp"
#include "polybern/series.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace polybern {

// An Appell sequence is the Sheffer sequence for (g(t), t): it is determined
// by its invertible series g via s_n(x) = g(t)^{-1} x^n, and satisfies
// <g(t) t^k | s_n(x)> = n! delta_{n,k}.
struct AppellFamily {
  Series g;
  std::string name;

  AppellFamily(Series g_series, std::string family_name);
};

/// The umbral pairing <f(t) | p(x)> = sum_j p_j a_j.
/// Requires deg p <= f.cap().
Rational pairing(const Series& f, const Polynomial& p);

/// The operator action f(t) p(x) = sum_k (a_k / k!) p^{(k)}(x).
/// Requires deg p <= f.cap().
Polynomial apply(const Series& f, const Polynomial& p);

/// s_n(x) = g(t)^{-1} x^n; requires n <= fam.g.cap().
Polynomial appell_polynomial(const AppellFamily& fam, std::size_t n);

/// One step of the Appell recurrence s_{n+1}(x) = (x - g'(t)/g(t)) s_n(x).
/// The derivative costs one order of truncation, so deg(s_n) + 1 <= cap.
Polynomial appell_step(const AppellFamily& fam, const Polynomial& s_n);

// Lower-triangular connection coefficients: row N holds c_{N,0}..c_{N,N}
// with s_N(x) = sum_m c_{N,m} r_m(x).
class ConnectionMatrix {
public:
  /// Identity-free zero matrix with rows 0..n.
  explicit ConnectionMatrix(std::size_t n);

  std::size_t max_row() const { return rows_.size() - 1; }
  /// Entry c_{n,m}; zero above the diagonal.
  Rational entry(std::size_t n, std::size_t m) const;
  Rational& at(std::size_t n, std::size_t m);
  const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }

  bool is_identity() const;
  friend ConnectionMatrix operator*(const ConnectionMatrix& a, const ConnectionMatrix& b);
  friend bool operator==(const ConnectionMatrix&, const ConnectionMatrix&) = default;

private:
  std::vector<std::vector<Rational>> rows_;
};

/// Connection coefficients between two Appell families:
/// source's s_N(x) = sum_m c_{N,m} r_m(x) in the target's basis, where
/// c_{N,m} = C(N,m) b_{N-m} and b are the EGF coefficients of
/// target.g / source.g. Requires n <= both caps.
ConnectionMatrix connection_appell(const AppellFamily& source,
                                   const AppellFamily& target, std::size_t n);

// Result of sweeping <g(t) t^k | s_n(x)> = n! delta_{n,k} over a square grid.
struct OrthogonalityReport {
  std::size_t n_max = 0;
  bool pass = true;
  std::vector<std::pair<std::size_t, std::size_t>> failures; // offending (n, k)
};

/// Verifies Sheffer orthogonality for all 0 <= n, k <= n_max.
/// Failures are reported, never thrown.
OrthogonalityReport sheffer_orthogonality_check(const AppellFamily& fam, std::size_t n_max);

} // namespace polybern
