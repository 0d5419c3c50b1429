#pragma once

#include "polybern/families.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace polybern {

// Grid coordinates of one identity check. r and lambda are present only for
// the checks that use them.
struct CheckParams {
  std::size_t n = 0;
  long long k = 0;
  std::optional<std::size_t> r;
  std::optional<Rational> lambda;

  friend bool operator==(const CheckParams&, const CheckParams&) = default;
};

// Outcome of one identity verification. Scalar identities are reported as
// degree-0 polynomials. pass is exact canonical-coefficient equality of lhs
// and rhs (plus, for the connection theorems, the coefficient cross-check);
// a failing report always carries the offending pair for diffing.
struct CheckReport {
  std::string identity;
  CheckParams params;
  Polynomial lhs;
  Polynomial rhs;
  bool pass = false;
  std::string note; // names the failing sub-check; empty when pass

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

// Parameter grid for run_grid. Each check ranges over its own parameters:
// (n, k) checks ignore r and lambda, Theorems 4/5 range over r as well,
// Theorem 6 over r and every lambda. Empty intervals yield no reports.
struct GridSpec {
  std::size_t n_min = 0;
  std::size_t n_max = 12;
  long long k_min = -4;
  long long k_max = 4;
  std::size_t r_min = 0;
  std::size_t r_max = 4;
  std::vector<Rational> lambdas = {Rational(-1), Rational(1, 2), Rational(2), Rational(3)};
  std::vector<std::string> identities; // empty = all known identities
};

/// Names accepted by GridSpec::identities, in canonical report order.
const std::vector<std::string>& known_identities();

/// Theorem 1 recurrence:
/// B_{n+1}^{(k)}(x) = x B_n^{(k)}(x)
///   - 1/(n+1) sum_{l=0}^{n+1} C(n+1,l) B_l [B_{n+1-l}^{(k)}(x) - B_{n+1-l}^{(k-1)}(x)].
CheckReport check_theorem1(std::size_t n, long long k);

/// Corollary 2 (n >= 1):
/// (n+1) B_n^{(k)}(x) - n(x + 1/2) B_{n-1}^{(k)}(x)
///   + sum_{l=0}^{n-2} C(n,l) B_{n-l} B_l^{(k)}(x)
///   = sum_{l=0}^{n} C(n,l) B_{n-l} B_l^{(k-1)}(x).
CheckReport check_corollary2(std::size_t n, long long k);

/// Theorem 3 (n >= 1): B_n^{(k)}(x) = x B_{n-1}^{(k)}(x)
///   + sum_{l=0}^{n-1} (-1)^{n-1-l} C(n-1,l)
///     [sum_{m=0}^{n-1} (-1)^m (m+1)!/(m+2)^k S_2(n-1-l, m)] (x-1)^l.
CheckReport check_theorem3(std::size_t n, long long k);

/// Two-way evaluation of <Li_k(1-e^{-t}) | x^{n+1}>:
/// sum_{m=0}^{n} (-1)^{n-m} C(n,m) B_m^{(k-1)}
///   = sum_{m=0}^{n} C(n+1,m) (-1)^{n-m} B_m^{(k)}.
CheckReport check_eq42(std::size_t n, long long k);

/// Theorem 4: expansion of B_n^{(k)}(x) in the order-r Bernoulli basis, with
/// closed-form coefficients cross-checked against connection_appell.
CheckReport check_theorem4(std::size_t n, long long k, std::size_t r);

/// Theorem 5: expansion in the order-r Euler basis, coefficients
/// cross-checked against connection_appell.
CheckReport check_theorem5(std::size_t n, long long k, std::size_t r);

/// Theorem 6 (lambda != 1): expansion in the order-r Frobenius-Euler basis,
/// coefficients cross-checked against connection_appell.
CheckReport check_theorem6(std::size_t n, long long k, std::size_t r, const Rational& lambda);

/// Bundled Appell basics (n >= 1): the binomial expansion of B_n^{(k)}(x),
/// the Appell identity at y in {1, -2, 1/3}, and the derivative recurrence.
CheckReport check_appell_basics(std::size_t n, long long k);

/// Runs every selected check over its parameter sub-grid, in canonical order
/// (identity, then n, k, r, lambda ascending). Throws std::invalid_argument
/// for an unknown identity name or lambda = 1.
std::vector<CheckReport> run_grid(const GridSpec& spec);

} // namespace polybern
