#include "polybern/identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace polybern {

namespace {

CheckReport make_report(std::string identity, CheckParams params, Polynomial lhs, Polynomial rhs,
                        std::string note = {}) {
  CheckReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.pass = (lhs == rhs) && note.empty();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.note = r.pass ? std::string{} : std::move(note);
  return r;
}

Polynomial coeffs_as_polynomial(const std::vector<Rational>& v) {
  return Polynomial(std::vector<Rational>(v));
}

// Shared engine for Theorems 4-6: reconstruct B_n^{(k)}(x) from closed-form
// coefficients against the given Appell basis, then cross-check those
// coefficients against the generic connection matrix row.
CheckReport connection_theorem_report(std::string identity, CheckParams params, std::size_t n,
                                      long long k, const FamilyTag& target,
                                      const std::vector<Rational>& closed_form) {
  const AppellFamily basis_family = make_appell_family(target, n);
  Polynomial rhs;
  for (std::size_t m = 0; m <= n; ++m) {
    if (closed_form[m] == 0) continue;
    rhs += closed_form[m] * appell_polynomial(basis_family, m);
  }
  const Polynomial lhs = poly_bernoulli_polynomial(n, k);

  const AppellFamily source = make_appell_family(FamilyTag::poly_bernoulli(k), n);
  const ConnectionMatrix conn = connection_appell(source, basis_family, n);
  bool rows_match = true;
  for (std::size_t m = 0; m <= n; ++m)
    if (conn.entry(n, m) != closed_form[m]) rows_match = false;

  if (!rows_match) {
    std::vector<Rational> row(n + 1);
    for (std::size_t m = 0; m <= n; ++m) row[m] = conn.entry(n, m);
    return make_report(std::move(identity), std::move(params), coeffs_as_polynomial(closed_form),
                       coeffs_as_polynomial(row), "closed-form coefficients disagree with connection_appell");
  }
  return make_report(std::move(identity), std::move(params), lhs, rhs);
}

} // namespace

const std::vector<std::string>& known_identities() {
  static const std::vector<std::string> names = {"thm1", "cor2", "thm3", "eq42",
                                                 "thm4", "thm5", "thm6", "appell"};
  return names;
}

CheckReport check_theorem1(std::size_t n, long long k) {
  const Polynomial lhs = poly_bernoulli_polynomial(n + 1, k);

  Polynomial sum;
  for (std::size_t l = 0; l <= n + 1; ++l) {
    const Rational c =
        Rational(binomial(static_cast<long long>(n) + 1, static_cast<long long>(l))) *
        bernoulli_number(l);
    if (c == 0) continue;
    sum += c * (poly_bernoulli_polynomial(n + 1 - l, k) - poly_bernoulli_polynomial(n + 1 - l, k - 1));
  }
  const Polynomial rhs =
      poly_bernoulli_polynomial(n, k).times_x() - (Rational(1) / Rational(n + 1)) * sum;

  return make_report("thm1", CheckParams{n, k, {}, {}}, lhs, rhs);
}

CheckReport check_corollary2(std::size_t n, long long k) {
  if (n < 1) throw std::invalid_argument("check_corollary2: requires n >= 1");

  Polynomial lhs = Rational(n + 1) * poly_bernoulli_polynomial(n, k);
  const Polynomial x_plus_half(std::vector<Rational>{Rational(1, 2), Rational(1)});
  lhs -= Rational(n) * (x_plus_half * poly_bernoulli_polynomial(n - 1, k));
  for (std::size_t l = 0; l + 2 <= n; ++l) {
    const Rational c = Rational(binomial(static_cast<long long>(n), static_cast<long long>(l))) *
                       bernoulli_number(n - l);
    if (c == 0) continue;
    lhs += c * poly_bernoulli_polynomial(l, k);
  }

  Polynomial rhs;
  for (std::size_t l = 0; l <= n; ++l) {
    const Rational c = Rational(binomial(static_cast<long long>(n), static_cast<long long>(l))) *
                       bernoulli_number(n - l);
    if (c == 0) continue;
    rhs += c * poly_bernoulli_polynomial(l, k - 1);
  }

  return make_report("cor2", CheckParams{n, k, {}, {}}, lhs, rhs);
}

CheckReport check_theorem3(std::size_t n, long long k) {
  if (n < 1) throw std::invalid_argument("check_theorem3: requires n >= 1");

  const Polynomial lhs = poly_bernoulli_polynomial(n, k);

  Polynomial rhs = poly_bernoulli_polynomial(n - 1, k).times_x();
  const Polynomial x_minus_one(std::vector<Rational>{Rational(-1), Rational(1)});
  Polynomial x_minus_one_pow = Polynomial::constant(1);
  for (std::size_t l = 0; l <= n - 1; ++l) {
    // inner sum kept at the printed upper limit n-1; S_2(n-1-l, m) = 0 for
    // m > n-1-l makes the extra terms vanish
    Rational inner = 0;
    for (std::size_t m = 0; m <= n - 1; ++m) {
      const Integer s2 = stirling2(static_cast<long long>(n - 1 - l), static_cast<long long>(m));
      if (s2 == 0) continue;
      Rational term = Rational(factorial(m + 1) * s2) * rational_pow(Rational(m + 2), -k);
      if (m % 2 != 0) term = -term;
      inner += term;
    }
    Rational outer = Rational(binomial(static_cast<long long>(n) - 1, static_cast<long long>(l))) * inner;
    if ((n - 1 - l) % 2 != 0) outer = -outer;
    if (outer != 0) rhs += outer * x_minus_one_pow;
    x_minus_one_pow = x_minus_one_pow * x_minus_one;
  }

  return make_report("thm3", CheckParams{n, k, {}, {}}, lhs, rhs);
}

CheckReport check_eq42(std::size_t n, long long k) {
  Rational lhs = 0;
  for (std::size_t m = 0; m <= n; ++m) {
    Rational term = Rational(binomial(static_cast<long long>(n), static_cast<long long>(m))) *
                    poly_bernoulli_number(m, k - 1);
    if ((n - m) % 2 != 0) term = -term;
    lhs += term;
  }
  Rational rhs = 0;
  for (std::size_t m = 0; m <= n; ++m) {
    Rational term = Rational(binomial(static_cast<long long>(n) + 1, static_cast<long long>(m))) *
                    poly_bernoulli_number(m, k);
    if ((n - m) % 2 != 0) term = -term;
    rhs += term;
  }
  return make_report("eq42", CheckParams{n, k, {}, {}}, Polynomial::constant(lhs),
                     Polynomial::constant(rhs));
}

CheckReport check_theorem4(std::size_t n, long long k, std::size_t r) {
  // C_{n,m} = C(n,m) sum_l r! (n-m)_l / (l+r)! S_2(l+r, r) B^{(k)}_{n-l-m}
  std::vector<Rational> coef(n + 1);
  const Integer r_fact = factorial(r);
  for (std::size_t m = 0; m <= n; ++m) {
    Rational s = 0;
    for (std::size_t l = 0; l + m <= n; ++l) {
      const Integer s2 = stirling2(static_cast<long long>(l + r), static_cast<long long>(r));
      if (s2 == 0) continue;
      s += Rational(r_fact * s2, factorial(l + r)) *
           falling_factorial(Rational(n - m), l) * poly_bernoulli_number(n - l - m, k);
    }
    coef[m] = Rational(binomial(static_cast<long long>(n), static_cast<long long>(m))) * s;
  }
  return connection_theorem_report("thm4", CheckParams{n, k, r, {}}, n, k,
                                   FamilyTag::higher_bernoulli(r), coef);
}

CheckReport check_theorem5(std::size_t n, long long k, std::size_t r) {
  // C_{n,m} = C(n,m)/2^r sum_{j=0}^{r} C(r,j) B^{(k)}_{n-m}(j)
  std::vector<Rational> coef(n + 1);
  const Rational half_pow = rational_pow(Rational(2), -static_cast<long long>(r));
  for (std::size_t m = 0; m <= n; ++m) {
    const Polynomial b = poly_bernoulli_polynomial(n - m, k);
    Rational s = 0;
    for (std::size_t j = 0; j <= r; ++j)
      s += Rational(binomial(static_cast<long long>(r), static_cast<long long>(j))) * b(Rational(j));
    coef[m] = half_pow *
              Rational(binomial(static_cast<long long>(n), static_cast<long long>(m))) * s;
  }
  return connection_theorem_report("thm5", CheckParams{n, k, r, {}}, n, k, FamilyTag::euler(r),
                                   coef);
}

CheckReport check_theorem6(std::size_t n, long long k, std::size_t r, const Rational& lambda) {
  if (lambda == 1) throw std::invalid_argument("check_theorem6: lambda = 1 is not allowed");
  // C_{n,m} = C(n,m)/(1-lambda)^r sum_j C(r,j) (-lambda)^{r-j} B^{(k)}_{n-m}(j)
  std::vector<Rational> coef(n + 1);
  const Rational prefactor = rational_pow(Rational(1) - lambda, -static_cast<long long>(r));
  for (std::size_t m = 0; m <= n; ++m) {
    const Polynomial b = poly_bernoulli_polynomial(n - m, k);
    Rational s = 0;
    for (std::size_t j = 0; j <= r; ++j)
      s += Rational(binomial(static_cast<long long>(r), static_cast<long long>(j))) *
           rational_pow(-lambda, static_cast<long long>(r - j)) * b(Rational(j));
    coef[m] = prefactor *
              Rational(binomial(static_cast<long long>(n), static_cast<long long>(m))) * s;
  }
  return connection_theorem_report("thm6", CheckParams{n, k, r, lambda}, n, k,
                                   FamilyTag::frobenius_euler(r, lambda), coef);
}

CheckReport check_appell_basics(std::size_t n, long long k) {
  if (n < 1) throw std::invalid_argument("check_appell_basics: requires n >= 1");
  const CheckParams params{n, k, {}, {}};
  const Polynomial b_n = poly_bernoulli_polynomial(n, k);

  // binomial expansion B_n^{(k)}(x) = sum_l C(n,l) B^{(k)}_{n-l} x^l
  std::vector<Rational> expansion(n + 1);
  for (std::size_t l = 0; l <= n; ++l)
    expansion[l] = Rational(binomial(static_cast<long long>(n), static_cast<long long>(l))) *
                   poly_bernoulli_number(n - l, k);
  const Polynomial eq4 = coeffs_as_polynomial(expansion);
  if (b_n != eq4) return make_report("appell", params, b_n, eq4, "binomial expansion");

  // Appell identity s_n(x+y) = sum_j C(n,j) s_j(y) x^{n-j} at rational y
  for (const Rational& y : {Rational(1), Rational(-2), Rational(1, 3)}) {
    const Polynomial shifted = b_n.shifted(y);
    Polynomial sum;
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational c = Rational(binomial(static_cast<long long>(n), static_cast<long long>(j))) *
                         poly_bernoulli_polynomial(j, k)(y);
      if (c != 0) sum += Polynomial::monomial(n - j, c);
    }
    if (shifted != sum)
      return make_report("appell", params, shifted, sum, "Appell identity at y=" + to_string(y));
  }

  // derivative recurrence d/dx B_n^{(k)}(x) = n B_{n-1}^{(k)}(x)
  const Polynomial deriv = b_n.derivative();
  const Polynomial scaled = Rational(n) * poly_bernoulli_polynomial(n - 1, k);
  if (deriv != scaled) return make_report("appell", params, deriv, scaled, "derivative recurrence");

  return make_report("appell", params, b_n, eq4);
}

std::vector<CheckReport> run_grid(const GridSpec& spec) {
  for (const std::string& name : spec.identities)
    if (std::find(known_identities().begin(), known_identities().end(), name) ==
        known_identities().end())
      throw std::invalid_argument("run_grid: unknown identity \"" + name + "\"");
  for (const Rational& lambda : spec.lambdas)
    if (lambda == 1) throw std::invalid_argument("run_grid: lambda = 1 is not allowed");

  const auto selected = [&spec](const char* name) {
    return spec.identities.empty() ||
           std::find(spec.identities.begin(), spec.identities.end(), name) != spec.identities.end();
  };

  std::vector<Rational> lambdas = spec.lambdas;
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

  std::vector<CheckReport> reports;
  for (const std::string& identity : known_identities()) {
    if (!selected(identity.c_str())) continue;
    for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
      if ((identity == "cor2" || identity == "thm3" || identity == "appell") && n < 1) continue;
      for (long long k = spec.k_min; k <= spec.k_max; ++k) {
        if (identity == "thm1") {
          reports.push_back(check_theorem1(n, k));
        } else if (identity == "cor2") {
          reports.push_back(check_corollary2(n, k));
        } else if (identity == "thm3") {
          reports.push_back(check_theorem3(n, k));
        } else if (identity == "eq42") {
          reports.push_back(check_eq42(n, k));
        } else if (identity == "appell") {
          reports.push_back(check_appell_basics(n, k));
        } else {
          for (std::size_t r = spec.r_min; r <= spec.r_max; ++r) {
            if (identity == "thm4") {
              reports.push_back(check_theorem4(n, k, r));
            } else if (identity == "thm5") {
              reports.push_back(check_theorem5(n, k, r));
            } else {
              for (const Rational& lambda : lambdas)
                reports.push_back(check_theorem6(n, k, r, lambda));
            }
          }
        }
      }
    }
  }
  return reports;
}

} // namespace polybern
