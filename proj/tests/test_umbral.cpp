#include "polybern/umbral.hpp"

#include "polybern/families.hpp"

#include "oracles.hpp"

#include "doctest.h"

using namespace polybern;

TEST_CASE("pairing against the basis") {
  // <t^k | x^n> = n! delta_{n,k}
  for (std::size_t k = 0; k <= 6; ++k)
    for (std::size_t n = 0; n <= 6; ++n)
      CHECK(pairing(Series::t_power(k, 6), Polynomial::monomial(n)) ==
            (n == k ? Rational(factorial(n)) : Rational(0)));

  // <1 | p> = p(0)
  oracles::RandomValues rnd(201);
  for (int i = 0; i < 20; ++i) {
    const Polynomial p = rnd.polynomial(5);
    CHECK(pairing(Series::one(5), p) == p(0));
  }

  // <e^{yt} | p> = p(y): p = x^2 - 1 at y = 3
  const Polynomial p(std::vector<Rational>{-1, 0, 1});
  CHECK(pairing(Series::exponential(3, 4), p) == 8);

  CHECK_THROWS_AS(pairing(Series::one(2), Polynomial::monomial(4)), std::invalid_argument);
}

TEST_CASE("pairing is bilinear") {
  oracles::RandomValues rnd(202);
  for (int i = 0; i < 25; ++i) {
    const Series f = rnd.series(6);
    const Series g = rnd.series(6);
    const Polynomial p = rnd.polynomial(6);
    const Polynomial q = rnd.polynomial(6);
    const Rational a = rnd.rational();
    const Rational b = rnd.rational();
    CHECK(pairing(a * f + b * g, p) == a * pairing(f, p) + b * pairing(g, p));
    CHECK(pairing(f, a * p + b * q) == a * pairing(f, p) + b * pairing(f, q));
  }
}

TEST_CASE("operator action") {
  // t^k differentiates
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(apply(Series::t_power(1, 6), Polynomial::monomial(n)) ==
          Polynomial::monomial(n - 1, Rational(n)));

  oracles::RandomValues rnd(203);
  for (int i = 0; i < 20; ++i) {
    const Polynomial p = rnd.polynomial(6);
    CHECK(apply(Series::one(6), p) == p);
  }

  // e^{yt} shifts: (x + 1)^2
  CHECK(apply(Series::exponential(1, 4), Polynomial::monomial(2)) ==
        Polynomial(std::vector<Rational>{1, 2, 1}));

  CHECK_THROWS_AS(apply(Series::one(2), Polynomial::monomial(3)), std::invalid_argument);
}

TEST_CASE("adjointness of multiplication") {
  // <f g | p> = <f | g p> = <g | f p>
  oracles::RandomValues rnd(204);
  for (int i = 0; i < 25; ++i) {
    const Series f = rnd.series(6);
    const Series g = rnd.series(6);
    const Polynomial p = rnd.polynomial(6);
    const Rational lhs = pairing(f * g, p);
    CHECK(lhs == pairing(f, apply(g, p)));
    CHECK(lhs == pairing(g, apply(f, p)));
  }
}

TEST_CASE("derivative duality") {
  // <f | x p> = <f' | p>
  oracles::RandomValues rnd(205);
  for (int i = 0; i < 25; ++i) {
    const Series f = rnd.series(7);
    const Polynomial p = rnd.polynomial(6);
    CHECK(pairing(f, p.times_x()) == pairing(f.derivative(), p));
  }
}

TEST_CASE("appell_polynomial") {
  const AppellFamily trivial(Series::one(6), "monomials");
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(appell_polynomial(trivial, n) == Polynomial::monomial(n));

  const AppellFamily pb2 = make_appell_family(FamilyTag::poly_bernoulli(2), 6);
  CHECK(appell_polynomial(pb2, 1) == Polynomial(std::vector<Rational>{Rational(1, 4), 1}));

  const AppellFamily hb1 = make_appell_family(FamilyTag::higher_bernoulli(1), 6);
  CHECK(appell_polynomial(hb1, 2) == Polynomial(std::vector<Rational>{Rational(1, 6), -1, 1}));

  CHECK_THROWS_AS(appell_polynomial(trivial, 7), std::invalid_argument);
  CHECK_THROWS_AS(AppellFamily(Series::t_power(1, 4), "delta"), std::invalid_argument);
}

TEST_CASE("appell_step") {
  const AppellFamily trivial(Series::one(6), "monomials");
  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(appell_step(trivial, Polynomial::monomial(n)) == Polynomial::monomial(n + 1));

  const AppellFamily pb2 = make_appell_family(FamilyTag::poly_bernoulli(2), 6);
  CHECK(appell_step(pb2, Polynomial::constant(1)) ==
        Polynomial(std::vector<Rational>{Rational(1, 4), 1}));

  const AppellFamily hb1 = make_appell_family(FamilyTag::higher_bernoulli(1), 6);
  const Polynomial b2(std::vector<Rational>{Rational(1, 6), -1, 1});
  CHECK(appell_step(hb1, b2) == Polynomial(std::vector<Rational>{0, Rational(1, 2), Rational(-3, 2), 1}));

  CHECK_THROWS_AS(appell_step(hb1, Polynomial::monomial(6)), std::invalid_argument);
}

TEST_CASE("iterated appell_step reproduces appell_polynomial") {
  const std::vector<FamilyTag> tags = {
      FamilyTag::poly_bernoulli(-2), FamilyTag::poly_bernoulli(3), FamilyTag::higher_bernoulli(2),
      FamilyTag::euler(1), FamilyTag::frobenius_euler(2, Rational(3))};
  for (const FamilyTag& tag : tags) {
    const AppellFamily fam = make_appell_family(tag, 8);
    Polynomial s = Polynomial::constant(1);
    for (std::size_t n = 1; n <= 8; ++n) {
      s = appell_step(fam, s);
      CHECK(s == appell_polynomial(fam, n));
    }
  }
}

TEST_CASE("lowering and Appell identity for a generic family") {
  oracles::RandomValues rnd(206);
  for (int i = 0; i < 5; ++i) {
    const AppellFamily fam(rnd.invertible_series(7), "random");
    for (std::size_t n = 1; n <= 7; ++n) {
      const Polynomial s_n = appell_polynomial(fam, n);
      // t s_n = n s_{n-1}
      CHECK(apply(Series::t_power(1, 7), s_n) ==
            Rational(n) * appell_polynomial(fam, n - 1));
      // s_n(x + y) = sum_k C(n,k) s_k(y) x^{n-k}
      for (const Rational& y : {Rational(1), Rational(-2), Rational(1, 3)}) {
        Polynomial sum;
        for (std::size_t j = 0; j <= n; ++j) {
          const Rational c =
              Rational(binomial(static_cast<long long>(n), static_cast<long long>(j))) *
              appell_polynomial(fam, j)(y);
          if (c != 0) sum += Polynomial::monomial(n - j, c);
        }
        CHECK(s_n.shifted(y) == sum);
      }
    }
  }
}

TEST_CASE("connection matrix basics") {
  const AppellFamily pb1 = make_appell_family(FamilyTag::poly_bernoulli(1), 5);
  const ConnectionMatrix id = connection_appell(pb1, pb1, 5);
  CHECK(id.is_identity());
  CHECK(id.entry(3, 5) == 0); // above the diagonal

  // expansion actually holds: s_N = sum_m c_{N,m} r_m
  const AppellFamily hb2 = make_appell_family(FamilyTag::higher_bernoulli(2), 5);
  const ConnectionMatrix c = connection_appell(pb1, hb2, 5);
  for (std::size_t N = 0; N <= 5; ++N) {
    Polynomial sum;
    for (std::size_t m = 0; m <= N; ++m) sum += c.entry(N, m) * appell_polynomial(hb2, m);
    CHECK(sum == appell_polynomial(pb1, N));
  }
}

TEST_CASE("connection coefficients match the closed forms") {
  // toward the order-r Bernoulli basis:
  // C_{n,m} = C(n,m) sum_l r!(n-m)_l/(l+r)! S_2(l+r,r) B^{(k)}_{n-l-m}
  {
    const std::size_t n = 4, r = 2;
    const long long k = 3;
    const ConnectionMatrix c =
        connection_appell(make_appell_family(FamilyTag::poly_bernoulli(k), n),
                          make_appell_family(FamilyTag::higher_bernoulli(r), n), n);
    for (std::size_t m = 0; m <= n; ++m) {
      Rational s = 0;
      for (std::size_t l = 0; l + m <= n; ++l)
        s += Rational(factorial(r) * stirling2(static_cast<long long>(l + r),
                                               static_cast<long long>(r)),
                      factorial(l + r)) *
             falling_factorial(Rational(n - m), l) * poly_bernoulli_number(n - l - m, k);
      CHECK(c.entry(n, m) ==
            Rational(binomial(static_cast<long long>(n), static_cast<long long>(m))) * s);
    }
  }
  // toward the order-r Euler basis: C_{n,m} = C(n,m)/2^r sum_j C(r,j) B^{(k)}_{n-m}(j)
  {
    const std::size_t n = 5, r = 2;
    const long long k = -1;
    const ConnectionMatrix c =
        connection_appell(make_appell_family(FamilyTag::poly_bernoulli(k), n),
                          make_appell_family(FamilyTag::euler(r), n), n);
    for (std::size_t m = 0; m <= n; ++m) {
      Rational s = 0;
      const Polynomial b = poly_bernoulli_polynomial(n - m, k);
      for (std::size_t j = 0; j <= r; ++j)
        s += Rational(binomial(static_cast<long long>(r), static_cast<long long>(j))) *
             b(Rational(j));
      CHECK(c.entry(n, m) ==
            Rational(binomial(static_cast<long long>(n), static_cast<long long>(m))) * s /
                rational_pow(Rational(2), static_cast<long long>(r)));
    }
  }
}

TEST_CASE("connection matrices invert each other") {
  const std::vector<FamilyTag> tags = {FamilyTag::poly_bernoulli(2),
                                       FamilyTag::higher_bernoulli(3), FamilyTag::euler(2),
                                       FamilyTag::frobenius_euler(1, Rational(1, 2))};
  for (const FamilyTag& a : tags)
    for (const FamilyTag& b : tags) {
      const AppellFamily fa = make_appell_family(a, 6);
      const AppellFamily fb = make_appell_family(b, 6);
      CHECK((connection_appell(fa, fb, 6) * connection_appell(fb, fa, 6)).is_identity());
    }
}

TEST_CASE("sheffer orthogonality") {
  const AppellFamily trivial(Series::one(8), "monomials");
  CHECK(sheffer_orthogonality_check(trivial, 8).pass);

  CHECK(sheffer_orthogonality_check(make_appell_family(FamilyTag::poly_bernoulli(-2), 8), 8).pass);
  CHECK(sheffer_orthogonality_check(
            make_appell_family(FamilyTag::frobenius_euler(2, Rational(3)), 8), 8)
            .pass);

  // the sweep interlocks pairing, product and inversion on arbitrary
  // invertible series as well
  oracles::RandomValues rnd(207);
  for (int i = 0; i < 3; ++i) {
    const OrthogonalityReport r =
        sheffer_orthogonality_check(AppellFamily(rnd.invertible_series(6), "random"), 6);
    CHECK(r.pass);
    CHECK(r.failures.empty());
  }
}
