#include "polybern/identities.hpp"

#include "doctest.h"

#include <algorithm>

using namespace polybern;

TEST_CASE("theorem 1") {
  CHECK(check_theorem1(0, 1).pass);
  CHECK(check_theorem1(3, 2).pass);
  CHECK(check_theorem1(4, -2).pass);
  const CheckReport r = check_theorem1(2, 0);
  CHECK(r.identity == "thm1");
  CHECK(r.params.n == 2);
  CHECK(r.params.k == 0);
  CHECK_FALSE(r.params.r.has_value());
  CHECK(r.lhs == r.rhs);
}

TEST_CASE("corollary 2") {
  CHECK(check_corollary2(1, 1).pass);
  CHECK(check_corollary2(5, 3).pass);
  CHECK(check_corollary2(6, -3).pass);
  CHECK_THROWS_AS(check_corollary2(0, 1), std::invalid_argument);
}

TEST_CASE("theorem 3") {
  CHECK(check_theorem3(1, 0).pass);
  CHECK(check_theorem3(4, 2).pass);
  CHECK(check_theorem3(5, -1).pass);
  CHECK_THROWS_AS(check_theorem3(0, 2), std::invalid_argument);
}

TEST_CASE("two-way evaluation identity") {
  for (long long k = -4; k <= 4; ++k) {
    const CheckReport r = check_eq42(0, k);
    CHECK(r.pass);
    CHECK(r.lhs == Polynomial::constant(1));
  }
  CHECK(check_eq42(4, 3).pass);
  CHECK(check_eq42(7, -2).pass);
}

TEST_CASE("theorem 4") {
  // r = 0 collapses to the plain binomial expansion
  CHECK(check_theorem4(5, 2, 0).pass);
  CHECK(check_theorem4(3, 2, 1).pass);
  CHECK(check_theorem4(5, -2, 3).pass);
  const CheckReport r = check_theorem4(4, 1, 2);
  CHECK(r.pass);
  CHECK(r.params.r == 2);
}

TEST_CASE("theorem 5") {
  CHECK(check_theorem5(5, -1, 0).pass);
  CHECK(check_theorem5(4, 1, 2).pass);
  CHECK(check_theorem5(6, -1, 1).pass);
}

TEST_CASE("theorem 6") {
  CHECK(check_theorem6(3, 2, 2, Rational(3)).pass);
  CHECK(check_theorem6(5, -3, 1, Rational(1, 2)).pass);
  CHECK_THROWS_AS(check_theorem6(3, 2, 2, Rational(1)), std::invalid_argument);

  // lambda = -1 coincides with Theorem 5 coefficient-for-coefficient
  for (std::size_t n = 0; n <= 6; ++n)
    for (long long k : {-2LL, 1LL, 3LL})
      for (std::size_t r = 0; r <= 3; ++r) {
        const CheckReport five = check_theorem5(n, k, r);
        const CheckReport six = check_theorem6(n, k, r, Rational(-1));
        CHECK(five.pass);
        CHECK(six.pass);
        CHECK(five.lhs == six.lhs);
        CHECK(five.rhs == six.rhs);
      }
}

TEST_CASE("appell basics bundle") {
  for (long long k = -4; k <= 4; ++k) CHECK(check_appell_basics(1, k).pass);
  CHECK(check_appell_basics(6, 2).pass);
  CHECK(check_appell_basics(6, -2).pass);
  CHECK_THROWS_AS(check_appell_basics(0, 1), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
  const CheckReport a = check_theorem6(4, -2, 2, Rational(1, 2));
  const CheckReport b = check_theorem6(4, -2, 2, Rational(1, 2));
  CHECK(a == b);
}

TEST_CASE("run_grid on an empty intersection") {
  GridSpec spec;
  spec.k_min = 3;
  spec.k_max = -3;
  CHECK(run_grid(spec).empty());
}

TEST_CASE("run_grid on a single point") {
  GridSpec spec;
  spec.n_min = spec.n_max = 3;
  spec.k_min = spec.k_max = 2;
  spec.r_min = spec.r_max = 1;
  spec.lambdas = {Rational(2)};
  const std::vector<CheckReport> reports = run_grid(spec);
  REQUIRE(reports.size() == 8);
  for (const CheckReport& r : reports) {
    CHECK(r.pass);
    CHECK(r.params.n == 3);
    CHECK(r.params.k == 2);
  }
  std::vector<std::string> names;
  names.reserve(reports.size());
  for (const CheckReport& r : reports) names.push_back(r.identity);
  CHECK(names == known_identities());
}

TEST_CASE("run_grid respects the identity filter and rejects unknown names") {
  GridSpec spec;
  spec.n_max = 3;
  spec.k_min = 1;
  spec.k_max = 1;
  spec.identities = {"thm1"};
  const std::vector<CheckReport> reports = run_grid(spec);
  CHECK(reports.size() == 4); // n = 0..3
  for (const CheckReport& r : reports) {
    CHECK(r.identity == "thm1");
    CHECK(r.pass);
  }

  spec.identities = {"nosuch"};
  CHECK_THROWS_AS(run_grid(spec), std::invalid_argument);

  GridSpec bad;
  bad.lambdas = {Rational(1)};
  CHECK_THROWS_AS(run_grid(bad), std::invalid_argument);
}

TEST_CASE("run_grid output is ordered and lambda-deduplicated") {
  GridSpec spec;
  spec.n_min = 1;
  spec.n_max = 2;
  spec.k_min = -1;
  spec.k_max = 1;
  spec.r_min = 0;
  spec.r_max = 1;
  spec.lambdas = {Rational(3), Rational(-1), Rational(3)};
  const std::vector<CheckReport> a = run_grid(spec);
  const std::vector<CheckReport> b = run_grid(spec);
  CHECK(a == b);

  // thm6 reports scan lambdas in ascending order without repeats
  std::vector<Rational> seen;
  for (const CheckReport& r : a)
    if (r.identity == "thm6" && r.params.n == 1 && r.params.k == -1 && r.params.r == 0)
      seen.push_back(*r.params.lambda);
  CHECK(seen == std::vector<Rational>{Rational(-1), Rational(3)});
}
