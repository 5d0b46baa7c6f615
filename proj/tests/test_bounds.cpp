#include "partpoly/bounds.hpp"
#include "partpoly/colored_counts.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace partpoly;

namespace {

const PolyCache& shared_cache() {
  static PolyCache cache(100);
  return cache;
}

}  // namespace

TEST_CASE("mu matches direct substitution") {
  CHECK(mu(1).midpoint_double() ==
        Catch::Approx(std::acos(-1.0) * std::sqrt(23.0) / 6.0).epsilon(1e-12));
  CHECK(mu(5).midpoint_double() ==
        Catch::Approx(std::acos(-1.0) * std::sqrt(119.0) / 6.0).epsilon(1e-12));
  CHECK_THROWS_AS(mu(0), std::invalid_argument);
}

TEST_CASE("mu squared is pi^2 (24n-1)/36") {
  for (long n : {1L, 2L, 10L, 500L}) {
    const Enclosure m = mu(n);
    const double lhs = (m * m).midpoint_double();
    const double rhs = std::acos(-1.0) * std::acos(-1.0) * (24.0 * n - 1.0) / 36.0;
    CHECK(lhs == Catch::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("two-sided estimate basics") {
  const BoundPair at1 = bo2_bounds(1);
  CHECK(at1.lower.is_exact_zero());  // the 1 - 1/sqrt(1) factor vanishes exactly
  CHECK(at1.upper.strictly_positive());

  const std::vector<Int> p = partition_sequence(200);
  // p(25) = 1958 from the series oracle
  CHECK(p[25] == 1958);
  const BoundPair at25 = bo2_bounds(25);
  CHECK(at25.lower.entirely_below(Rational(p[25])));
  CHECK(at25.upper.entirely_above(Rational(p[25])));
  const BoundPair at200 = bo2_bounds(200);
  CHECK(at200.lower.entirely_below(Rational(Int("3972999029388"))));
  CHECK(at200.upper.entirely_above(Rational(Int("3972999029388"))));
  CHECK_THROWS_AS(bo2_bounds(0), std::invalid_argument);
}

TEST_CASE("sandwich certified across 2..1000") {
  const std::vector<Int> p = partition_sequence(1000);
  for (long m = 2; m <= 1000; ++m) REQUIRE(bo2_sandwich_certified(m, p[m]));
}

TEST_CASE("series error bound: direct value, positivity, monotonicity in N") {
  // N=1, n=1: (pi^2/sqrt(3)) (sinh(mu)/mu^3 + 1/6 - 1/mu^2), mu = pi sqrt(23)/6
  const double pi = std::acos(-1.0);
  const double mu1 = pi * std::sqrt(23.0) / 6.0;
  const double direct = pi * pi / std::sqrt(3.0) *
                        (std::sinh(mu1) / (mu1 * mu1 * mu1) + 1.0 / 6.0 - 1.0 / (mu1 * mu1));
  CHECK(lehmer_error_bound(1, 1).midpoint_double() == Catch::Approx(direct).epsilon(1e-9));

  CHECK(lehmer_error_bound(100, 2).entirely_less(lehmer_error_bound(100, 1)));
  CHECK(lehmer_error_bound(200, 1).strictly_positive());
  for (long n : {1L, 5L, 50L, 200L})
    for (long N : {1L, 2L, 3L}) CHECK(lehmer_error_bound(n, N).strictly_positive());
  CHECK_THROWS_AS(lehmer_error_bound(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lehmer_error_bound(1, 0), std::invalid_argument);
}

TEST_CASE("growth inequality threshold") {
  CHECK_FALSE(wachstum_holds(33));
  CHECK(wachstum_holds(34));
  CHECK(wachstum_holds(85));
  CHECK_THROWS_AS(wachstum_holds(1), std::invalid_argument);
}

TEST_CASE("growth inequality switches exactly once up to 1e4") {
  long first_true = -1;
  for (long a = 2; a <= 10000; ++a) {
    const bool h = wachstum_holds(a);
    if (h && first_true < 0) first_true = a;
    if (first_true > 0) REQUIRE(h);  // never drops back to false
  }
  CHECK(first_true == 34);
}

TEST_CASE("P_n(2) against (13/4)(1 + ln 2n)") {
  const PolyCache& cache = shared_cache();
  CHECK_FALSE(eq_n1_holds(cache, 1));  // 2 < (13/4)(1+ln 2) ~ 5.50
  CHECK_FALSE(eq_n1_holds(cache, 2));  // 5 < ~7.76
  CHECK(eq_n1_holds(cache, 3));
  CHECK(eq_n1_holds(cache, 4));
  for (int n = 5; n <= 86; ++n) REQUIRE(eq_n1_holds(cache, n));
  CHECK_THROWS_AS(eq_n1_holds(cache, 0), std::out_of_range);
}

TEST_CASE("P_n(x) stays above 1 + ln 2n") {
  const PolyCache& cache = shared_cache();
  CHECK(hilfs_holds(cache, 2, parse_rational("2.000001")));
  CHECK(hilfs_holds(cache, 4, Rational(1)));
  CHECK_FALSE(hilfs_holds(cache, 2, Rational(0)));
  for (int n = 4; n <= 40; ++n) CHECK(hilfs_holds(cache, n, Rational(1)));
}

TEST_CASE("enclosure arithmetic sanity") {
  const Enclosure one = Enclosure::from_integer(1);
  const Enclosure three = Enclosure::from_integer(3);
  CHECK((one / three).contains(make_rational(1, 3)));
  CHECK((Enclosure::sqrt(Enclosure::from_integer(2)) * Enclosure::sqrt(Enclosure::from_integer(2)))
            .contains(Rational(2)));
  // pi lies strictly between two close rationals
  CHECK(Enclosure::pi().entirely_above(make_rational(314159, 100000)));
  CHECK(Enclosure::pi().entirely_below(make_rational(314160, 100000)));
  CHECK((-(one + one)).strictly_negative());
  CHECK_THROWS_AS(one / (one - one), std::domain_error);
  CHECK_THROWS_AS(Enclosure::log(one - one), std::domain_error);
  CHECK_THROWS_AS(Enclosure::sqrt(-one), std::domain_error);
}
